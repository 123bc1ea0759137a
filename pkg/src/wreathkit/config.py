"""
Runtime configuration.

Values come from the environment (optionally a .env file) and can be overridden per
invocation by the command line.
"""

import logging
import os
from functools import lru_cache
from typing import Optional

from dotenv import find_dotenv, load_dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from .errors import ConfigurationError

logger = logging.getLogger(__name__)

ENV_PREFIX = "WREATHKIT_"


class Settings(BaseModel):
    """Tunable constants of the decision procedures and oracles"""

    beta: int = Field(64, ge=2, description="Smoothness bound for torsion orders")
    radius: int = Field(8, ge=0, description="Default Cayley-ball radius for oracle searches")
    radius_cap: int = Field(8, ge=0, description="Largest radius enumerate_ball accepts")
    max_group_order: int = Field(4096, ge=1, description="Guard for exhaustive enumeration of finite groups")
    log_level: str = Field("WARNING", description="Logging level used by the command line")

    model_config = ConfigDict(frozen=True)


def _read_env(name: str) -> Optional[str]:
    value = os.getenv(ENV_PREFIX + name)
    return value if value not in (None, "") else None


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Load settings from the environment, reading a .env file first if one is found."""
    env_path = os.getenv("DOTENV_PATH") or find_dotenv(usecwd=True)
    if env_path:
        load_dotenv(env_path)

    raw = {}
    for field_name in Settings.model_fields:
        value = _read_env(field_name.upper())
        if value is not None:
            raw[field_name] = value

    try:
        settings = Settings(**raw)
    except ValidationError as e:
        raise ConfigurationError(f"Invalid wreathkit configuration: {e}") from e

    logger.debug(f"Loaded settings: {settings.model_dump()}")
    return settings


def reset_settings() -> None:
    """Forget cached settings so the next get_settings() reads the environment again."""
    get_settings.cache_clear()


def override_settings(settings: Settings, **changes) -> Settings:
    """Return a copy of settings with the non-None changes applied."""
    updates = {key: value for key, value in changes.items() if value is not None}
    if not updates:
        return settings
    try:
        return Settings(**{**settings.model_dump(), **updates})
    except ValidationError as e:
        raise ConfigurationError(f"Invalid override: {e}") from e
