#!/usr/bin/env python3
"""
Console entry point for wreathkit.
"""

import sys
from typing import List, Optional

from wreathkit.main import main as run


def main(argv: Optional[List[str]] = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
