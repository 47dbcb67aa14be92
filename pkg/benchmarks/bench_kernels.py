"""Compiled kernels vs the numpy fallback; see ``python -m velu_kit.bench --help``."""

import sys

from velu_kit.bench import main

if __name__ == "__main__":
    sys.exit(main())
