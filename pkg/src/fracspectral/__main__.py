"""Module entry point: `python -m fracspectral ...`."""
import sys

from .cli import main

sys.exit(main())
