"""Run the command-line interface with ``python -m tanglekit``."""

from __future__ import annotations

import sys

from .cli import main

sys.exit(main())
