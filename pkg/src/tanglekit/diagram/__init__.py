"""Diagram model, constructors, moves, and linking data."""

from __future__ import annotations

from .build import *  # noqa: F401,F403
from .build import __all__ as _build_all
from .core import *  # noqa: F401,F403
from .core import __all__ as _core_all
from .linking import *  # noqa: F401,F403
from .linking import __all__ as _linking_all
from .moves import *  # noqa: F401,F403
from .moves import __all__ as _moves_all

__all__ = list(_core_all) + list(_build_all) + list(_moves_all) + list(_linking_all)
