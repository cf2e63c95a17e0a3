"""Path-tracking control toolkit.

Blended front/rear lateral steering laws on a kinematic bicycle, virtual-border
curvature-aware speed regulation, and a deterministic closed-loop simulator.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
