"""Wigner little-group rotations for massless particles.

Closed-form (quaternion / spherical-trigonometry) and matrix-composition
routes to the little-group rotation angle of a lightlike momentum under a
pure boost, plus Thomas-rotation and spherical-excess machinery.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
