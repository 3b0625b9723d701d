"""Reconstruction of line-current positions and phasor currents from
magnetic field samples on a surrounding contour."""

from ._linerec import *  # noqa: F401,F403
from ._linerec import __doc__ as _core_doc

__doc__ = _core_doc
