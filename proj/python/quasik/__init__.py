"""Vertex connectivity, quasi k-connectivity and contractible edges."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
