"""Exact calculus of weighted charts, graded bundles, and rescaled operators."""

try:
    from gradedgeom._core import *  # noqa: F401,F403
    from gradedgeom._core import __doc__  # noqa: F401
except ImportError:  # building out of tree: the extension sits next to the package
    from _core import *  # noqa: F401,F403
