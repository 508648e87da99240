"""Robust nonparametric confidence intervals and sign tests for the median
under eps-contamination."""

try:
    # installed layout: the extension lives inside the package
    from ._robustmedian import *  # noqa: F401,F403
    from ._robustmedian import __version__  # noqa: F401
except ImportError:
    # build-tree layout: the extension sits on sys.path by itself
    from _robustmedian import *  # noqa: F401,F403
    from _robustmedian import __version__  # noqa: F401
