"""Two-parameter solutions of the cubic wave equation on R^{1+3}.

Python bindings for the C++ core: Duffing ODE trajectories, lifespan
integrals, the threshold curve beta(X), nine-cell classification, physical
field evaluation through the conformal compactification, and radial
Fourier / Sobolev / Lebesgue norms.
"""

try:
    # Installed-wheel layout: the extension lives inside this package.
    from ._core import *  # noqa: F401,F403
    from ._core import __version__  # noqa: F401
except ImportError:
    # Build-tree layout: the extension sits on PYTHONPATH next to the
    # native build products.
    from _core import *  # noqa: F401,F403
    from _core import __version__  # noqa: F401
