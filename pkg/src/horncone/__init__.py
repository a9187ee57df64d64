"""Generalized Littlewood-Richardson coefficients and the cones K(n, m).

The subpackages are layered: ``seqcore`` and ``lr`` supply partition
algebra and LR coefficients, ``genlr`` the chain sums f, ``flagq`` and
``horn`` the quiver data and inequality systems, ``cone`` exact membership,
``pgroups`` exact sequences of finite abelian p-groups, and ``spectra`` the
Hermitian-matrix side.
"""

__version__ = "0.1.0"

from ._backend import BACKEND  # noqa: E402

__all__ = ["BACKEND", "__version__"]
