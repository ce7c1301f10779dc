"""Exact scl computations on extensions of Thompson's group T and simplicial-volume certificates."""

from .extensions import EPrimeElem, TTildeElem
from .plcircle import PLMap, builder_a, builder_b, builder_t_n
from .rotation import rot_exact
from .scl import element_with_scl, scl_eprime, scl_ttilde

__version__ = "0.1.0"
