"""Exact censuses of algebraic numbers by Weil height and of integer
polynomials by Mahler measure."""

from .algnum import RealAlgebraic
from .polyz import IntPoly
from .rootloc import RootCount

__all__ = ["IntPoly", "RealAlgebraic", "RootCount"]
__version__ = "0.1.0"
