"""ybx: exact computations in Yang-Baxter type algebras, Grothendieck
polynomials, graph polynomials and related number families."""

from .errors import SizeError, IdentityFailure
from .exactpoly import ExactPoly, var, const

__all__ = ["ExactPoly", "var", "const", "SizeError", "IdentityFailure"]
__version__ = "0.1.0"
