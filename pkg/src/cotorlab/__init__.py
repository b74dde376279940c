"""cotorlab: exact cotensor/Cotor and Hochschild cohomology computations.

Comodules over a finite-dimensional coalgebra are the same thing as modules
over the dual algebra; this library realizes the translation explicitly and
verifies, by computing both sides, that cotensor products and their derived
functors match Hochschild cohomology of the corresponding bimodules - in the
plain finite-dimensional setting, level by level along finite towers of
algebras, degreewise for graded data, and for differential graded data in a
finite total-degree window.
"""

__version__ = "0.1.0"

from cotorlab.errors import InputError, ValidationError
from cotorlab.linalg import CochainComplex, Field, Matrix

__all__ = [
    "CochainComplex",
    "Field",
    "InputError",
    "Matrix",
    "ValidationError",
    "__version__",
]
