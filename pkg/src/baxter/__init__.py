"""Baxter objects, the bijections between them, and their q-polynomials."""

from .errors import BaxterError, LimitExceeded
from .perm import Family, Pattern

__version__ = "0.1.0"

__all__ = ["BaxterError", "Family", "LimitExceeded", "Pattern", "__version__"]
