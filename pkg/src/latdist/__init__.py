"""Exact counting of distance statistics on integer lattices."""

from .errors import CapacityError, DomainError, WideOverflowError

__all__ = ["CapacityError", "DomainError", "WideOverflowError"]
__version__ = "0.1.0"
