"""Exceptions shared across the package."""


class ExactnessError(ArithmeticError):
    """A division that the theory guarantees to be exact left a remainder."""


class VerificationError(Exception):
    """An identity that should hold unconditionally failed to check out."""
