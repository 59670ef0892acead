"""Exception types shared across the package."""


class InvalidState(ValueError):
    """The input does not describe a physical X-state density matrix."""


class DegenerateLimit(ArithmeticError):
    """A closed-form expression hit a diverging logarithm; use a fallback."""


class RootNotFound(RuntimeError):
    """No sign change was found while bracketing a root."""


class InternalConsistencyError(RuntimeError):
    """A computed quantity violates an exact identity beyond round-off."""
