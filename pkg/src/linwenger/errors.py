"""Exception types shared across the package."""


class ConfigError(ValueError):
    """Invalid construction parameters: bad prime, modulus, family, regime."""


class NonPrime(ConfigError):
    """The characteristic is not a prime number."""


class ReducibleModulus(ConfigError):
    """The requested modulus polynomial factors over F_p."""


class DegreeMismatch(ConfigError):
    """Modulus is not monic of the requested degree."""


class FieldMismatch(ConfigError):
    """Arithmetic attempted between elements of different fields."""


class InvalidRank(ConfigError):
    """Requested matrix rank exceeds the matrix dimensions."""


class UnsupportedRegime(ConfigError):
    """The closed form or witness construction is undefined for these parameters."""


class ThetaNotInjective(ConfigError):
    """Spectral bookkeeping requires the generator map u -> (1, f_2(u), ...) to be injective."""


class SamePoint(ConfigError):
    """A vertex pair operation was handed two equal vertices."""


class NoSixCycle(ConfigError):
    """No 6-cycle exists in this parameter regime (the girth is 8)."""


class OutOfRange(ConfigError):
    """Vertex id outside [0, 2*q^(m+1))."""


class BudgetExceeded(RuntimeError):
    """The operation would exceed the configured vertex or evaluation budget."""


class Acyclic(RuntimeError):
    """Girth is undefined: the graph contains no cycle."""


class SolveFailed(RuntimeError):
    """An internal linear system that must be solvable was not; indicates a bug."""
