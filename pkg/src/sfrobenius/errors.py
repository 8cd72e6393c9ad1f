"""Exception types shared across the package."""


class SFrobError(Exception):
    """Base class for all package errors."""


class NotCoprime(SFrobError):
    """Input tuple has gcd > 1."""


class TooSmall(SFrobError):
    """Input tuple has an entry <= 1 or fewer than 2 distinct entries."""


class DegenerateReduction(SFrobError):
    """Redundancy removal would leave fewer than 2 entries (impossible for
    valid coprime inputs with a_1 > 1; raised as an internal assertion)."""


class CeilingTooLarge(SFrobError):
    """Requested denumerant table exceeds the configured cell cap."""


class UncertifiedCeiling(SFrobError):
    """s_frobenius_exact was called with a nonpositive ceiling."""


class InternalRankError(SFrobError):
    """Kernel construction produced a basis of unexpected rank."""


class EnumerationBudgetExceeded(SFrobError):
    """Sphere enumeration exceeded its node cap."""


class DimensionTooSmall(SFrobError):
    """A bound or constant is undefined for this N (typically N = 2)."""


class IndexOutOfRange(SFrobError):
    """Face dimension m outside 0..N-1."""


class ConfigError(SFrobError):
    """Invalid sweep/verify configuration."""


class ResourceCapExceeded(SFrobError):
    """A per-row computation hit a resource cap; the row is skippable."""


class ExhaustedSampling(SFrobError):
    """Random tuple rejection sampling failed too many times in a row."""
