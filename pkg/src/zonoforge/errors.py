"""Exception types shared across the package."""


class ZonoforgeError(Exception):
    """Base class for every error raised by this package."""


class GroundSetMismatch(ZonoforgeError):
    """Operands live over different ground sets."""


class DimensionOutOfRange(ZonoforgeError):
    """A dimension parameter violates 1 <= d <= n (or an operation's range)."""


class AuditTooLarge(ZonoforgeError):
    """An exhaustive audit was requested beyond the configured caps."""


class DegenerateInput(ZonoforgeError):
    """Geometrically or structurally degenerate input (repeated columns,
    malformed cube, bad facet position)."""


class GroundTooSmall(ZonoforgeError):
    """Contraction requested on a minimal ground set (n == d)."""


class NotSeparated(ZonoforgeError):
    """A collection required to be r-separated is not."""


class NotMaxSize(ZonoforgeError):
    """A collection required to have the maximal separated size does not."""


class NoCubeForType(ZonoforgeError):
    """Spectrum reconstruction found no bottom for some type."""


class AmbiguousCube(ZonoforgeError):
    """Spectrum reconstruction found several bottoms for one type."""


class SpectrumSizeMismatch(ZonoforgeError):
    """A tiling's vertex-label count deviates from the size law."""


class MembraneMismatch(ZonoforgeError):
    """A membrane does not belong to the tiling it was paired with."""


class NotNested(ZonoforgeError):
    """Inversion sets required to form a chain do not."""


class InvariantViolation(ZonoforgeError):
    """A fact that holds for every valid input failed; always a bug report,
    either in this library or in hand-fed data that bypassed validation."""


class CyclicPrecedence(InvariantViolation):
    """The rear-meets-front relation of a tiling contains a cycle."""


class NotTotallyOrdered(InvariantViolation):
    """A packet of cube types is not totally ordered by precedence."""


class MembraneValidationFailed(InvariantViolation):
    """An ideal's surface did not validate as a membrane."""
