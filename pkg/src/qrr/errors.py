"""Exception hierarchy for the q-series engine.

Everything raised on purpose by this package derives from QSeriesError, so
callers (notably the CLI) can distinguish engine failures from bugs.
"""


class QSeriesError(Exception):
    """Base class for all engine errors."""


class NonUnitError(QSeriesError):
    """Inversion (or division) by a series whose lowest coefficient is not +1 or -1.

    Integer-exact reciprocals only exist for unit leading coefficients; we
    refuse rather than silently widening the coefficient ring.
    """


class OutOfWindowError(QSeriesError):
    """A coefficient outside the guaranteed-exact window was requested or supplied.

    Reading past the precision bound must be an error, never a silent zero:
    a fabricated zero would forge vanishing-coefficient evidence.
    """


class InsufficientPrecisionError(QSeriesError):
    """A comparison or verification window exceeds the precision actually available."""


class ZeroProductError(QSeriesError):
    """A Pochhammer generator degenerated to +1 * q^0, making the product identically zero."""


class UnsupportedSpecializationError(QSeriesError):
    """A monomial specialization produced a generator exponent that is not formal-series legal."""


class DissectError(QSeriesError):
    """Dissection of a series with negative valuation (residue reindexing would be ambiguous)."""


class GuardGrowthError(QSeriesError):
    """Iterative deepening hit the working-order cap before reaching the requested precision."""


class ParseError(QSeriesError):
    """Expression text rejected by the DSL lexer or parser.

    ``position`` is the byte offset of the offending token in the input.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at byte {position})")
        self.message = message
        self.position = position


class UnknownIdentityError(QSeriesError):
    """Registry lookup for an id that does not exist."""

    def __init__(self, identity_id: str, known_ids):
        known = ", ".join(known_ids)
        super().__init__(f"unknown identity {identity_id!r}; valid ids: {known}")
        self.identity_id = identity_id
        self.known_ids = tuple(known_ids)


class RegistryFormatError(QSeriesError):
    """A registry file or built-in record failed validation."""
