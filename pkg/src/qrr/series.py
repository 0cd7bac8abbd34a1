"""Truncated Laurent series over exact integers, with explicit precision tracking.

A QSeries stores the coefficients of q^valuation .. q^(precision-1) and the
guarantee that every coefficient of q^n with n < precision is exact.  Nothing
is known about exponents >= precision, and reading them is an error.

All coefficients are arbitrary-precision Python ints; there is no floating
point anywhere in this module.  Multiplication is plain schoolbook
convolution, O(n^2) in the window length: at the desk-scale orders this
package targets (a few thousand terms) that is entirely adequate and keeps
the arithmetic trivially auditable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import InsufficientPrecisionError, NonUnitError, OutOfWindowError

__all__ = [
    "QSeries",
    "from_terms",
    "zero",
    "one",
    "monomial",
    "equal_to_order",
]


def _normalized(valuation: int, coeffs: list, precision: int) -> "QSeries":
    """Strip leading zeros; collapse an all-zero window to the canonical zero form."""
    i = 0
    n = len(coeffs)
    while i < n and coeffs[i] == 0:
        i += 1
    if i == n:
        return QSeries(precision, (), precision)
    return QSeries(valuation + i, tuple(coeffs[i:]), precision)


@dataclass(frozen=True)
class QSeries:
    """A truncated Laurent series: sum of coeffs[i] * q^(valuation+i), exact below precision.

    Invariants (enforced at construction):
      * len(coeffs) == precision - valuation
      * coeffs[0] != 0, or the series is the canonical zero form
        (valuation == precision, empty coeffs)
    """

    valuation: int
    coeffs: tuple
    precision: int

    def __post_init__(self):
        if len(self.coeffs) != self.precision - self.valuation:
            raise ValueError(
                f"coeffs length {len(self.coeffs)} != precision {self.precision}"
                f" - valuation {self.valuation}"
            )
        if self.coeffs:
            if self.coeffs[0] == 0:
                raise ValueError("leading coefficient must be nonzero (unnormalized series)")
        elif self.valuation != self.precision:
            raise ValueError("zero-to-precision series must have valuation == precision")

    # -- inspection ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        """True when no nonzero coefficient is known below the precision bound."""
        return not self.coeffs

    def coeff(self, n: int) -> int:
        """Exact coefficient of q^n.  Raises OutOfWindowError for n >= precision."""
        if n >= self.precision:
            raise OutOfWindowError(
                f"coefficient of q^{n} requested but series is only exact below q^{self.precision}"
            )
        if n < self.valuation:
            return 0
        return self.coeffs[n - self.valuation]

    def __str__(self) -> str:
        if not self.coeffs:
            return f"O(q^{self.precision})"
        parts = []
        shown = 0
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if shown == 12:
                parts.append("+ ...")
                break
            e = self.valuation + i
            sign = "- " if c < 0 else ("+ " if parts else "")
            mag = abs(c)
            if e == 0:
                term = str(mag)
            else:
                qpow = "q" if e == 1 else f"q^{e}"
                term = qpow if mag == 1 else f"{mag}*{qpow}"
            parts.append(sign + term)
            shown += 1
        parts.append(f"+ O(q^{self.precision})")
        return " ".join(parts)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "QSeries") -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        prec = min(self.precision, other.precision)
        lo = min(self.valuation, other.valuation, prec)
        out = [0] * (prec - lo)
        for i, c in enumerate(self.coeffs):
            n = self.valuation + i
            if n < prec:
                out[n - lo] += c
        for i, c in enumerate(other.coeffs):
            n = other.valuation + i
            if n < prec:
                out[n - lo] += c
        return _normalized(lo, out, prec)

    def __neg__(self) -> "QSeries":
        return QSeries(self.valuation, tuple(-c for c in self.coeffs), self.precision)

    def __sub__(self, other: "QSeries") -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def scale(self, c: int) -> "QSeries":
        """Multiply every coefficient by the integer c."""
        if c == 0:
            return zero(self.precision)
        return QSeries(self.valuation, tuple(c * x for x in self.coeffs), self.precision)

    def __mul__(self, other: "QSeries") -> "QSeries":
        """Cauchy product.

        Precision rule: the unknown tail O(q^Pf) of f contributes terms from
        exponent Pf + v_g onward (and symmetrically), so the product is exact
        below min(Pf + v_g, Pg + v_f).  The canonical zero form (valuation ==
        precision) makes this formula correct for zero operands too.
        """
        if not isinstance(other, QSeries):
            return NotImplemented
        prec = min(self.precision + other.valuation, other.precision + self.valuation)
        if not self.coeffs or not other.coeffs:
            return zero(prec)
        lo = self.valuation + other.valuation
        length = prec - lo
        if length <= 0:
            return zero(prec)
        out = [0] * length
        a, b = self.coeffs, other.coeffs
        if len(b) < len(a):
            a, b = b, a
        for i, x in enumerate(a):
            if x == 0 or i >= length:
                continue
            top = min(len(b), length - i)
            for j in range(top):
                out[i + j] += x * b[j]
        return _normalized(lo, out, prec)

    def invert(self) -> "QSeries":
        """Multiplicative inverse, requires unit (+-1) leading coefficient.

        If f = q^v * u with u(0) = +-1 exact below P - v (relative), then 1/u
        is exact to the same relative order and 1/f = q^-v / u, giving
        precision P - 2v.
        """
        if not self.coeffs:
            raise NonUnitError("cannot invert a series that is zero to its precision")
        lead = self.coeffs[0]
        if lead not in (1, -1):
            raise NonUnitError(
                f"leading coefficient {lead} is not a unit over the integers"
            )
        u = self.coeffs
        length = len(u)
        inv = [0] * length
        inv[0] = lead
        for n in range(1, length):
            acc = 0
            for k in range(1, n + 1):
                if u[k] != 0 and inv[n - k] != 0:
                    acc += u[k] * inv[n - k]
            inv[n] = -lead * acc
        v = self.valuation
        return _normalized(-v, inv, self.precision - 2 * v)

    def pow(self, e: int) -> "QSeries":
        """Integer power by repeated squaring; negative e inverts first."""
        if e < 0:
            return self.invert().pow(-e)
        if e == 0:
            # Relative precision of the operand; x^0 == 1 exactly.
            return one(max(self.precision - self.valuation, 1))
        result = None
        base = self
        while True:
            if e & 1:
                result = base if result is None else result * base
            e >>= 1
            if not e:
                return result
            base = base * base

    __pow__ = pow

    # -- exponent reindexing --------------------------------------------------

    def shift(self, j: int) -> "QSeries":
        """Multiply by q^j (exact): valuation and precision both move by j."""
        return QSeries(self.valuation + j, self.coeffs, self.precision + j)

    def substitute(self, m: int) -> "QSeries":
        """Substitute q -> q^m (m >= 1): exponent n becomes m*n.

        The last guaranteed exponent precision-1 maps to m*(precision-1), so
        the result is exact below m*(precision-1) + 1.
        """
        if m < 1:
            raise ValueError(f"substitution power must be >= 1, got {m}")
        if m == 1:
            return self
        prec = m * (self.precision - 1) + 1
        if not self.coeffs:
            return zero(prec)
        v = m * self.valuation
        out = [0] * (prec - v)
        for i, c in enumerate(self.coeffs):
            out[m * i] = c
        return _normalized(v, out, prec)

    def truncate(self, prec: int) -> "QSeries":
        """Forget knowledge above prec (which must not exceed the current precision)."""
        if prec > self.precision:
            raise InsufficientPrecisionError(
                f"cannot extend precision {self.precision} to {prec} by truncation"
            )
        if prec >= self.precision:
            return self
        if prec <= self.valuation:
            return zero(prec)
        return _normalized(self.valuation, list(self.coeffs[: prec - self.valuation]), prec)


# -- constructors -------------------------------------------------------------


def from_terms(terms: Iterable[tuple], precision: int) -> QSeries:
    """Series with exactly the given (exponent, coefficient) terms, zero elsewhere below precision."""
    seen = {}
    for exponent, coefficient in terms:
        if exponent >= precision:
            raise OutOfWindowError(
                f"term q^{exponent} lies outside the guaranteed window (precision {precision})"
            )
        if exponent in seen:
            raise ValueError(f"duplicate exponent {exponent} in term list")
        seen[exponent] = coefficient
    live = {e: c for e, c in seen.items() if c != 0}
    if not live:
        return zero(precision)
    lo = min(live)
    out = [0] * (precision - lo)
    for e, c in live.items():
        out[e - lo] = c
    return _normalized(lo, out, precision)


def zero(precision: int) -> QSeries:
    """The zero-to-precision series in canonical form."""
    return QSeries(precision, (), precision)


def one(precision: int) -> QSeries:
    return from_terms([(0, 1)], precision)


def monomial(exponent: int, precision: int, coefficient: int = 1) -> QSeries:
    return from_terms([(exponent, coefficient)], precision)


# -- comparison ---------------------------------------------------------------


def equal_to_order(f: QSeries, g: QSeries, order: int) -> tuple:
    """Compare coefficientwise over the full common Laurent window below ``order``.

    Returns (True, None) when coeff(f, n) == coeff(g, n) for every n with
    min(valuations) <= n < order, else (False, n) for the smallest violating n.
    Requires order <= both precisions; anything else would silently treat
    unknown coefficients as zero.
    """
    if order > f.precision or order > g.precision:
        raise InsufficientPrecisionError(
            f"comparison window {order} exceeds available precision "
            f"({f.precision}, {g.precision})"
        )
    lo = min(f.valuation, g.valuation)
    for n in range(lo, order):
        if f.coeff(n) != g.coeff(n):
            return False, n
    return True, None
