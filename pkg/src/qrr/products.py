"""Symbolic generalized Pochhammer products and their exact expansion.

A ProductFactor describes (sign * q^offset ; q^modulus)_inf ** exponent, i.e.
the infinite product prod_{k>=0} (1 - sign * q^(offset + k*modulus)) raised to
an integer power.  A ProductSpec is a finite multiset of factors; the empty
spec is the constant series 1.

Expansion works binomial by binomial: multiplying a series by (1 - s*q^c) or
dividing it out are both single O(window) sweeps, so a whole spec costs
O(#binomials * window) with small constants and no general convolutions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Tuple

from .errors import NonUnitError, ZeroProductError
from .series import QSeries, _normalized

__all__ = ["ProductFactor", "ProductSpec", "expand_product"]


@dataclass(frozen=True)
class ProductFactor:
    """One factor (sign * q^offset ; q^modulus)_inf ** exponent."""

    sign: int
    offset: int
    modulus: int
    exponent: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"generator sign must be +1 or -1, got {self.sign}")
        if self.modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {self.modulus}")
        if self.offset < 0:
            raise ValueError(f"offset must be >= 0, got {self.offset}")
        if self.offset == 0 and self.sign == 1:
            raise ZeroProductError(
                "generator +1*q^0 makes the product identically zero"
            )

    def scaled(self, m: int) -> "ProductFactor":
        """The factor after q -> q^m."""
        return ProductFactor(self.sign, self.offset * m, self.modulus * m, self.exponent)

    def __str__(self) -> str:
        gen = {(1, 1): "q", (-1, 0): "-1"}.get((self.sign, self.offset))
        if gen is None:
            gen = ("-" if self.sign < 0 else "") + (
                "q" if self.offset == 1 else f"q^{self.offset}"
            )
        base = "q" if self.modulus == 1 else f"q^{self.modulus}"
        s = f"({gen};{base})_inf"
        if self.exponent != 1:
            s += f"^{self.exponent}"
        return s


@dataclass(frozen=True)
class ProductSpec:
    """A product of ProductFactors; the empty spec denotes the constant 1."""

    factors: Tuple[ProductFactor, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    def __mul__(self, other: "ProductSpec") -> "ProductSpec":
        return ProductSpec(self.factors + other.factors)

    def pow(self, e: int) -> "ProductSpec":
        if e == 0:
            return ProductSpec()
        return ProductSpec(
            tuple(
                ProductFactor(f.sign, f.offset, f.modulus, f.exponent * e)
                for f in self.factors
            )
        )

    def reciprocal(self) -> "ProductSpec":
        return self.pow(-1)

    def scaled(self, m: int) -> "ProductSpec":
        return ProductSpec(tuple(f.scaled(m) for f in self.factors))

    def merged(self) -> "ProductSpec":
        """Combine factors with identical generator and base; drop net exponent 0."""
        acc = {}
        order = []
        for f in self.factors:
            key = (f.sign, f.offset, f.modulus)
            if key not in acc:
                acc[key] = 0
                order.append(key)
            acc[key] += f.exponent
        out = tuple(
            ProductFactor(s, b, m, acc[(s, b, m)])
            for (s, b, m) in order
            if acc[(s, b, m)] != 0
        )
        return ProductSpec(out)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(str(f) for f in self.factors)


def expand_product(spec: ProductSpec, order: int) -> QSeries:
    """Expand the product as a QSeries exact below ``order``.

    Binomials (1 - s*q^c) with c >= order are 1 + O(q^order) and are skipped.
    Factors with net negative exponent are divided out via the recurrence
    h[n] = g[n] + s*h[n-c]; a reciprocal of an offset-0 factor would need the
    non-integer 1/2 and is rejected.
    """
    if order < 1:
        raise ValueError(f"expansion order must be >= 1, got {order}")
    coeffs = [0] * order
    coeffs[0] = 1
    for f in spec.merged().factors:
        e = f.exponent
        if f.offset == 0 and e < 0:
            raise NonUnitError(
                f"reciprocal of {f} has leading coefficient 1/2, not an integer series"
            )
        reps = abs(e)
        for _ in range(reps):
            c = f.offset
            while c < order:
                s = f.sign
                if c == 0:
                    # (1 - (-1)q^0) = 2; sign +1 at offset 0 cannot be constructed.
                    coeffs = [2 * x for x in coeffs]
                elif e > 0:
                    if s == 1:
                        for n in range(order - 1, c - 1, -1):
                            coeffs[n] -= coeffs[n - c]
                    else:
                        for n in range(order - 1, c - 1, -1):
                            coeffs[n] += coeffs[n - c]
                else:
                    if s == 1:
                        for n in range(c, order):
                            coeffs[n] += coeffs[n - c]
                    else:
                        for n in range(c, order):
                            coeffs[n] -= coeffs[n - c]
                c += f.modulus
    return _normalized(0, coeffs, order)
