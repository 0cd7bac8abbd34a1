"""Named series constructors and the m-dissection operator.

Every named series here is a signed q-monomial times a Pochhammer product
spec, so it can be expanded exactly at any argument scale by scaling the spec
(q -> q^m multiplies every offset and modulus by m) instead of substituting
into a lower-precision expansion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DissectError
from .products import ProductFactor, ProductSpec, expand_product
from .series import QSeries, _normalized

__all__ = [
    "NamedProduct",
    "NAMED_PRODUCTS",
    "named_series",
    "euler",
    "rr_G",
    "rr_H",
    "rr_R",
    "param_k",
    "param_kappa",
    "param_mu",
    "param_nu2",
    "dissect",
]


@dataclass(frozen=True)
class NamedProduct:
    """A series of the form q^shift * (Pochhammer product)."""

    shift: int
    spec: ProductSpec

    def at_scale(self, m: int) -> "NamedProduct":
        return NamedProduct(self.shift * m, self.spec.scaled(m))

    def series(self, order: int) -> QSeries:
        """Exact below ``order`` (the monomial prefactor only adds precision)."""
        return expand_product(self.spec, order).shift(self.shift)


def _spec(*factors) -> ProductSpec:
    return ProductSpec(tuple(ProductFactor(*f) for f in factors))


_E = _spec((1, 1, 1))
_G = _spec((1, 1, 5, -1), (1, 4, 5, -1))
_H = _spec((1, 2, 5, -1), (1, 3, 5, -1))
_R = _spec((1, 1, 5), (1, 4, 5), (1, 2, 5, -1), (1, 3, 5, -1))

# nu(q^2) as a series in q: (q,q^4;q^5)^2 (-q^4,-q^6;q^10) / ((q^2,q^3;q^5)^2 (-q^2,-q^8;q^10))
_NU2 = _spec(
    (1, 1, 5, 2),
    (1, 4, 5, 2),
    (-1, 4, 10),
    (-1, 6, 10),
    (1, 2, 5, -2),
    (1, 3, 5, -2),
    (-1, 2, 10, -1),
    (-1, 8, 10, -1),
)

NAMED_PRODUCTS = {
    "E": NamedProduct(0, _E),
    "G": NamedProduct(0, _G),
    "H": NamedProduct(0, _H),
    "R": NamedProduct(0, _R),
    "k": NamedProduct(1, _R * _R.scaled(2).pow(2)),
    "kappa": NamedProduct(0, _R.pow(2) * _R.scaled(2).reciprocal()),
    "mu": NamedProduct(1, _R * _R.scaled(4)),
    "nu2": NamedProduct(0, _NU2),
}


def named_series(name: str, scale: int, order: int) -> QSeries:
    """The named series at argument q^scale, exact below ``order``.

    For "nu2" the scale applies to the q^2 form: scale=t gives nu(q^(2t)).
    """
    if scale < 1:
        raise ValueError(f"argument power must be >= 1, got {scale}")
    return NAMED_PRODUCTS[name].at_scale(scale).series(order)


def euler(order: int) -> QSeries:
    """E(q) = (q;q)_inf."""
    return named_series("E", 1, order)


def rr_G(order: int) -> QSeries:
    """G(q) = 1/(q,q^4;q^5)_inf."""
    return named_series("G", 1, order)


def rr_H(order: int) -> QSeries:
    """H(q) = 1/(q^2,q^3;q^5)_inf."""
    return named_series("H", 1, order)


def rr_R(order: int) -> QSeries:
    """R(q) = H(q)/G(q) = (q,q^4;q^5)_inf / (q^2,q^3;q^5)_inf."""
    return named_series("R", 1, order)


def param_k(order: int) -> QSeries:
    """k(q) = q R(q) R(q^2)^2.  Valuation 1."""
    return named_series("k", 1, order)


def param_kappa(order: int) -> QSeries:
    """kappa(q) = R(q)^2 / R(q^2)."""
    return named_series("kappa", 1, order)


def param_mu(order: int) -> QSeries:
    """mu(q) = q R(q) R(q^4).  Valuation 1."""
    return named_series("mu", 1, order)


def param_nu2(order: int) -> QSeries:
    """nu(q^2) as a series in q (the integral-exponent product form)."""
    return named_series("nu2", 1, order)


def dissect(f: QSeries, m: int, r: int) -> QSeries:
    """Extract-and-reindex: sum_n coeff(f, m*n + r) q^n.

    Rejects negative valuation rather than guessing a reindexing convention
    for negative exponents; pre-shift explicitly if you need that.
    """
    if m < 1:
        raise ValueError(f"dissection modulus must be >= 1, got {m}")
    if not 0 <= r < m:
        raise ValueError(f"residue {r} not in [0, {m})")
    if f.valuation < 0:
        raise DissectError(
            f"cannot dissect a series with negative valuation {f.valuation}"
        )
    prec = (f.precision - r - 1) // m + 1
    if prec <= 0:
        return QSeries(prec, (), prec)
    out = [f.coeff(m * i + r) for i in range(prec)]
    return _normalized(0, out, prec)
