"""The p-term product dissection of a four-parameter theta quotient.

The underlying identity expresses

    (q, q, az, q/(az); q)_inf / (a, q/a, z, q/z; q)_inf

as a sum of p analogous product quotients in base q^p with prefactors z^j,
for monomial specializations a = sa*q^A, z = sz*q^Z (optionally with the base
q replaced by q^M throughout).

Both numerators carry their non-E generators in mirrored pairs
(x; Q)_inf (Q/x; Q)_inf with Q = q^L.  Writing T(s, c) for the pair with
x = s*q^c, the recurrences

    T(s, c) = -s * q^c       * T(s, c + L)    (lift c < 0 into range)
    T(s, c) = -s * q^(L - c) * T(s, c - L)    (lower c > L into range)

normalize any integer c into [0, L] at the cost of an exact monomial factor.
A normalized pair with s = +1 at c = 0 or c = L contains (1; Q)_inf and the
whole summand is exactly zero.  Denominator generators get no such rescue:
an out-of-range one is an unsupported specialization, and +1*q^0 would be a
division by the zero product.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import List, Optional, Tuple

from .errors import UnsupportedSpecializationError, ZeroProductError
from .products import ProductFactor, ProductSpec, expand_product
from .series import QSeries, zero

__all__ = ["DissectionParams", "jk_general", "jk_lhs", "jk_rhs_terms", "ab_dissection_terms"]


@dataclass(frozen=True)
class DissectionParams:
    """Parameter bundle for the dissection machinery.

    k, r index the two-parameter product family; p is the number of summands;
    (a_sign, a_offset) and (z_sign, z_offset) are the monomial specializations;
    j is a term index.
    """

    k: int
    r: int
    p: int
    a_sign: int = 1
    a_offset: int = 0
    z_sign: int = 1
    z_offset: int = 0
    j: int = 0

    def __post_init__(self):
        if self.k < 1 or not 1 <= self.r <= self.k - 1:
            raise ValueError(f"need k >= 2 and 1 <= r <= k-1, got k={self.k}, r={self.r}")
        if self.p < 1:
            raise ValueError(f"need p >= 1, got {self.p}")
        if not 0 <= self.j <= self.p - 1:
            raise ValueError(f"term index j={self.j} not in [0, {self.p})")
        if self.a_sign not in (1, -1) or self.z_sign not in (1, -1):
            raise ValueError("monomial signs must be +1 or -1")

    def is_andrews_bressoud(self) -> bool:
        """True when (k, r) are coprime and of opposite parity."""
        return gcd(self.k, self.r) == 1 and (self.k - self.r) % 2 == 1


def _normalize_pair(sign: int, c: int, L: int) -> Optional[Tuple[int, int, int]]:
    """Bring the pair exponent c into [0, L]; None when the pair is the zero product.

    Returns (extra_shift, extra_coeff, c_normalized).
    """
    shift = 0
    coeff = 1
    while c < 0:
        shift += c
        coeff *= -sign
        c += L
    while c > L:
        shift += L - c
        coeff *= -sign
        c -= L
    if sign == 1 and (c == 0 or c == L):
        return None
    return shift, coeff, c


def _check_denominator(gens, what: str):
    for sign, offset in gens:
        if offset < 0:
            raise UnsupportedSpecializationError(
                f"{what} generator exponent {offset} is negative after substitution"
            )
        if offset == 0 and sign == 1:
            raise ZeroProductError(f"{what} contains the zero product (1;Q)_inf")


def _pair_factors(sign: int, c: int, L: int):
    return [ProductFactor(sign, c, L), ProductFactor(sign, L - c, L)]


def _assemble(shift: int, coeff: int, numerator, denominator, order: int) -> QSeries:
    if shift >= order:
        return zero(order)
    spec = ProductSpec(
        tuple(numerator)
        + tuple(ProductFactor(f.sign, f.offset, f.modulus, -f.exponent) for f in denominator)
    )
    return expand_product(spec, order - shift).scale(coeff).shift(shift)


def jk_lhs(a: Tuple[int, int], z: Tuple[int, int], base: int, order: int) -> QSeries:
    """Left side: (q, q, az, q/(az); q)/(a, q/a, z, q/z; q) with q -> q^base."""
    sa, A = a
    sz, Z = z
    M = base
    _check_denominator(
        [(sa, A), (sa, M - A), (sz, Z), (sz, M - Z)], "left-side denominator"
    )
    norm = _normalize_pair(sa * sz, A + Z, M)
    if norm is None:
        return zero(order)
    shift, coeff, c = norm
    numerator = [ProductFactor(1, M, M, 2)] + _pair_factors(sa * sz, c, M)
    denominator = [
        ProductFactor(sa, A, M),
        ProductFactor(sa, M - A, M),
        ProductFactor(sz, Z, M),
        ProductFactor(sz, M - Z, M),
    ]
    return _assemble(shift, coeff, numerator, denominator, order)


def jk_rhs_term(
    a: Tuple[int, int], z: Tuple[int, int], p: int, base: int, j: int, order: int
) -> QSeries:
    """The j-th right-side summand z^j (q^p, q^p, a q^j z^p, q^(p-j)/(a z^p); q^p)/(...)."""
    sa, A = a
    sz, Z = z
    M = base
    L = p * M
    szp = sz if p % 2 else 1
    den_gens = [
        (sa, A + j * M),
        (sa, (p - j) * M - A),
        (szp, p * Z),
        (szp, L - p * Z),
    ]
    _check_denominator(den_gens, f"summand j={j} denominator")
    shift = j * Z
    coeff = sz ** j
    norm = _normalize_pair(sa * szp, A + j * M + p * Z, L)
    if norm is None:
        return zero(order)
    extra_shift, extra_coeff, c = norm
    numerator = [ProductFactor(1, L, L, 2)] + _pair_factors(sa * szp, c, L)
    denominator = [ProductFactor(s, b, L) for s, b in den_gens]
    return _assemble(shift + extra_shift, coeff * extra_coeff, numerator, denominator, order)


def jk_rhs_terms(
    a: Tuple[int, int], z: Tuple[int, int], p: int, base: int, order: int
) -> List[QSeries]:
    return [jk_rhs_term(a, z, p, base, j, order) for j in range(p)]


def jk_general(
    a: Tuple[int, int], z: Tuple[int, int], p: int, order: int, base: int = 1
) -> Tuple[QSeries, QSeries]:
    """Both sides of the p-term dissection identity, each exact below ``order``.

    a and z are (sign, offset) monomials in the ambient variable; ``base``
    substitutes q -> q^base throughout (needed for the (a, z, q) ->
    (q^k, q^(k-r), q^(2k)) specialization).
    """
    if p < 1:
        raise ValueError(f"need p >= 1, got {p}")
    if base < 1:
        raise ValueError(f"need base >= 1, got {base}")
    lhs = jk_lhs(a, z, base, order)
    rhs = zero(order)
    for term in jk_rhs_terms(a, z, p, base, order):
        rhs = rhs + term
    return lhs, rhs


def ab_dissection_terms(k: int, r: int, order: int) -> List[QSeries]:
    """The k summands of the product-form k-dissection of the (k, r) family.

    Summand j is q^(j(k-r)) times a product quotient in base q^(2k^2); it is
    supported on the single residue class j(k-r) mod k, and the k summands add
    up to the two-parameter product times E(q^(2k))^2 / (q^k; q^(2k))^2.
    """
    if not 1 <= r <= k - 1:
        raise ValueError(f"need 1 <= r <= k-1, got k={k}, r={r}")
    return jk_rhs_terms((1, k), (1, k - r), k, 2 * k, order)


def ab_product_lhs(k: int, r: int, order: int) -> QSeries:
    """Direct expansion of the left side of the (k, r) product dissection."""
    return jk_lhs((1, k), (1, k - r), 2 * k, order)
