import pytest

from qrr.errors import DissectError
from qrr.functions import (
    dissect,
    euler,
    named_series,
    param_k,
    param_kappa,
    param_mu,
    param_nu2,
    rr_G,
    rr_H,
    rr_R,
)
from qrr.series import equal_to_order, from_terms, one


def pentagonal_support(bound):
    """Generalized pentagonal numbers k(3k-1)/2 with the sign (-1)^k of E(q)'s expansion."""
    table = {}
    k = 0
    while True:
        done = True
        for j in (k, -k):
            e = j * (3 * j - 1) // 2
            if e < bound:
                table[e] = 1 if j % 2 == 0 else -1
                done = False
        if done and k > 0:
            return table
        k += 1


class TestEuler:
    def test_constant_term(self):
        assert euler(5).coeff(0) == 1

    def test_pentagonal_theorem_to_100(self):
        e = euler(100)
        expected = pentagonal_support(100)
        for n in range(100):
            assert e.coeff(n) == expected.get(n, 0)

    def test_no_exponents_3_or_4_mod_5(self):
        e = euler(400)
        for n in range(400):
            if n % 5 in (3, 4):
                assert e.coeff(n) == 0


class TestRogersRamanujan:
    def test_G_constant_term(self):
        assert rr_G(10).coeff(0) == 1

    def test_G_is_reciprocal_of_its_product(self):
        from qrr.functions import _G

        prod = _G.reciprocal()
        from qrr.products import expand_product

        assert equal_to_order(rr_G(60) * expand_product(prod, 60), one(60), 60)[0]

    def test_H_is_reciprocal_of_its_product(self):
        from qrr.functions import _H
        from qrr.products import expand_product

        assert equal_to_order(rr_H(60) * expand_product(_H.reciprocal(), 60), one(60), 60)[0]

    def test_R_two_routes(self):
        direct = rr_R(40)
        via_gh = rr_H(40) * rr_G(40).invert()
        assert equal_to_order(direct, via_gh, 40)[0]

    def test_R_times_G_is_H(self):
        n = 50
        assert equal_to_order(rr_R(n) * rr_G(n), rr_H(n), n)[0]


class TestParameters:
    def test_k_valuation(self):
        k = param_k(30)
        assert k.valuation == 1
        assert k.precision >= 30

    def test_k_definition(self):
        n = 40
        k = param_k(n)
        built = (
            rr_R(n) * named_series("R", 2, n) * named_series("R", 2, n)
        ).shift(1)
        assert equal_to_order(k, built, n)[0]

    def test_kappa_definition(self):
        n = 40
        built = rr_R(n).pow(2) * named_series("R", 2, n).invert()
        assert equal_to_order(param_kappa(n), built, n)[0]

    def test_mu_valuation_and_definition(self):
        n = 40
        mu = param_mu(n)
        assert mu.valuation == 1
        built = (rr_R(n) * named_series("R", 4, n)).shift(1)
        assert equal_to_order(mu, built, n)[0]

    def test_nu2_constant_term(self):
        assert param_nu2(5).coeff(0) == 1

    def test_nu2_equals_kappa_times_kappa_q2(self):
        n = 200
        lhs = param_nu2(n)
        rhs = param_kappa(n) * named_series("kappa", 2, n)
        assert equal_to_order(lhs, rhs, n)[0]

    def test_named_series_scaling_consistency(self):
        # Expanding at scale m agrees with substituting into the scale-1 series.
        for name in ("E", "G", "H", "R", "k", "kappa", "mu", "nu2"):
            base = named_series(name, 1, 25)
            scaled = named_series(name, 3, 60)
            sub = base.substitute(3)
            window = min(scaled.precision, sub.precision)
            assert equal_to_order(scaled, sub, window)[0], name


class TestDissect:
    def test_basic(self):
        f = from_terms([(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)], 5)
        d = dissect(f, 2, 1)
        assert [d.coeff(n) for n in range(d.precision)] == [2, 4]

    def test_identity(self):
        f = from_terms([(0, 1), (3, -2)], 9)
        assert dissect(f, 1, 0) == f

    def test_precision_rule(self):
        f = one(17)
        assert dissect(f, 5, 2).precision == (17 - 2 - 1) // 5 + 1

    def test_partition_property(self):
        # Interleaving the m dissections reconstructs f on the common window.
        f = euler(60)
        m = 5
        parts = [dissect(f, m, r) for r in range(m)]
        rebuilt = parts[0].substitute(m)
        for r in range(1, m):
            rebuilt = rebuilt + parts[r].substitute(m).shift(r)
        window = min(rebuilt.precision, f.precision)
        assert window >= 51
        assert equal_to_order(rebuilt, f, window)[0]

    def test_rejects_negative_valuation(self):
        f = from_terms([(-1, 1)], 5)
        with pytest.raises(DissectError):
            dissect(f, 2, 0)

    def test_rejects_bad_residue(self):
        with pytest.raises(ValueError):
            dissect(one(5), 3, 3)

    def test_alpha_vanishing_classes_small_window(self):
        alpha = param_nu2(300)
        for r in (3, 7):
            d = dissect(alpha, 10, r)
            assert d.is_zero, f"alpha class 10n+{r} should vanish"
