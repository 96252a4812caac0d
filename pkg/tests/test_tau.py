from fractions import Fraction

import pytest

from ramtau.qseries import eisenstein, eta24
from ramtau.tau import OrderBudgetError, TauMethod, required_order, sigma, tau, tau_e12_conv, tau_values

from oracles import sigma_naive, tau_naive

TAU_NAIVE = tau_naive(30)


@pytest.mark.parametrize("method", list(TauMethod))
def test_tau_two_every_method(method):
    assert tau(2, method) == -24


def test_tau_one_via_first_theorem():
    assert tau(1, TauMethod.THM1) == 1


@pytest.mark.parametrize("method", list(TauMethod))
def test_tau_five(method):
    assert tau(5, method) == 4830 == TAU_NAIVE[5]


def test_methods_agree_small():
    ref = tau_values(range(1, 16), "eta24")
    for m in TauMethod:
        assert tau_values(range(1, 16), m) == ref


def test_methods_agree_to_100():
    ref = tau_values(range(1, 101), "eta24")
    assert [ref[n] for n in range(1, 31)] == TAU_NAIVE[1:]
    for m in (TauMethod.THM2, TauMethod.EIS46, TauMethod.E12_CONV):
        assert tau_values(range(1, 101), m) == ref


def test_multiplicativity():
    t = tau_values(range(1, 16))
    assert t[6] == t[2] * t[3] == -6048
    assert t[10] == t[2] * t[5]
    assert t[15] == t[3] * t[5]


def test_nonvanishing():
    assert all(v != 0 for v in tau_values(range(1, 301)).values())


def test_budget_error_is_explicit():
    with pytest.raises(OrderBudgetError) as exc:
        tau(60, "thm1")
    assert exc.value.needed == 6600
    assert "n <= 54" in str(exc.value)
    assert tau(3, "thm1", max_order=330) == 252
    with pytest.raises(OrderBudgetError):
        tau(3, "thm1", max_order=329)


def test_required_order():
    assert required_order(12, "thm1") == 1320
    assert required_order(12, "thm2") == 120
    assert required_order(12, TauMethod.ETA24) == 12


def test_bad_inputs():
    with pytest.raises(ValueError):
        tau(0)
    with pytest.raises(ValueError):
        TauMethod.parse("nope")


def test_sigma():
    assert sigma(5, 1) == 1
    assert sigma(5, 2) == 33
    assert sigma(11, 3) == 177148
    assert all(sigma(j, n) == sigma_naive(j, n) for j in (1, 3, 5, 11) for n in range(1, 60))


def test_e12_formula_denominators():
    for n in range(1, 60):
        terms = [
            Fraction(65, 756) * sigma(11, n),
            Fraction(691, 756) * sigma(5, n),
            Fraction(691, 3) * sum(sigma(5, m) * sigma(5, n - m) for m in range(1, n)),
        ]
        assert all(2268 % t.denominator == 0 for t in terms)


def test_e12_formula_integral_to_200():
    ref = eta24(200)
    for n in range(1, 201):
        assert tau_e12_conv(n) == ref[n]


def test_e12_series_identity():
    N = 200
    e12, e6 = eisenstein(12, N), eisenstein(6, N)
    assert (e12 - e6**2) * Fraction(691, 762048) == eta24(N)
