import pytest

from ramtau.identities import (
    IDENTITIES,
    IdentitySpec,
    Pmk,
    Term,
    expand,
    jacobi_sum,
    thm3_trigger,
    verify_identity,
    verify_jacobi,
    verify_thm3,
    verify_thm_ii,
)
from ramtau.qseries import TruncatedSeries, euler, invert, p_mk


def rogers_ramanujan_sum(shift_fn, N):
    # sum_k q^(shift_fn(k)) / (q;q)_k, from the definition
    total = TruncatedSeries.one(N) * 0
    k = 0
    while shift_fn(k) <= N:
        denom = TruncatedSeries.one(N)
        for j in range(1, k + 1):
            denom = denom * (TruncatedSeries.one(N) - TruncatedSeries.monomial(j, N))
        total = total + invert(denom).shift(shift_fn(k))
        k += 1
    return total


def test_rogers_ramanujan_product_forms():
    N = 120
    G = expand((Term(1, 0, (Pmk(5, 1, -1),)),), N)
    H = expand((Term(1, 0, (Pmk(5, 2, -1),)),), N)
    assert G == rogers_ramanujan_sum(lambda k: k * k, N)
    assert H == rogers_ramanujan_sum(lambda k: k * (k + 1), N)


@pytest.mark.parametrize("name", sorted(IDENTITIES))
def test_identities_vanish(name):
    res = verify_identity(name, 600)
    assert res.ok and res.first_failure is None


def test_gh55_order_2000():
    assert verify_identity("gh55", 2000).ok


def test_residue_list_encodings_agree_with_products():
    N = 400
    for a, b in (("gh55ab", "gh55p"), ("gh39ab", "gh39")):
        assert expand(IDENTITIES[a].right, N) == expand(IDENTITIES[b].right, N)
    # each side separately, not just the difference
    assert expand(IDENTITIES["gh55ab"].right[1:], N) == expand(IDENTITIES["gh55"].right[1:], N)


def test_broken_identity_reports_first_failure():
    spec = IdentitySpec(
        "bad",
        (Term(),),
        (Term(1, 0, (Pmk(5, 2, -1), Pmk(5, 1, -1, 11))), Term(-1, 3, (Pmk(5, 1, -1), Pmk(5, 2, -1, 11)))),
    )
    res = verify_identity(spec, 50)
    assert not res.ok
    assert res.first_failure == 2


def test_unknown_identity():
    with pytest.raises(KeyError):
        verify_identity("nope", 10)


def test_term_expansion():
    t = Term(3, 2, (Pmk(5, 2),))
    assert t.expand(30) == (p_mk(5, 2, 30) * 3).shift(2)


def test_jacobi():
    res = verify_jacobi(500)
    assert res["jacobi"].ok and res["jacobi13"].ok
    assert jacobi_sum(10)[0] == 1
    assert (euler(10) ** 3)[1] == -3 == jacobi_sum(10)[1]
    assert jacobi_sum(100, 13)[13] == -3 and jacobi_sum(100, 13)[39] == 5


def test_thm3_trigger():
    assert [m for m in range(1, 1001) if thm3_trigger(m)] == [13, 39, 78, 130, 195, 273, 364, 468, 585, 715, 858]
    assert thm3_trigger(13) == 1 and thm3_trigger(39) == 2 and thm3_trigger(14) is None


def test_thm3_small():
    rep = verify_thm3(200)
    assert rep.ok
    assert rep.special[13] == -3 and rep.special[39] == 5
    assert 14 not in rep.special


def test_thm_ii_small():
    rep = verify_thm_ii(1, 300)
    assert rep.ok and rep.special[110] == -24 and rep.special[220] == 252
    rep = verify_thm_ii(2, 200)
    assert rep.ok and rep.special[10] == -24
    with pytest.raises(ValueError):
        verify_thm_ii(3, 10)
