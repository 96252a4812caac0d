import pytest

from ramtau.capsid_bijection import (
    bijection_J,
    bijection_trace,
    decompose,
    recompose,
    verify_involution,
)
from ramtau.partitions import CapsidSpec, Partition, capsid_stats, enumerate_capsids, is_capsid, refined_counts

P = Partition.parse
SPEC = CapsidSpec(5, 1, 2)


def test_decompose_example():
    dec = decompose(P("1^3 5 15^2 22 27"), SPEC)
    assert dec.a == 3
    assert dec.pi1.parts == (3, 3, 1)
    assert dec.pi2.parts == (5, 4)
    assert dec.pad2 == 0 and dec.b == 2


def test_decompose_anchor_only():
    dec = decompose(P("1^4"), SPEC)
    assert (dec.a, dec.pi1, dec.pi2, dec.pad2) == (4, Partition(), Partition(), 0)


def test_decompose_parts_equal_to_r2():
    dec = decompose(P("2^2"), SPEC)
    assert (dec.a, dec.pi1, dec.pi2, dec.pad2) == (0, Partition(), Partition(), 2)
    assert dec.b == 2


def test_decompose_rejects_non_capsid():
    with pytest.raises(ValueError):
        decompose(P("3"), SPEC)
    with pytest.raises(ValueError):
        bijection_J(P("1 2"), SPEC)


def test_decompose_invariants_and_recompose():
    for n in range(30):
        for lam in enumerate_capsids(SPEC, n):
            dec = decompose(lam, SPEC)
            assert recompose(dec, SPEC) == lam
            assert (dec.a, dec.b) == capsid_stats(lam, SPEC)
            if dec.a:
                assert all(p <= dec.a for p in dec.pi1.parts)
                assert all(p >= dec.a for p in dec.pi2.parts)
                assert dec.pad2 == 0
            else:
                assert dec.pi1 == Partition()


def test_worked_example():
    tr = bijection_trace(P("1^3 5 15^2 22 27"), SPEC)
    assert tr.pi.parts == (5, 4, 3, 3, 1)
    assert tr.pi_conj.parts == (5, 4, 4, 2, 1)
    assert tr.pi2_tilde == (5, 4, 4)
    assert tr.pi1_tilde.parts == (2, 1)
    assert tr.image == P("2^2 5 10 21^2 26")
    assert capsid_stats(tr.image, SPEC.swapped()) == (2, 3)


def test_anchor_only_maps_to_zero_padding():
    tr = bijection_trace(P("1^3"), SPEC)
    assert tr.pi2_tilde == (0, 0, 0)
    assert tr.image == P("1^3")


def test_r2_parts_only():
    img = bijection_J(P("2^2"), SPEC)
    assert img == P("2^2")
    assert is_capsid(img, SPEC.swapped())
    assert capsid_stats(img, SPEC.swapped()) == (2, 0)


@pytest.mark.parametrize("spec", [(5, 1, 2), (5, 2, 1), (7, 2, 4), (10, 3, 1)])
def test_involution_exhaustive(spec):
    rep = verify_involution(CapsidSpec(*spec), 40)
    assert rep.ok, rep.failures[:5]
    assert rep.checked > 0


def test_image_roundtrip_under_swapped_spec():
    images = [bijection_J(lam, SPEC) for n in range(25) for lam in enumerate_capsids(SPEC, n)]
    back = SPEC.swapped()
    assert all(bijection_J(bijection_J(img, back), SPEC) == img for img in images)
    assert len(set(images)) == len(images)


def test_counts_agree_with_refined_gamma():
    for n in range(41):
        src = refined_counts(SPEC, n)
        dst = refined_counts(SPEC.swapped(), n)
        assert all(dst[(b, a)] == c for (a, b), c in src.items())
