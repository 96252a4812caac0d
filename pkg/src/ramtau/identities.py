"""Verification of q-series identities and of the vanishing statements behind the tau formulas.

Identities are written in a small closed algebra: a side is a sum of terms
``coeff * q^shift * prod P_{m,k}(q^s)^power``. Each side is expanded to the
requested order and the difference must vanish.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .qseries import PochhammerFactor, TruncatedSeries, eta_product, euler, from_sparse, substitute_power
from .vector_partitions import FAMILIES, count, family_series

__all__ = [
    "Pmk",
    "Term",
    "IdentitySpec",
    "IdentityResult",
    "ab_identity",
    "IDENTITIES",
    "expand",
    "verify_identity",
    "VanishingReport",
    "verify_thm_ii",
    "verify_thm3",
    "thm3_trigger",
    "jacobi_sum",
    "verify_jacobi",
]


@dataclass(frozen=True)
class Pmk:
    """P_{m,k}(q^subst) ** power."""

    m: int
    k: int
    power: int = 1
    subst: int = 1

    def __post_init__(self):
        if self.m < 2 or not 0 < self.k < self.m:
            raise ValueError(f"P_{{m,k}} needs 0 < k < m, got m={self.m}, k={self.k}")
        if self.subst < 1:
            raise ValueError("substitution power must be positive")

    def pochhammers(self) -> list[PochhammerFactor]:
        s = self.subst
        return [
            PochhammerFactor(self.k * s, self.m * s, self.power),
            PochhammerFactor((self.m - self.k) * s, self.m * s, self.power),
        ]


@dataclass(frozen=True)
class Term:
    coeff: int = 1
    shift: int = 0
    factors: tuple[Pmk, ...] = ()

    def expand(self, N: int) -> TruncatedSeries:
        fs = [pf for f in self.factors for pf in f.pochhammers()]
        return eta_product(fs, N).shift(self.shift) * self.coeff


ONE = (Term(),)


@dataclass(frozen=True)
class IdentitySpec:
    name: str
    left: tuple[Term, ...]
    right: tuple[Term, ...]
    description: str = ""


def expand(side: tuple[Term, ...], N: int) -> TruncatedSeries:
    total = TruncatedSeries.one(N) * 0
    for t in side:
        total = total + t.expand(N)
    return total


def ab_identity(name: str, m: int, d: int, ks, ls, description: str = "") -> IdentitySpec:
    """1 = 1/prod P_{m,k_j}(q) - q^d / prod P_{m,l_j}(q)."""
    A = Term(1, 0, tuple(Pmk(m, k, -1) for k in ks))
    B = Term(-1, d, tuple(Pmk(m, l, -1) for l in ls))
    return IdentitySpec(name, ONE, (A, B), description or f"mod {m} shifted identity, shift {d}")


def _g(power=1, subst=1):
    # Rogers-Ramanujan G(q^subst)^power = P_{5,1}(q^subst)^(-power)
    return Pmk(5, 1, -power, subst)


def _h(power=1, subst=1):
    return Pmk(5, 2, -power, subst)


def _gt(power=1, subst=1):
    # mod-13 analogue: 1/(q, q^3, q^4, q^9, q^10, q^12; q^13)
    return tuple(Pmk(13, k, -power, subst) for k in (1, 3, 4))


def _ht(power=1, subst=1):
    return tuple(Pmk(13, k, -power, subst) for k in (2, 5, 6))


_GH55_K = [5 * j - 3 for j in range(1, 12)] + [11]
_GH55_L = [5 * j - 4 for j in range(1, 12)] + [22]
_GH39_K = [13 * j - 11 for j in (1, 2, 3)] + [13 * j - 47 for j in (4, 5, 6)] + [13 * j - 85 for j in (7, 8, 9)] + [3, 9, 12]
_GH39_L = [13 * j - 12 for j in (1, 2, 3)] + [13 * j - 49 for j in (4, 5, 6)] + [13 * j - 87 for j in (7, 8, 9)] + [6, 15, 18]

IDENTITIES: dict[str, IdentitySpec] = {
    "gh55": IdentitySpec(
        "gh55",
        ONE,
        (Term(1, 0, (_h(), _g(subst=11))), Term(-1, 2, (_g(), _h(subst=11)))),
        "1 = H(q)G(q^11) - q^2 G(q)H(q^11)",
    ),
    "gh55s": IdentitySpec(
        "gh55s",
        ONE,
        (
            Term(1, 0, (_h(), _g(11))),
            Term(-1, 2, (_g(), _h(11))),
            Term(-11, 1, (_g(6), _h(6))),
        ),
        "1 = H G^11 - q^2 G H^11 - 11 q G^6 H^6",
    ),
    "gh39": IdentitySpec(
        "gh39",
        ONE,
        (Term(1, 0, (*_ht(), *_gt(subst=3))), Term(-1, 2, (*_gt(), *_ht(subst=3)))),
        "1 = H~(q)G~(q^3) - q^2 G~(q)H~(q^3)",
    ),
    "gh39s": IdentitySpec(
        "gh39s",
        ONE,
        (
            Term(1, 0, (*_ht(), *_gt(3))),
            Term(-1, 2, (*_gt(), *_ht(3))),
            Term(-3, 1, (*_gt(2), *_ht(2))),
        ),
        "1 = H~ G~^3 - q^2 G~ H~^3 - 3 q G~^2 H~^2",
    ),
    "gh55p": IdentitySpec(
        "gh55p",
        ONE,
        (
            Term(1, 0, (Pmk(5, 2, -1), Pmk(55, 11, -1))),
            Term(-1, 2, (Pmk(5, 1, -1), Pmk(55, 22, -1))),
        ),
        "1 = 1/(P_{5,2} P_{55,11}) - q^2/(P_{5,1} P_{55,22})",
    ),
    "gh55pd": IdentitySpec(
        "gh55pd",
        ONE,
        (
            Term(1, 0, (Pmk(10, 2, -1), Pmk(10, 3, -1), Pmk(110, 11, -1), Pmk(110, 44, -1))),
            Term(-1, 2, (Pmk(10, 1, -1), Pmk(10, 4, -1), Pmk(110, 22, -1), Pmk(110, 33, -1))),
        ),
        "gh55p with every P_{m,k} doubled to modulus 2m",
    ),
    "gh55ab": ab_identity("gh55ab", 55, 2, _GH55_K, _GH55_L, "gh55 from its mod-55 residue lists"),
    "gh39ab": ab_identity("gh39ab", 39, 2, _GH39_K, _GH39_L, "gh39 from its mod-39 residue lists"),
}


@dataclass
class IdentityResult:
    name: str
    order: int
    residual: TruncatedSeries

    @property
    def ok(self) -> bool:
        return self.residual.is_zero()

    @property
    def first_failure(self) -> int | None:
        return self.residual.first_nonzero()


def verify_identity(spec: IdentitySpec | str, N: int) -> IdentityResult:
    if isinstance(spec, str):
        if spec not in IDENTITIES:
            raise KeyError(f"unknown identity {spec!r}; known: {sorted(IDENTITIES)}")
        spec = IDENTITIES[spec]
    residual = expand(spec.left, N) - expand(spec.right, N)
    return IdentityResult(spec.name, N, residual)


# --- theorem checks ---------------------------------------------------------


@dataclass
class VanishingReport:
    name: str
    upto: int
    checked: int = 0
    violations: list[tuple[int, int]] = field(default_factory=list)  # (n, value)
    special: dict[int, int] = field(default_factory=dict)  # values at the excluded/trigger indices

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_thm_ii(which: int, N: int) -> VanishingReport:
    """Check a(n) = b(n-2) off multiples of 110 (which=1) or u(n) = v(n-2) + 11 w(n-1) off multiples of 10 (which=2)."""
    if which == 1:
        A, B = (family_series(FAMILIES[x], N) for x in "AB")
        rep = VanishingReport("theorem 1 (ii)", N)
        for n in range(1, N + 1):
            val = count(FAMILIES["A"], n, A) - count(FAMILIES["B"], n - 2, B)
            if n % 110 == 0:
                rep.special[n] = val
                continue
            rep.checked += 1
            if val:
                rep.violations.append((n, val))
        return rep
    if which == 2:
        U, V, W = (family_series(FAMILIES[x], N) for x in "UVW")
        rep = VanishingReport("theorem 2 (ii)", N)
        for n in range(1, N + 1):
            val = count(FAMILIES["U"], n, U) - count(FAMILIES["V"], n - 2, V) - 11 * count(FAMILIES["W"], n - 1, W)
            if n % 10 == 0:
                rep.special[n] = val
                continue
            rep.checked += 1
            if val:
                rep.violations.append((n, val))
        return rep
    raise ValueError("which must be 1 or 2")


def thm3_trigger(m: int) -> int | None:
    """The n >= 1 with m = 13 n (n + 1) / 2, if any."""
    n = 1
    while 13 * n * (n + 1) // 2 < m:
        n += 1
    return n if 13 * n * (n + 1) // 2 == m else None


def verify_thm3(M: int) -> VanishingReport:
    """d(m) - e(m-2) equals (-1)^n (2n+1) when m = 13 n(n+1)/2 and 0 otherwise, for 1 <= m <= M."""
    D, E = (family_series(FAMILIES[x], M) for x in "DE")
    rep = VanishingReport("theorem 3", M)
    for m in range(1, M + 1):
        val = count(FAMILIES["D"], m, D) - count(FAMILIES["E"], m - 2, E)
        n = thm3_trigger(m)
        expected = 0 if n is None else (-1) ** n * (2 * n + 1)
        if n is not None:
            rep.special[m] = val
        rep.checked += 1
        if val != expected:
            rep.violations.append((m, val))
    return rep


def jacobi_sum(N: int, subst: int = 1) -> TruncatedSeries:
    """Sum over n >= 0 of (-1)^n (2n+1) q^(subst * n(n+1)/2)."""
    terms = {}
    n = 0
    while subst * n * (n + 1) // 2 <= N:
        terms[subst * n * (n + 1) // 2] = (-1) ** n * (2 * n + 1)
        n += 1
    return from_sparse(terms, N)


def verify_jacobi(N: int) -> dict[str, IdentityResult]:
    """(q;q)^3 against its triangular-number sum, and the same after q -> q^13."""
    cube = euler(N) ** 3
    plain = IdentityResult("jacobi", N, cube - jacobi_sum(N))
    cube13 = substitute_power(euler(N // 13) ** 3, 13, N)
    scaled = IdentityResult("jacobi13", N, cube13 - jacobi_sum(N, 13))
    return {"jacobi": plain, "jacobi13": scaled}
