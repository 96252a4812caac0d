"""The symmetry bijection between (m, r1, r2)- and (m, r2, r1)-capsids.

A capsid with statistics (a, b) is cut into the multiples of m (giving pi1)
and the parts congruent to r2 (giving pi2). The union pi2 + pi1 is
conjugated. The a largest parts of the conjugate, zero-padded to length a,
become the residue-r1 parts of the image. The rest become its multiples
of m, and b copies of r2 form the new anchor.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .partitions import (
    CapsidSpec,
    Partition,
    capsid_stats,
    conjugate,
    enumerate_capsids,
    is_capsid,
)

__all__ = [
    "CapsidDecomposition",
    "BijectionTrace",
    "InvolutionReport",
    "decompose",
    "recompose",
    "bijection_trace",
    "bijection_J",
    "verify_involution",
]


@dataclass(frozen=True)
class CapsidDecomposition:
    a: int
    pi1: Partition
    pi2: Partition
    pad2: int  # parts of lambda equal to r2 itself; zero entries of pi2

    @property
    def b(self) -> int:
        return len(self.pi2) + self.pad2


def decompose(lam: Partition, spec: CapsidSpec) -> CapsidDecomposition:
    if not is_capsid(lam, spec):
        raise ValueError(f"{lam} is not a {spec}-capsid")
    m, r1, r2 = spec.m, spec.r1, spec.r2
    pi1: dict[int, int] = {}
    pi2: dict[int, int] = {}
    pad2 = 0
    for p, mult in lam.items:
        if p == r1:
            continue
        if p % m == 0:
            pi1[p // m] = mult
        elif p == r2:
            pad2 = mult
        else:
            pi2[(p - r2) // m] = mult
    return CapsidDecomposition(
        lam.multiplicity(r1),
        Partition.from_multiplicities(pi1),
        Partition.from_multiplicities(pi2),
        pad2,
    )


def recompose(dec: CapsidDecomposition, spec: CapsidSpec) -> Partition:
    """Inverse of :func:`decompose`."""
    m, r1, r2 = spec.m, spec.r1, spec.r2
    mults = {r1: dec.a} if dec.a else {}
    lam = Partition.from_multiplicities(mults)
    lam = lam.union(dec.pi1.scaled(m)).union(dec.pi2.scaled(m, r2))
    if dec.pad2:
        lam = lam.union(Partition.from_multiplicities({r2: dec.pad2}))
    return lam


@dataclass(frozen=True)
class BijectionTrace:
    """Every intermediate shape of one application of the bijection."""

    spec: CapsidSpec
    source: Partition
    a: int
    b: int
    pi1: Partition
    pi2: Partition
    pi: Partition
    pi_conj: Partition
    pi1_tilde: Partition
    pi2_tilde: tuple[int, ...]  # exactly a entries, zeros allowed
    image: Partition


def bijection_trace(lam: Partition, spec: CapsidSpec) -> BijectionTrace:
    dec = decompose(lam, spec)
    a, b = dec.a, dec.b
    pi = dec.pi2.union(dec.pi1)
    conj = conjugate(pi).parts
    pi2_t = tuple(conj[:a]) + (0,) * max(0, a - len(conj))
    pi1_t = Partition.from_parts(conj[a:])
    # image lives in the swapped family: anchor r2 (b copies), residue-r1 parts from pi2_t
    new_dec = CapsidDecomposition(
        b,
        pi1_t,
        Partition.from_parts(e for e in pi2_t if e),
        sum(1 for e in pi2_t if e == 0),
    )
    image = recompose(new_dec, spec.swapped())
    return BijectionTrace(spec, lam, a, b, dec.pi1, dec.pi2, pi, conjugate(pi), pi1_t, pi2_t, image)


def bijection_J(lam: Partition, spec: CapsidSpec) -> Partition:
    """Map an (m, r1, r2)-capsid with statistics (a, b) to an (m, r2, r1)-capsid with (b, a)."""
    return bijection_trace(lam, spec).image


@dataclass
class InvolutionReport:
    spec: CapsidSpec
    n_max: int
    checked: int = 0
    failures: list[tuple[Partition, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_involution(spec: CapsidSpec, n_max: int) -> InvolutionReport:
    """Check weight, statistics swap and round trip for every capsid of n <= n_max."""
    back = spec.swapped()
    report = InvolutionReport(spec, n_max)
    for n in range(n_max + 1):
        for lam in enumerate_capsids(spec, n):
            report.checked += 1
            a, b = capsid_stats(lam, spec)
            img = bijection_J(lam, spec)
            if img.weight != n:
                report.failures.append((lam, f"weight {img.weight} != {n}"))
            elif not is_capsid(img, back):
                report.failures.append((lam, f"image {img} is not a {back}-capsid"))
            elif capsid_stats(img, back) != (b, a):
                report.failures.append((lam, f"statistics {capsid_stats(img, back)} != {(b, a)}"))
            elif bijection_J(img, back) != lam:
                report.failures.append((lam, f"round trip gives {bijection_J(img, back)}"))
    return report
