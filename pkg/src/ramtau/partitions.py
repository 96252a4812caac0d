"""Integer partitions, hooks, t-cores and capsid partitions."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

import numpy as np

from .qseries import TruncatedSeries

__all__ = [
    "Partition",
    "CapsidSpec",
    "partition_count",
    "enumerate_partitions",
    "enumerate_restricted",
    "hook_lengths",
    "is_t_core",
    "enumerate_t_cores",
    "conjugate",
    "is_capsid",
    "is_mk_capsid",
    "enumerate_capsids",
    "enumerate_mk_capsids",
    "capsid_stats",
    "refined_counts",
    "refined_gamma",
    "TrivariateSeries",
    "trivariate_capsid_series",
]


@dataclass(frozen=True)
class Partition:
    """A partition stored as sorted (part, multiplicity) pairs."""

    items: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        prev = 0
        for part, mult in self.items:
            if not (isinstance(part, int) and isinstance(mult, int)):
                raise TypeError("parts and multiplicities must be ints")
            if part <= prev:
                raise ValueError("parts must be positive and strictly increasing in items")
            if mult <= 0:
                raise ValueError("multiplicities must be positive")
            prev = part

    @classmethod
    def from_multiplicities(cls, mults: Mapping[int, int]) -> Partition:
        return cls(tuple(sorted((p, m) for p, m in mults.items() if m)))

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> Partition:
        parts = list(parts)
        if any(p <= 0 for p in parts):
            raise ValueError("parts must be positive")
        return cls.from_multiplicities(Counter(parts))

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse multiplicity notation such as ``"1^3 5 15^2 22 27"``.

        Commas, parentheses and braces are ignored, so ``"(1^3,5^1)"`` works too.
        """
        body = re.sub(r"[(){},]", " ", text).strip()
        mults: Counter = Counter()
        if body in ("", "0", "empty"):
            return cls()
        for tok in body.split():
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", tok)
            if not m:
                raise ValueError(f"bad partition token {tok!r}")
            part, mult = int(m.group(1)), int(m.group(2) or 1)
            if part == 0:
                raise ValueError("parts must be positive")
            mults[part] += mult
        return cls.from_multiplicities(mults)

    @property
    def multiplicities(self) -> dict[int, int]:
        return dict(self.items)

    def multiplicity(self, part: int) -> int:
        for p, m in self.items:
            if p == part:
                return m
        return 0

    @property
    def parts(self) -> tuple[int, ...]:
        """Parts in nonincreasing order."""
        out: list[int] = []
        for p, m in reversed(self.items):
            out.extend([p] * m)
        return tuple(out)

    @property
    def weight(self) -> int:
        return sum(p * m for p, m in self.items)

    def __len__(self):
        return sum(m for _, m in self.items)

    @property
    def largest(self) -> int:
        return self.items[-1][0] if self.items else 0

    @property
    def smallest(self) -> int:
        return self.items[0][0] if self.items else 0

    def union(self, other: Partition) -> Partition:
        mults = Counter(self.multiplicities)
        mults.update(other.multiplicities)
        return Partition.from_multiplicities(mults)

    def scaled(self, factor: int, offset: int = 0) -> Partition:
        """Map every part p to factor * p + offset."""
        return Partition.from_multiplicities({factor * p + offset: m for p, m in self.items})

    def __str__(self):
        if not self.items:
            return "()"
        return " ".join(f"{p}^{m}" for p, m in self.items)


def _as_parts(lam) -> tuple[int, ...]:
    if isinstance(lam, Partition):
        return lam.parts
    return tuple(sorted(lam, reverse=True))


# --- enumeration ----------------------------------------------------------


@lru_cache(maxsize=None)
def _count_bounded(n: int, k: int) -> int:
    # partitions of n with largest part <= k
    if n == 0:
        return 1
    if k == 0:
        return 0
    return sum(_count_bounded(n - p, p) for p in range(1, min(n, k) + 1))


def partition_count(n: int) -> int:
    if n < 0:
        return 0
    return _count_bounded(n, n)


def _descending(n: int, maxpart: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for p in range(1, min(n, maxpart) + 1):
        for rest in _descending(n - p, p):
            yield (p, *rest)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n, ordered lexicographically by their part lists."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = [Partition.from_parts(parts) for parts in _descending(n, n)]
    assert len(out) == partition_count(n)
    return out


def _restricted(n: int, allowed: tuple[int, ...], idx: int) -> Iterator[tuple[int, ...]]:
    # allowed sorted ascending; use parts allowed[:idx+1] only
    if n == 0:
        yield ()
        return
    for i in range(idx + 1):
        p = allowed[i]
        if p > n:
            break
        for rest in _restricted(n - p, allowed, i):
            yield (p, *rest)


def enumerate_restricted(n: int, allowed: Iterable[int]) -> list[Partition]:
    """Partitions of n whose parts all lie in ``allowed``."""
    allowed = tuple(sorted({a for a in allowed if 0 < a <= n}))
    return [Partition.from_parts(p) for p in _restricted(n, allowed, len(allowed) - 1)]


# --- hooks and cores ------------------------------------------------------


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Ferrers diagram."""
    parts = _as_parts(lam)
    if not parts:
        return Partition()
    return Partition.from_parts(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1))


def hook_lengths(lam: Partition) -> list[int]:
    """Hook lengths of all cells, largest first."""
    rows = _as_parts(lam)
    if not rows:
        return []
    cols = conjugate(Partition.from_parts(rows)).parts
    hooks = [
        (rows[i] - j) + (cols[j] - i) - 1
        for i in range(len(rows))
        for j in range(rows[i])
    ]
    return sorted(hooks, reverse=True)


def is_t_core(lam: Partition, t: int) -> bool:
    if t < 2:
        raise ValueError("t must be at least 2")
    return all(h % t for h in hook_lengths(lam))


def enumerate_t_cores(t: int, n: int) -> list[Partition]:
    return [lam for lam in enumerate_partitions(n) if is_t_core(lam, t)]


# --- capsids --------------------------------------------------------------


@dataclass(frozen=True)
class CapsidSpec:
    """Parameters (m, r1, r2) of a capsid family.

    ``r1`` is the anchor part; parts are r1, multiples of m, or r2 mod m.
    """

    m: int
    r1: int
    r2: int

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("capsid modulus must be at least 2")
        if not (0 < self.r1 < self.m and 0 < self.r2 < self.m):
            raise ValueError(f"need 0 < r1, r2 < m, got {self}")
        if self.r1 == self.r2:
            raise ValueError("generalized capsids require r1 != r2")

    @classmethod
    def from_mk(cls, m: int, k: int) -> CapsidSpec:
        """The (m, k)-capsids as (m, m - k, k)-capsids (needs k != m/2)."""
        if not 0 < k < m:
            raise ValueError(f"need 0 < k < m, got m={m}, k={k}")
        if 2 * k == m:
            raise ValueError("(m, m/2)-capsids have no (m, r1, r2) form; use is_mk_capsid")
        return cls(m, m - k, k)

    def swapped(self) -> CapsidSpec:
        return CapsidSpec(self.m, self.r2, self.r1)

    def allowed_parts(self, n: int) -> list[int]:
        m = self.m
        return sorted({self.r1, *range(m, n + 1, m), *range(self.r2, n + 1, m)})

    def __str__(self):
        return f"({self.m},{self.r1},{self.r2})"


def is_capsid(lam: Partition, spec: CapsidSpec) -> bool:
    m, r1, r2 = spec.m, spec.r1, spec.r2
    a = lam.multiplicity(r1)
    for p, _ in lam.items:
        if p == r1:
            continue
        res = p % m
        if a == 0:
            if res != r2:
                return False
        elif res == 0:
            if p > m * a:
                return False
        elif res == r2:
            if p <= m * a:
                return False
        else:
            return False
    # with a > 0 every other part exceeds r1, so r1 is the smallest part
    return True


def is_mk_capsid(lam: Partition, m: int, k: int) -> bool:
    """Membership in the (m, k)-capsids, including the k = m/2 case.

    For k = m/2 the anchor m - k = k is also a residue-k part; copies of it
    are exempt from the lower bound on residue-k parts.
    """
    if m < 2 or not 0 < k < m:
        raise ValueError(f"need m >= 2 and 0 < k < m, got m={m}, k={k}")
    if 2 * k != m:
        return is_capsid(lam, CapsidSpec.from_mk(m, k))
    a = lam.multiplicity(k)
    for p, _ in lam.items:
        if p == k:
            continue
        res = p % m
        if a == 0:
            if res != k:
                return False
        elif res == 0:
            if p > m * a:
                return False
        elif res == k:
            if p <= m * a:
                return False
        else:
            return False
    return True


def enumerate_capsids(spec: CapsidSpec, n: int) -> list[Partition]:
    """All (m, r1, r2)-capsids of n, in the order of :func:`enumerate_partitions`."""
    cands = enumerate_restricted(n, spec.allowed_parts(n))
    return sorted((lam for lam in cands if is_capsid(lam, spec)), key=lambda lam: lam.parts)


def enumerate_mk_capsids(m: int, k: int, n: int) -> list[Partition]:
    if 2 * k != m:
        return enumerate_capsids(CapsidSpec.from_mk(m, k), n)
    allowed = sorted({*range(m, n + 1, m), *range(k, n + 1, m)})
    cands = enumerate_restricted(n, allowed)
    return sorted((lam for lam in cands if is_mk_capsid(lam, m, k)), key=lambda lam: lam.parts)


def capsid_stats(lam: Partition, spec: CapsidSpec) -> tuple[int, int]:
    """(alpha, beta): multiplicity of r1 and number of parts = r2 mod m."""
    if not is_capsid(lam, spec):
        raise ValueError(f"{lam} is not a {spec}-capsid")
    a = lam.multiplicity(spec.r1)
    b = sum(mult for p, mult in lam.items if p != spec.r1 and p % spec.m == spec.r2)
    return a, b


def refined_counts(spec: CapsidSpec, n: int) -> Counter:
    """Counter mapping (alpha, beta) to the number of capsids of n with those statistics."""
    return Counter(capsid_stats(lam, spec) for lam in enumerate_capsids(spec, n))


def refined_gamma(spec: CapsidSpec, a: int, b: int, n: int) -> int:
    return refined_counts(spec, n)[(a, b)]


# --- trivariate generating function ---------------------------------------


class TrivariateSeries:
    """Series in q whose coefficients are integer polynomials in x and y.

    ``data[n, a, b]`` is the coefficient of x^a y^b q^n.
    """

    def __init__(self, data: np.ndarray):
        self.data = data

    @property
    def order(self) -> int:
        return self.data.shape[0] - 1

    def coeff(self, a: int, b: int, n: int) -> int:
        N, A, B = self.data.shape
        if not (0 <= n < N and 0 <= a < A and 0 <= b < B):
            return 0
        return int(self.data[n, a, b])

    def terms(self) -> dict[tuple[int, int, int], int]:
        """Nonzero coefficients keyed by (a, b, n)."""
        return {(int(a), int(b), int(n)): int(self.data[n, a, b]) for n, a, b in zip(*np.nonzero(self.data))}

    def specialize(self) -> TruncatedSeries:
        """Set x = y = 1."""
        return TruncatedSeries([int(sum(self.data[n].ravel())) for n in range(self.data.shape[0])])

    def swap_xy(self) -> TrivariateSeries:
        return TrivariateSeries(self.data.transpose(0, 2, 1).copy())

    def __eq__(self, other):
        if not isinstance(other, TrivariateSeries):
            return NotImplemented
        return self.terms() == other.terms() and self.order == other.order


def _tri_times(data: np.ndarray, i: int, j: int, e: int) -> None:
    # data *= (1 - x^i y^j q^e)
    N, A, B = data.shape
    for n in range(N - 1, e - 1, -1):
        data[n, i:, j:] -= data[n - e, : A - i, : B - j]


def _tri_div(data: np.ndarray, i: int, j: int, e: int) -> None:
    # data /= (1 - x^i y^j q^e)
    N, A, B = data.shape
    for n in range(e, N):
        data[n, i:, j:] += data[n - e, : A - i, : B - j]


def trivariate_capsid_series(spec: CapsidSpec, N: int) -> TrivariateSeries:
    """(x y q^(r1+r2); q^m)_inf / ((x q^r1; q^m)_inf (y q^r2; q^m)_inf)."""
    m, r1, r2 = spec.m, spec.r1, spec.r2
    data = np.zeros((N + 1, N // r1 + 1, N // r2 + 1), dtype=object)
    data[0, 0, 0] = 1
    for e in range(r1, N + 1, m):
        _tri_div(data, 1, 0, e)
    for e in range(r2, N + 1, m):
        _tri_div(data, 0, 1, e)
    for e in range(r1 + r2, N + 1, m):
        _tri_times(data, 1, 1, e)
    return TrivariateSeries(data)
