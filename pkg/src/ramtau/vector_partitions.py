"""Weighted vector-partition counts built from capsid, t-core and residue-class families.

A family is a list of (component, scale) slots. Its generating series is
the product of the component series with q replaced by q^scale, and its
n-th coefficient counts tuples of partitions with weighted size n.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .partitions import enumerate_mk_capsids, enumerate_partitions, is_t_core
from .qseries import (
    PochhammerFactor,
    TruncatedSeries,
    capsid_series_product,
    eta_product,
    substitute_power,
    tcore_series,
)

__all__ = [
    "CapsidComponent",
    "TCoreComponent",
    "ResidueComponent",
    "VectorFamily",
    "FAMILIES",
    "DIRECT_COUNT_LIMIT",
    "component_series",
    "residue_set_series",
    "family_series",
    "count",
    "counts",
    "direct_count",
]

DIRECT_COUNT_LIMIT = 60


@dataclass(frozen=True)
class CapsidComponent:
    m: int
    k: int

    def series(self, N: int) -> TruncatedSeries:
        return capsid_series_product(self.m, self.k, N)

    def members(self, n: int) -> int:
        return len(enumerate_mk_capsids(self.m, self.k, n))

    def to_dict(self):
        return {"kind": "capsid", "m": self.m, "k": self.k}


@dataclass(frozen=True)
class TCoreComponent:
    t: int

    def series(self, N: int) -> TruncatedSeries:
        return tcore_series(self.t, N)

    def members(self, n: int) -> int:
        return sum(1 for lam in enumerate_partitions(n) if is_t_core(lam, self.t))

    def to_dict(self):
        return {"kind": "tcore", "t": self.t}


@dataclass(frozen=True)
class ResidueComponent:
    """Partitions whose parts all lie in the given residue classes mod m."""

    m: int
    residues: frozenset[int]

    def __post_init__(self):
        res = frozenset(r % self.m for r in self.residues)
        if 0 in res:
            raise ValueError("residue 0 is not supported; use a capsid or Euler factor")
        object.__setattr__(self, "residues", res)

    def series(self, N: int) -> TruncatedSeries:
        return residue_set_series(self.m, self.residues, N)

    def members(self, n: int) -> int:
        return sum(1 for lam in enumerate_partitions(n) if all(p % self.m in self.residues for p in lam.parts))

    def to_dict(self):
        return {"kind": "residues", "m": self.m, "residues": sorted(self.residues)}


Component = Union[CapsidComponent, TCoreComponent, ResidueComponent]


def residue_set_series(m: int, residues, N: int) -> TruncatedSeries:
    """1 / prod over r in residues of (q^r; q^m)_inf."""
    rs = sorted({r % m for r in residues})
    if not rs or rs[0] == 0:
        raise ValueError("residues must be nonzero mod m")
    return eta_product([PochhammerFactor(r, m, -1) for r in rs], N)


def _component_from_dict(d: dict) -> Component:
    kind = d["kind"]
    if kind == "capsid":
        return CapsidComponent(int(d["m"]), int(d["k"]))
    if kind == "tcore":
        return TCoreComponent(int(d["t"]))
    if kind == "residues":
        return ResidueComponent(int(d["m"]), frozenset(int(r) for r in d["residues"]))
    raise ValueError(f"unknown component kind {kind!r}")


@dataclass(frozen=True)
class VectorFamily:
    name: str
    components: tuple[tuple[Component, int], ...]

    def __post_init__(self):
        for _, s in self.components:
            if s < 1:
                raise ValueError("scale factors must be positive")

    def grouped(self) -> Counter:
        """Multiplicity of each distinct (component, scale) slot."""
        return Counter(self.components)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "components": [{**c.to_dict(), "scale": s} for c, s in self.components],
        }

    @classmethod
    def from_dict(cls, data: dict) -> VectorFamily:
        comps = tuple((_component_from_dict(c), int(c.get("scale", 1))) for c in data["components"])
        return cls(str(data["name"]), comps)

    @classmethod
    def from_json(cls, text: str) -> VectorFamily:
        return cls.from_dict(json.loads(text))


def _c(m, k):
    return CapsidComponent(m, k)


T11 = TCoreComponent(11)
_X13 = ResidueComponent(13, frozenset({1, 3, 4, 9, 10, 12}))
_Y13 = ResidueComponent(13, frozenset({2, 5, 6, 7, 8, 11}))

FAMILIES: dict[str, VectorFamily] = {
    "A": VectorFamily("A", ((_c(10, 2), 1), (_c(10, 3), 1), (_c(10, 1), 11), (_c(10, 4), 11), (T11, 10), (T11, 10))),
    "B": VectorFamily("B", ((_c(10, 1), 1), (_c(10, 4), 1), (_c(10, 2), 11), (_c(10, 3), 11), (T11, 10), (T11, 10))),
    "U": VectorFamily(
        "U", ((_c(10, 2), 1), (_c(10, 3), 1), *[(_c(10, 1), 1)] * 11, *[(_c(10, 4), 1)] * 11)
    ),
    "V": VectorFamily(
        "V", ((_c(10, 1), 1), (_c(10, 4), 1), *[(_c(10, 2), 1)] * 11, *[(_c(10, 3), 1)] * 11)
    ),
    "W": VectorFamily(
        "W",
        (*[(_c(10, 1), 1)] * 6, *[(_c(10, 4), 1)] * 6, *[(_c(10, 2), 1)] * 6, *[(_c(10, 3), 1)] * 6),
    ),
    "D": VectorFamily("D", ((_c(13, 2), 1), (_c(13, 5), 1), (_c(13, 6), 1), (_X13, 3))),
    "E": VectorFamily("E", ((_c(13, 1), 1), (_c(13, 3), 1), (_c(13, 4), 1), (_Y13, 3))),
}


# lru_cache keeps its bookkeeping consistent under concurrent callers
@lru_cache(maxsize=256)
def component_series(comp: Component, scale: int, N: int) -> TruncatedSeries:
    """Component series with q -> q^scale, memoized per (component, scale, N)."""
    return substitute_power(comp.series(N // scale), scale, N)


def family_series(f: VectorFamily, N: int) -> TruncatedSeries:
    if N < 0:
        raise ValueError("order must be nonnegative")
    result = TruncatedSeries.one(N)
    for (comp, scale), mult in sorted(f.grouped().items(), key=repr):
        result = result * component_series(comp, scale, N) ** mult
    return result.require_integral(f"family {f.name}")


def count(f: VectorFamily, n: int, series: TruncatedSeries | None = None) -> int:
    """n-th count with the conventions count(0) = 1 and count(n < 0) = 0."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    if series is None or series.order < n:
        series = family_series(f, n)
    return series[n]


def counts(f: VectorFamily, upto: int) -> list[int]:
    """[count(f, 0), ..., count(f, upto)]."""
    return list(family_series(f, upto).coeffs)


def direct_count(f: VectorFamily, n: int) -> int:
    """Count vector partitions of n by enumerating each component's members.

    Member counts per weight come from explicit enumeration; the tuples are
    then counted slot by slot over all ways to split the weight.
    """
    if n < 0:
        return 0
    if n > DIRECT_COUNT_LIMIT:
        raise ValueError(f"direct_count is a test oracle limited to n <= {DIRECT_COUNT_LIMIT}")
    slots = list(f.components)
    members: dict[tuple[Component, int], list[int]] = {}
    for comp, scale in slots:
        if (comp, scale) not in members:
            members[comp, scale] = [comp.members(w) for w in range(n // scale + 1)]

    @lru_cache(maxsize=None)
    def tuples(i: int, rest: int) -> int:
        if i == len(slots):
            return 1 if rest == 0 else 0
        comp, scale = slots[i]
        cnt = members[comp, scale]
        return sum(cnt[w] * tuples(i + 1, rest - scale * w) for w in range(rest // scale + 1) if cnt[w])

    return tuples(0, n)
