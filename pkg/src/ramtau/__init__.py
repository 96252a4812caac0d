"""Exact q-series, capsid partitions and combinatorial formulas for Ramanujan's tau function."""

from .qseries import TruncatedSeries, eta24
from .partitions import CapsidSpec, Partition
from .capsid_bijection import bijection_J
from .vector_partitions import FAMILIES, VectorFamily, family_series
from .tau import TauMethod, tau

__version__ = "0.1.0"

__all__ = [
    "TruncatedSeries",
    "eta24",
    "CapsidSpec",
    "Partition",
    "bijection_J",
    "FAMILIES",
    "VectorFamily",
    "family_series",
    "TauMethod",
    "tau",
]
