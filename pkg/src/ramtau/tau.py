"""Five independent ways to compute Ramanujan's tau function."""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterable

from .qseries import eisenstein, eta24
from .vector_partitions import FAMILIES, count, family_series

__all__ = [
    "TauMethod",
    "OrderBudgetError",
    "DEFAULT_MAX_ORDER",
    "required_order",
    "sigma",
    "tau",
    "tau_values",
    "tau_e12_conv",
]

DEFAULT_MAX_ORDER = 6000


class TauMethod(enum.Enum):
    ETA24 = "eta24"
    THM1 = "thm1"
    THM2 = "thm2"
    EIS46 = "eis46"
    E12_CONV = "e12_conv"

    @classmethod
    def parse(cls, name: str | TauMethod) -> TauMethod:
        if isinstance(name, cls):
            return name
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown method {name!r}; choose from {[m.value for m in cls]}") from None


class OrderBudgetError(RuntimeError):
    """A computation would need a series order above the allowed budget."""

    def __init__(self, needed: int, budget: int, suggestion: str = ""):
        self.needed = needed
        self.budget = budget
        msg = f"needs series order {needed}, budget is {budget}"
        if suggestion:
            msg += f"; {suggestion}"
        super().__init__(msg)


_ORDER_PER_N = {
    TauMethod.ETA24: 1,
    TauMethod.THM1: 110,
    TauMethod.THM2: 10,
    TauMethod.EIS46: 1,
    TauMethod.E12_CONV: 1,
}


def required_order(n: int, method: TauMethod | str) -> int:
    return _ORDER_PER_N[TauMethod.parse(method)] * n


def _check_budget(n: int, method: TauMethod, max_order: int):
    need = required_order(n, method)
    if need > max_order:
        per = _ORDER_PER_N[method]
        raise OrderBudgetError(need, max_order, f"try n <= {max_order // per} or raise the budget")


def sigma(j: int, n: int) -> int:
    """Sum of d^j over the divisors d of n."""
    if n < 1:
        raise ValueError("sigma needs n >= 1")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**j
            if d * d != n:
                total += (n // d) ** j
        d += 1
    return total


def tau_e12_conv(n: int) -> int:
    """65/756 s11(n) + 691/756 s5(n) - 691/3 sum_{m<n} s5(m) s5(n-m), checked integral."""
    s5 = [0] + [sigma(5, m) for m in range(1, n + 1)]
    conv = sum(s5[m] * s5[n - m] for m in range(1, n))
    value = Fraction(65, 756) * sigma(11, n) + Fraction(691, 756) * s5[n] - Fraction(691, 3) * conv
    if value.denominator != 1:
        raise ArithmeticError(f"divisor-sum formula gave non-integer {value} at n={n}")
    return value.numerator


def tau_values(ns: Iterable[int], method: TauMethod | str = TauMethod.ETA24, max_order: int = DEFAULT_MAX_ORDER) -> dict[int, int]:
    """tau(n) for every n in ``ns``, sharing one series expansion per call."""
    method = TauMethod.parse(method)
    ns = sorted(set(ns))
    if not ns:
        return {}
    if ns[0] < 1:
        raise ValueError("tau is defined for n >= 1")
    top = ns[-1]
    _check_budget(top, method, max_order)
    N = required_order(top, method)

    if method is TauMethod.ETA24:
        s = eta24(N)
        return {n: s[n] for n in ns}
    if method is TauMethod.EIS46:
        e4, e6 = eisenstein(4, N), eisenstein(6, N)
        s = ((e4**3 - e6**2) / 1728).require_integral("(E4^3 - E6^2)/1728")
        return {n: s[n] for n in ns}
    if method is TauMethod.E12_CONV:
        return {n: tau_e12_conv(n) for n in ns}
    if method is TauMethod.THM1:
        A = family_series(FAMILIES["A"], N)
        B = family_series(FAMILIES["B"], N)
        return {
            n: count(FAMILIES["A"], 110 * n - 110, A) - count(FAMILIES["B"], 110 * n - 112, B)
            for n in ns
        }
    U = family_series(FAMILIES["U"], N)
    V = family_series(FAMILIES["V"], N)
    W = family_series(FAMILIES["W"], N)
    return {
        n: count(FAMILIES["U"], 10 * n - 10, U)
        - count(FAMILIES["V"], 10 * n - 12, V)
        - 11 * count(FAMILIES["W"], 10 * n - 11, W)
        for n in ns
    }


def tau(n: int, method: TauMethod | str = TauMethod.ETA24, max_order: int = DEFAULT_MAX_ORDER) -> int:
    return tau_values([n], method, max_order)[n]
