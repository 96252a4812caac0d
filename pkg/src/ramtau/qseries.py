"""Exact truncated power series in q and the q-products built from them.

Coefficients are Python ints where possible and ``Fraction`` otherwise, so
integer-valued series (everything except the Eisenstein family) never pay
for rational arithmetic.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Sequence

__all__ = [
    "OrderMismatchError",
    "NotInvertibleError",
    "TruncatedSeries",
    "PochhammerFactor",
    "mul",
    "invert",
    "substitute_power",
    "pochhammer_inf",
    "eta_product",
    "p_mk",
    "euler",
    "eta24",
    "tcore_series",
    "capsid_series_product",
    "capsid_series_sum",
    "phi_series",
    "bernoulli",
    "eisenstein",
]


class OrderMismatchError(ValueError):
    pass


class NotInvertibleError(ZeroDivisionError):
    pass


def _normalize(c):
    if isinstance(c, bool):
        raise TypeError("boolean is not a series coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        c = Fraction(c.numerator, c.denominator)
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"coefficient must be an exact rational, got {type(c).__name__}")


class TruncatedSeries:
    """A power series c_0 + c_1 q + ... + c_N q^N + O(q^(N+1)).

    Values are immutable. Binary operations require equal truncation orders;
    use :meth:`truncate` to lower an order explicitly.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [_normalize(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be nonnegative")
            if len(cs) > order + 1:
                cs = cs[: order + 1]
            else:
                cs.extend([0] * (order + 1 - len(cs)))
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        self._coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: list) -> TruncatedSeries:
        # trusted path: coefficients already normalized
        s = object.__new__(cls)
        s._coeffs = tuple(coeffs)
        return s

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls([1], order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff=1) -> TruncatedSeries:
        cs = [0] * (order + 1)
        if exponent <= order:
            cs[exponent] = _normalize(coeff)
        return cls._raw(cs)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def __len__(self):
        return len(self._coeffs)

    def __getitem__(self, n):
        return self._coeffs[n]

    def __iter__(self):
        return iter(self._coeffs)

    def __repr__(self):
        head = ", ".join(str(c) for c in self._coeffs[:8])
        tail = ", ..." if len(self._coeffs) > 8 else ""
        return f"TruncatedSeries([{head}{tail}], order={self.order})"

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def _check(self, other: TruncatedSeries):
        if self.order != other.order:
            raise OrderMismatchError(f"orders differ: {self.order} vs {other.order}")

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check(other)
            return TruncatedSeries._raw([_normalize(x + y) for x, y in zip(self._coeffs, other._coeffs)])
        other = _normalize(other)
        return TruncatedSeries._raw([_normalize(self._coeffs[0] + other), *self._coeffs[1:]])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries._raw([-c for c in self._coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        other = _normalize(other)
        return TruncatedSeries._raw([_normalize(c * other) for c in self._coeffs])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return mul(self, invert(other))
        other = _normalize(other)
        if other == 0:
            raise ZeroDivisionError("division of a series by zero")
        return TruncatedSeries._raw([_normalize(Fraction(c) / other) for c in self._coeffs])

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self
        if k < 0:
            base, k = invert(self), -k
        result = TruncatedSeries.one(self.order)
        while k:
            if k & 1:
                result = mul(result, base)
            k >>= 1
            if k:
                base = mul(base, base)
        return result

    def shift(self, d: int) -> TruncatedSeries:
        """Multiply by q^d, keeping the order."""
        if d < 0:
            raise ValueError("shift must be nonnegative")
        n = len(self._coeffs)
        return TruncatedSeries._raw(([0] * d + list(self._coeffs))[:n])

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise OrderMismatchError(f"cannot raise order {self.order} to {order}")
        return TruncatedSeries._raw(list(self._coeffs[: order + 1]))

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def first_nonzero(self) -> int | None:
        for n, c in enumerate(self._coeffs):
            if c:
                return n
        return None

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._coeffs)

    def require_integral(self, what: str = "series") -> TruncatedSeries:
        if not self.is_integral():
            bad = next(n for n, c in enumerate(self._coeffs) if not isinstance(c, int))
            raise ArithmeticError(f"{what} has non-integral coefficient at q^{bad}: {self._coeffs[bad]}")
        return self

    # --- export -----------------------------------------------------------

    def to_dict(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self._coeffs]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> TruncatedSeries:
        coeffs = [Fraction(c) for c in data["coeffs"]]
        if len(coeffs) != data["order"] + 1:
            raise ValueError("coefficient count does not match order")
        return cls(coeffs)

    @classmethod
    def from_json(cls, text: str) -> TruncatedSeries:
        return cls.from_dict(json.loads(text))

    def to_csv_rows(self) -> list[str]:
        return [f"{n},{c}" for n, c in enumerate(self._coeffs)]


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order."""
    a._check(b)
    N = a.order
    out = [0] * (N + 1)
    nz_b = [(j, y) for j, y in enumerate(b._coeffs) if y]
    for i, x in enumerate(a._coeffs):
        if not x:
            continue
        lim = N - i
        for j, y in nz_b:
            if j > lim:
                break
            out[i + j] += x * y
    if a.is_integral() and b.is_integral():
        return TruncatedSeries._raw(out)
    return TruncatedSeries._raw([_normalize(c) for c in out])


def invert(a: TruncatedSeries) -> TruncatedSeries:
    a0 = a[0]
    if a0 == 0:
        raise NotInvertibleError("constant term is zero")
    N = a.order
    unit = a0 in (1, -1)
    inv0 = a0 if unit else Fraction(1) / a0
    nz = [(k, c) for k, c in enumerate(a._coeffs) if c and k]
    b = [inv0] + [0] * N
    for n in range(1, N + 1):
        s = 0
        for k, c in nz:
            if k > n:
                break
            s += c * b[n - k]
        b[n] = -s * inv0 if unit else _normalize(-s * inv0)
    return TruncatedSeries._raw([_normalize(c) for c in b])


def substitute_power(a: TruncatedSeries, s: int, order: int | None = None) -> TruncatedSeries:
    """Replace q by q^s.

    The result keeps ``a.order`` unless ``order`` is given; in that case ``a``
    must carry at least ``order // s`` coefficients.
    """
    if s < 1:
        raise ValueError("substitution power must be positive")
    N = a.order if order is None else order
    if a.order < N // s:
        raise OrderMismatchError(f"order {a.order} too small to substitute q^{s} up to q^{N}")
    out = [0] * (N + 1)
    for n in range(N // s + 1):
        out[n * s] = a[n]
    return TruncatedSeries._raw(out)


# --- products of (1 - q^e) factors ---------------------------------------


def _times_binomial(cs: list, e: int, times: int = 1) -> None:
    # in place: cs *= (1 - q^e)^times
    N = len(cs) - 1
    for _ in range(times):
        for i in range(N, e - 1, -1):
            cs[i] -= cs[i - e]


def _div_binomial(cs: list, e: int, times: int = 1) -> None:
    # in place: cs /= (1 - q^e)^times
    N = len(cs) - 1
    for _ in range(times):
        for i in range(e, N + 1):
            cs[i] += cs[i - e]


def _apply_exponents(cs: list, exponents: dict[int, int]) -> None:
    for e, p in sorted(exponents.items()):
        if p > 0:
            _times_binomial(cs, e, p)
        elif p < 0:
            _div_binomial(cs, e, -p)


class PochhammerFactor:
    """(q^offset; q^modulus)_inf, optionally raised to an integer power."""

    __slots__ = ("offset", "modulus", "power")

    def __init__(self, offset: int, modulus: int, power: int = 1):
        if offset < 1 or modulus < 1:
            raise ValueError("Pochhammer offset and modulus must be positive")
        self.offset = offset
        self.modulus = modulus
        self.power = power

    def __repr__(self):
        return f"PochhammerFactor({self.offset}, {self.modulus}, power={self.power})"

    def exponents(self, order: int) -> Iterable[int]:
        """Exponents e of the (1 - q^e) factors that matter below ``order``."""
        return range(self.offset, order + 1, self.modulus)


def eta_product(factors: Iterable[PochhammerFactor], order: int) -> TruncatedSeries:
    """Expand a finite product of powers of infinite Pochhammer symbols.

    Factors with exponent above ``order`` are skipped; they equal 1 there.
    """
    exps: dict[int, int] = {}
    for f in factors:
        for e in f.exponents(order):
            exps[e] = exps.get(e, 0) + f.power
    cs = [1] + [0] * order
    _apply_exponents(cs, exps)
    return TruncatedSeries._raw(cs)


def pochhammer_inf(k: int, m: int, N: int) -> TruncatedSeries:
    return eta_product([PochhammerFactor(k, m)], N)


def p_mk(m: int, k: int, N: int) -> TruncatedSeries:
    """(q^k; q^m)_inf (q^(m-k); q^m)_inf."""
    if m < 2 or not 0 < k < m:
        raise ValueError(f"need m >= 2 and 0 < k < m, got m={m}, k={k}")
    return eta_product([PochhammerFactor(k, m), PochhammerFactor(m - k, m)], N)


def euler(N: int, m: int = 1) -> TruncatedSeries:
    """(q^m; q^m)_inf."""
    return pochhammer_inf(m, m, N)


def eta24(N: int) -> TruncatedSeries:
    """q (q;q)_inf^24; the coefficient of q^n is tau(n)."""
    if N < 1:
        raise ValueError("eta24 needs order >= 1")
    e1 = euler(N - 1)
    e2 = e1 * e1
    e4 = e2 * e2
    e8 = e4 * e4
    e24 = e8 * e8 * e8
    return TruncatedSeries._raw([0, *e24.coeffs]).require_integral("eta24")


def tcore_series(t: int, N: int) -> TruncatedSeries:
    """(q^t; q^t)_inf^t / (q; q)_inf, generating t-core partitions."""
    if t < 2:
        raise ValueError("t-cores need t >= 2")
    return eta_product([PochhammerFactor(t, t, t), PochhammerFactor(1, 1, -1)], N)


def capsid_series_product(m: int, k: int, N: int) -> TruncatedSeries:
    """(q^m; q^m)_inf / P_{m,k}(q)."""
    if m < 2 or not 0 < k < m:
        raise ValueError(f"need m >= 2 and 0 < k < m, got m={m}, k={k}")
    return eta_product(
        [PochhammerFactor(m, m), PochhammerFactor(k, m, -1), PochhammerFactor(m - k, m, -1)], N
    )


def capsid_series_sum(m: int, r1: int, r2: int, N: int) -> TruncatedSeries:
    """Sum over n of q^(r1 n) / ((q^m;q^m)_n (q^(mn+r2); q^m)_inf).

    The n-th term is obtained from the previous one by multiplying with
    q^r1 (1 - q^(m(n-1)+r2)) / (1 - q^(mn)).
    """
    if m < 2 or not 0 < r1 < m or not 0 < r2 < m:
        raise ValueError(f"need m >= 2 and 0 < r1, r2 < m, got ({m}, {r1}, {r2})")
    term = pochhammer_inf(r2, m, N)
    term = list(invert(term).coeffs)
    total = list(term)
    n = 1
    while r1 * n <= N:
        _times_binomial(term, m * (n - 1) + r2)
        _div_binomial(term, m * n)
        term = ([0] * r1 + term)[: N + 1]
        for i in range(r1 * n, N + 1):
            total[i] += term[i]
        n += 1
    return TruncatedSeries._raw(total)


def phi_series(j: int, N: int) -> TruncatedSeries:
    """Sum of sigma_j(n) q^n."""
    if j < 1 or j % 2 == 0:
        raise ValueError("phi_series needs an odd positive power")
    cs = [0] * (N + 1)
    for d in range(1, N + 1):
        dj = d**j
        for n in range(d, N + 1, d):
            cs[n] += dj
    return TruncatedSeries._raw(cs)


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """B_n from sum_{k=0}^{n} C(n+1, k) B_k = 0 with B_0 = 1 (so B_1 = -1/2)."""
    if n < 0:
        raise ValueError("Bernoulli index must be nonnegative")
    if n == 0:
        return Fraction(1)
    from math import comb

    s = sum(comb(n + 1, k) * bernoulli(k) for k in range(n))
    return -s / (n + 1)


def eisenstein(n: int, N: int) -> TruncatedSeries:
    """E_n = 1 - (2n / B_n) Phi_{n-1}."""
    if n < 2 or n % 2:
        raise ValueError("Eisenstein series need an even weight >= 2")
    scale = -Fraction(2 * n) / bernoulli(n)
    return phi_series(n - 1, N) * scale + 1


def from_sparse(terms: dict[int, int] | Sequence[tuple[int, int]], N: int) -> TruncatedSeries:
    """Series with the given exponent -> coefficient entries (beyond N dropped)."""
    items = terms.items() if isinstance(terms, dict) else terms
    cs = [0] * (N + 1)
    for e, c in items:
        if 0 <= e <= N:
            cs[e] += c
    return TruncatedSeries(cs)
