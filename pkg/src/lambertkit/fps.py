"""Truncated formal power series over exact scalars.

Coefficients are either :class:`fractions.Fraction` or :class:`LogLinear`
(a rational plus a rational combination of ``log p`` for primes ``p``).
A :class:`TruncatedSeries` of order ``N`` stores coefficients ``0..N``;
binary operations between series of different orders truncate to the
smaller order.
"""
from __future__ import annotations

import math
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Optional, Union

ZERO = Fraction(0)
ONE = Fraction(1)


class DomainError(ArithmeticError):
    """Raised when an operation leaves the exact scalar domain.

    ``at`` optionally records the (possibly fractional) exponent where it happened.
    """

    def __init__(self, message: str = "", at=None):
        super().__init__(message)
        self.at = at


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _factor_small(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


class LogLinear:
    """Exact value ``const + sum(a_p * log p)``.

    The set of these values is a vector space over the rationals; the
    product of two values that both carry logarithms is rejected.
    """

    __slots__ = ("const", "logs")

    def __init__(self, const=0, logs: Optional[Mapping[int, object]] = None):
        self.const = Fraction(const)
        clean: dict[int, Fraction] = {}
        for p, a in (logs or {}).items():
            p = int(p)
            a = Fraction(a)
            if not a:
                continue
            if not _is_prime(p):
                raise DomainError(f"log key {p} is not prime")
            clean[p] = clean.get(p, ZERO) + a
        self.logs = {p: a for p, a in sorted(clean.items()) if a}

    @classmethod
    def log(cls, n: int, factorization: Optional[Mapping[int, int]] = None) -> "ExactValue":
        """Exact ``log n`` for a positive integer ``n``."""
        if n < 1:
            raise DomainError(f"log of non-positive integer {n}")
        fac = factorization if factorization is not None else _factor_small(n)
        return normalize(cls(0, {p: e for p, e in fac.items()}))

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> Optional["LogLinear"]:
        if isinstance(other, LogLinear):
            return other
        if isinstance(other, (int, Fraction)):
            return LogLinear(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        logs = dict(self.logs)
        for p, a in o.logs.items():
            logs[p] = logs.get(p, ZERO) + a
        return normalize(LogLinear(self.const + o.const, logs))

    __radd__ = __add__

    def __neg__(self):
        return LogLinear(-self.const, {p: -a for p, a in self.logs.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.logs and o.logs:
            raise DomainError("product of two logarithmic values")
        if not o.logs:
            c = o.const
            return normalize(LogLinear(self.const * c, {p: a * c for p, a in self.logs.items()}))
        return o * self

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.logs:
            raise DomainError("division by a logarithmic value")
        return self * (1 / o.const)

    def __rtruediv__(self, other):
        if self.logs:
            raise DomainError("division by a logarithmic value")
        return Fraction(other) / self.const

    def __bool__(self) -> bool:
        return bool(self.const) or bool(self.logs)

    def __float__(self) -> float:
        # inexact, for plotting only
        return float(self.const) + sum(float(a) * math.log(p) for p, a in self.logs.items())

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.const == o.const and self.logs == o.logs

    def __hash__(self) -> int:
        if not self.logs:
            return hash(self.const)
        return hash((self.const, tuple(self.logs.items())))

    def __repr__(self) -> str:
        return f"LogLinear({self.const!r}, {self.logs!r})"

    def __str__(self) -> str:
        return format_exact(self)


ExactValue = Union[Fraction, LogLinear]


def normalize(v) -> ExactValue:
    """Collapse to a Fraction when there is no logarithmic part."""
    if isinstance(v, LogLinear):
        return v.const if not v.logs else v
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise DomainError(f"not an exact value: {v!r}")


def format_exact(v) -> str:
    v = normalize(v)
    if isinstance(v, Fraction):
        return str(v)
    parts = [str(v.const)] if v.const else []
    parts += [f"({a})·log {p}" for p, a in v.logs.items()]
    return " + ".join(parts)


def _mul_binomial(c: list, z, e: int) -> None:
    """In place: c *= (1 - z q^e)."""
    for k in range(len(c) - 1, e - 1, -1):
        if c[k - e]:
            c[k] -= z * c[k - e]


def _div_binomial(c: list, z, e: int) -> None:
    """In place: c /= (1 - z q^e)."""
    for k in range(e, len(c)):
        if c[k - e]:
            c[k] += z * c[k - e]


class TruncatedSeries:
    """Immutable power series ``sum c_k q^k`` known for ``k <= order``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable):
        c = tuple(normalize(x) for x in coeffs)
        if not c:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "_c", c)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # -- constructors -----------------------------------------------------
    @classmethod
    def _raw(cls, coeffs: list) -> "TruncatedSeries":
        obj = object.__new__(cls)
        object.__setattr__(obj, "_c", tuple(coeffs))
        return obj

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls._raw([ZERO] * (order + 1))

    @classmethod
    def constant(cls, value, order: int) -> "TruncatedSeries":
        return cls._raw([normalize(value)] + [ZERO] * order)

    @classmethod
    def monomial(cls, k: int, order: int, coeff=1) -> "TruncatedSeries":
        c = [ZERO] * (order + 1)
        if 0 <= k <= order:
            c[k] = normalize(coeff)
        return cls._raw(c)

    @classmethod
    def from_function(cls, f, order: int, start: int = 1) -> "TruncatedSeries":
        """OGF ``sum_{n>=start} f(n) q^n``."""
        c = [ZERO] * (order + 1)
        for n in range(max(start, 0), order + 1):
            c[n] = normalize(f(n))
        return cls._raw(c)

    @classmethod
    def geometric(cls, e: int, order: int, z=1, numerator_shift: int = 0) -> "TruncatedSeries":
        """``q^shift / (1 - z q^e)``."""
        if e < 1:
            raise DomainError("geometric ratio exponent must be positive")
        c = [ZERO] * (order + 1)
        z = normalize(z)
        val = ONE
        for k in range(numerator_shift, order + 1, e):
            c[k] = val
            val = val * z
        return cls._raw(c)

    # -- access -----------------------------------------------------------
    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple:
        return self._c

    def __getitem__(self, k):
        return self._c[k]

    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"TruncatedSeries({[format_exact(x) for x in self._c]!r})"

    def __str__(self) -> str:
        terms = []
        for k, x in enumerate(self._c):
            if not x:
                continue
            s = format_exact(x)
            if isinstance(x, LogLinear):
                s = f"({s})"
            terms.append(s if k == 0 else f"{s}*q^{k}")
        return (" + ".join(terms) or "0") + f" + O(q^{self.order + 1})"

    def is_zero(self) -> bool:
        return not any(self._c)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries._raw(list(self._c[: order + 1]))

    def first_difference(self, other: "TruncatedSeries") -> Optional[int]:
        """Smallest index where the two series differ (to the common order)."""
        for k, (x, y) in enumerate(zip(self._c, other._c)):
            if x != y:
                return k
        return None

    # -- ring operations --------------------------------------------------
    def _lift(self, other) -> Optional["TruncatedSeries"]:
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction, LogLinear)):
            return TruncatedSeries.constant(other, self.order)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return add(self, o)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries._raw([-x for x in self._c])

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return add(self, -o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return add(o, -self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LogLinear)):
            s = normalize(other)
            return TruncatedSeries._raw([x * s if x else ZERO for x in self._c])
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, LogLinear)):
            s = normalize(other)
            if isinstance(s, LogLinear):
                raise DomainError("division by a logarithmic value")
            if not s:
                raise ZeroDivisionError("series divided by zero")
            return self * (1 / s)
        if isinstance(other, TruncatedSeries):
            return mul(self, reciprocal(other))
        return NotImplemented

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return mul(o, reciprocal(self))

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise DomainError("series powers must be integers")
        if k < 0:
            return reciprocal(self) ** (-k)
        result = TruncatedSeries.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                result = mul(result, base)
            k >>= 1
            if k:
                base = mul(base, base)
        return result

    # -- method forms -----------------------------------------------------
    def shift(self, j: int) -> "TruncatedSeries":
        """Multiply by ``q^j`` (``j >= 0``)."""
        if j < 0:
            raise DomainError("negative shift leaves the power series ring")
        n = self.order
        return TruncatedSeries._raw([ZERO] * min(j, n + 1) + list(self._c[: max(n + 1 - j, 0)]))

    def derivative(self) -> "TruncatedSeries":
        """Formal d/dq; the order drops by one."""
        if self.order == 0:
            return TruncatedSeries.zero(0)
        return TruncatedSeries._raw([k * self._c[k] for k in range(1, self.order + 1)])

    def q_derivative_power(self, j: int) -> "TruncatedSeries":
        """``q^j * D^j`` applied termwise; keeps the order."""
        c = [ZERO] * (self.order + 1)
        for k, x in enumerate(self._c):
            if x and k >= j:
                c[k] = x * _falling(k, j)
        return TruncatedSeries._raw(c)

    def compose_power(self, k: int) -> "TruncatedSeries":
        return compose_power(self, k)

    def reciprocal(self) -> "TruncatedSeries":
        return reciprocal(self)

    def multisect(self, d: int, r: int = 0) -> "TruncatedSeries":
        return multisect(self, d, r)

    def log(self) -> "TruncatedSeries":
        return log_series(self)

    def exp(self) -> "TruncatedSeries":
        return exp_series(self)


def _falling(k: int, j: int) -> int:
    out = 1
    for i in range(j):
        out *= k - i
    return out


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    return TruncatedSeries._raw([normalize(a[k] + b[k]) for k in range(n + 1)])


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to the smaller order."""
    n = min(a.order, b.order)
    out = [ZERO] * (n + 1)
    nzb = [(j, y) for j, y in enumerate(b.coeffs[: n + 1]) if y]
    for i, x in enumerate(a.coeffs[: n + 1]):
        if not x:
            continue
        lim = n - i
        for j, y in nzb:
            if j > lim:
                break
            out[i + j] += x * y
    return TruncatedSeries._raw([normalize(v) for v in out])


def reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    a0 = a[0]
    if isinstance(a0, LogLinear):
        raise DomainError("constant term of a reciprocal must be rational")
    if not a0:
        raise ZeroDivisionError("reciprocal of a series with zero constant term")
    n = a.order
    inv0 = 1 / a0
    nz = [(k, x) for k, x in enumerate(a.coeffs) if k and x]
    r = [inv0] + [ZERO] * n
    for m in range(1, n + 1):
        s = ZERO
        for k, x in nz:
            if k > m:
                break
            if r[m - k]:
                s += x * r[m - k]
        r[m] = normalize(-s * inv0)
    return TruncatedSeries._raw(r)


def compose_power(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """Substitute ``q -> q^k``."""
    if k < 1:
        raise DomainError("substitution power must be positive")
    n = a.order
    c = [ZERO] * (n + 1)
    for i in range(0, n // k + 1):
        c[i * k] = a[i]
    return TruncatedSeries._raw(c)


def multisect(a: TruncatedSeries, d: int, r: int = 0) -> TruncatedSeries:
    """Keep coefficients at indices congruent to ``r`` mod ``d``."""
    if d < 1 or not 0 <= r < d:
        raise DomainError(f"bad multisection d={d}, r={r}")
    return TruncatedSeries._raw([x if k % d == r else ZERO for k, x in enumerate(a.coeffs)])


def _require_rational(a: TruncatedSeries, what: str) -> None:
    if any(isinstance(x, LogLinear) for x in a.coeffs):
        raise DomainError(f"{what} needs rational coefficients")


def log_series(a: TruncatedSeries) -> TruncatedSeries:
    """Formal logarithm of a series with constant term 1."""
    _require_rational(a, "log")
    if a[0] != 1:
        raise DomainError("log needs constant term 1")
    n = a.order
    c = a.coeffs
    lg = [ZERO] * (n + 1)
    for m in range(1, n + 1):
        s = ZERO
        for k in range(1, m):
            if lg[k] and c[m - k]:
                s += k * lg[k] * c[m - k]
        lg[m] = c[m] - s / m
    return TruncatedSeries._raw(lg)


def exp_series(a: TruncatedSeries) -> TruncatedSeries:
    """Formal exponential of a series with constant term 0."""
    _require_rational(a, "exp")
    if a[0] != 0:
        raise DomainError("exp needs constant term 0")
    n = a.order
    c = a.coeffs
    e = [ONE] + [ZERO] * n
    for m in range(1, n + 1):
        s = ZERO
        for k in range(1, m + 1):
            if c[k] and e[m - k]:
                s += k * c[k] * e[m - k]
        e[m] = s / m
    return TruncatedSeries._raw(e)


def pochhammer(a_exponent: int, step: int, count: Optional[int], order: int, z=1) -> TruncatedSeries:
    """``prod_{j<count} (1 - z q^(a + j*step))``; ``count=None`` is the infinite product.

    ``z=-1`` gives the ``(-q^a; q^step)`` products.
    """
    if step < 1:
        raise DomainError("pochhammer step must be positive")
    z = normalize(z)
    c = [ONE] + [ZERO] * order
    j = 0
    while count is None or j < count:
        e = a_exponent + j * step
        if e <= 0:
            raise DomainError(f"non-positive exponent {e} in a pochhammer factor")
        if e > order:
            if count is None:
                break
        else:
            _mul_binomial(c, z, e)
        j += 1
    return TruncatedSeries._raw(c)


def binomial_expansion(e: int, power: int, order: int, z=1, shift: int = 0) -> TruncatedSeries:
    """``q^shift / (1 - z q^e)^power`` expanded exactly."""
    if e < 1 or power < 0:
        raise DomainError("bad binomial expansion parameters")
    z = normalize(z)
    c = [ZERO] * (order + 1)
    j = 0
    while shift + j * e <= order:
        c[shift + j * e] = normalize(comb(j + power - 1, power - 1) * z**j) if power else (ONE if j == 0 else ZERO)
        j += 1
    return TruncatedSeries._raw(c)


def q(order: int) -> TruncatedSeries:
    return TruncatedSeries.monomial(1, order)
