"""Runtime values of the expression language."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..arith import ArithmeticFunction
from ..fps import DomainError, LogLinear, TruncatedSeries, normalize

SCALARS = (int, Fraction, LogLinear)


@dataclass(frozen=True)
class Word:
    """A bare option keyword such as ``minus`` or ``printed``."""

    text: str

    def __str__(self) -> str:
        return self.text


class LogQSeries:
    """``a(q) + log(q) * b(q)``, kept only until the ``log q`` unit cancels."""

    __slots__ = ("a", "b")

    def __init__(self, a: TruncatedSeries, b: TruncatedSeries):
        n = min(a.order, b.order)
        self.a = a.truncate(n)
        self.b = b.truncate(n)

    @property
    def order(self) -> int:
        return self.a.order

    def _split(self, other):
        if isinstance(other, LogQSeries):
            return other.a, other.b
        if isinstance(other, TruncatedSeries):
            return other, TruncatedSeries.zero(other.order)
        if isinstance(other, SCALARS):
            return TruncatedSeries.constant(other, self.order), TruncatedSeries.zero(self.order)
        return None

    def __add__(self, other):
        s = self._split(other)
        if s is None:
            return NotImplemented
        return LogQSeries(self.a + s[0], self.b + s[1])

    __radd__ = __add__

    def __neg__(self):
        return LogQSeries(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, LogQSeries):
            raise DomainError("log(q) * log(q) is outside the value domain")
        if isinstance(other, (TruncatedSeries, *SCALARS)):
            return LogQSeries(self.a * other, self.b * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, LogQSeries):
            # (a + L b) / (c + L d) is a power series only when a = c = 0
            if not self.a.is_zero() or not other.a.is_zero():
                raise DomainError("log(q) does not cancel in quotient")
            return self.b / other.b
        if isinstance(other, (TruncatedSeries, *SCALARS)):
            return LogQSeries(self.a / other, self.b / other)
        return NotImplemented

    def __rtruediv__(self, other):
        raise DomainError("division by a log(q) term")

    def collapse(self):
        """Plain series when the ``log q`` part vanishes, else ``self``."""
        return self.a if self.b.is_zero() else self


def type_name(v) -> str:
    if isinstance(v, TruncatedSeries):
        return "series"
    if isinstance(v, LogQSeries):
        return "log-series"
    if isinstance(v, ArithmeticFunction):
        return "function"
    if isinstance(v, Word):
        return "word"
    if isinstance(v, SCALARS):
        return "scalar"
    return type(v).__name__


class EvalError(Exception):
    """Type or argument error raised while evaluating an expression."""


def as_int(v, what: str = "argument") -> int:
    if isinstance(v, int):
        return v
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    raise EvalError(f"{what} must be an integer, got {type_name(v)} {v}")


def as_scalar(v, what: str = "argument"):
    if isinstance(v, SCALARS):
        return normalize(v)
    raise EvalError(f"{what} must be a scalar, got {type_name(v)}")


def as_fn(v, what: str = "argument") -> ArithmeticFunction:
    if isinstance(v, ArithmeticFunction):
        return v
    if isinstance(v, SCALARS):
        c = normalize(v)
        return ArithmeticFunction(lambda n: c, str(c))
    raise EvalError(f"{what} must be an arithmetic function, got {type_name(v)}")


def as_series(v, order: int, what: str = "argument") -> TruncatedSeries:
    if isinstance(v, LogQSeries):
        v = v.collapse()
    if isinstance(v, TruncatedSeries):
        return v
    if isinstance(v, SCALARS):
        return TruncatedSeries.constant(v, order)
    raise EvalError(f"{what} must be a series, got {type_name(v)}")


def as_word(v, choices: tuple, what: str = "option") -> str:
    if isinstance(v, Word) and v.text in choices:
        return v.text
    raise EvalError(f"{what} must be one of {', '.join(choices)}, got {v}")
