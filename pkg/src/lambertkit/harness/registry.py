"""Named constructors callable from the expression language."""
from __future__ import annotations

import inspect
import re
from functools import lru_cache
from typing import Callable, Optional

from ..arith import ArithmeticFunction, builtin, builtin_names, is_parametrized
from ..fps import TruncatedSeries
from .values import LogQSeries, Word

WORDS = frozenset({
    "minus", "plus",
    "distinct", "unrestricted",
    "printed", "shifted", "corrected", "alternating", "boundary",
    "inner", "outer", "dirichlet",
    "atn", "atm",
    "indexed", "modulus",
    "mphi", "mpsi", "mrho", "msigma", "mgamma",
})

_ALIAS = re.compile(r"^(sigma|id|jordan|dk|dedekind|totpow)(\d+)$")


class Builder:
    """A registered constructor with its call signature (``order`` excluded)."""

    def __init__(self, name: str, func: Callable):
        self.name = name
        self.func = func
        sig = inspect.signature(func)
        self.needs_order = "order" in sig.parameters
        params = [p for p in sig.parameters.values() if p.name != "order"]
        self.params = tuple(p.name for p in params)
        self.required = sum(1 for p in params if p.default is inspect.Parameter.empty)
        self.doc = (inspect.getdoc(func) or "").split("\n")[0]

    @property
    def signature(self) -> str:
        sig = inspect.signature(self.func)
        parts = [str(p) for p in sig.parameters.values() if p.name != "order"]
        return f"{self.name}({', '.join(parts)})"

    def arity_error(self, npos: int, keywords: tuple) -> Optional[str]:
        if npos > len(self.params):
            return f"{self.name} takes at most {len(self.params)} positional arguments, got {npos}"
        for i, k in enumerate(keywords):
            if k not in self.params:
                return f"{self.name} has no parameter {k!r}"
            if self.params.index(k) < npos:
                return f"{self.name} got parameter {k!r} twice"
            if k in keywords[:i]:
                return f"{self.name} got parameter {k!r} twice"
        filled = set(self.params[:npos]) | set(keywords)
        missing = [p for p in self.params[: self.required] if p not in filled]
        if missing:
            return f"{self.name} missing required argument {missing[0]!r}"
        return None

    def __call__(self, args: list, kwargs: dict, order: int):
        if self.needs_order:
            return self.func(*args, **kwargs, order=order)
        return self.func(*args, **kwargs)


BUILDERS: dict[str, Builder] = {}


def builder(name: Optional[str] = None):
    def register(func):
        key = name or func.__name__.removeprefix("b_")
        if key in BUILDERS:
            raise ValueError(f"builder {key!r} registered twice")
        BUILDERS[key] = Builder(key, func)
        return func
    return register


def _param_builtin(name: str):
    def build(k):
        from .values import as_scalar
        k = as_scalar(k, f"{name} parameter")
        if name in ("cpow_omega", "geom"):
            return builtin(name, k)
        from .values import as_int
        return builtin(name, as_int(k, f"{name} parameter"))
    build.__doc__ = f"Arithmetic function ``{name}(k)``."
    return build


def builders() -> dict[str, Builder]:
    """All builders, loading the definition modules on first use."""
    if not BUILDERS:
        from . import builders_fn, builders_series  # noqa: F401
        for nm in builtin_names():
            if is_parametrized(nm):
                BUILDERS[nm] = Builder(nm, _param_builtin(nm))
    return BUILDERS


@lru_cache(maxsize=None)
def _named_function(name: str) -> Optional[ArithmeticFunction]:
    if name in builtin_names() and not is_parametrized(name):
        return builtin(name)
    m = _ALIAS.match(name)
    if m:
        return builtin(m.group(1), int(m.group(2)))
    return None


def is_known_name(name: str) -> bool:
    return name in ("q", "logq") or name in WORDS or _named_function(name) is not None


def resolve_name(name: str, order: int):
    if name == "q":
        return TruncatedSeries.monomial(1, order)
    if name == "logq":
        return LogQSeries(TruncatedSeries.zero(order), TruncatedSeries.constant(1, order))
    if name in WORDS:
        return Word(name)
    f = _named_function(name)
    if f is None:
        raise KeyError(name)
    return f


def known_names() -> list[str]:
    simple = [n for n in builtin_names() if not is_parametrized(n)]
    return ["q", "logq"] + simple + sorted(WORDS)
