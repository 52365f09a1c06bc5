"""Collect the Lambert series specifications that occur inside catalog expressions.

Used to cross-check the series construction against the divisor-sum
coefficient formula on exactly the series the catalog relies on.
"""
from __future__ import annotations

from ..lambert import LambertSpec
from .dsl import BinOp, Call, Neg, evaluate_value, parse, pretty
from .values import as_fn, as_int, as_word


def _sign(s) -> str:
    return "minus" if s is None else as_word(s, ("minus", "plus"), "sign")


def _lambert(f, sign=None):
    return LambertSpec(as_fn(f), sign=_sign(sign))


def _modlambert(f):
    return LambertSpec(as_fn(f), sign="plus")


def _glambert(f, alpha, beta):
    return LambertSpec(as_fn(f), as_int(alpha), as_int(beta))


def _lsum(f, m=1, k=0, t=1, sign=None):
    return LambertSpec(as_fn(f), sign=_sign(sign), power=as_int(k) + 1, m=as_int(m), t=as_int(t))


SPEC_BUILDERS = {"lambert": _lambert, "modlambert": _modlambert, "glambert": _glambert, "lsum": _lsum}


def _calls(node):
    if isinstance(node, Call):
        yield node
        for a in node.args:
            yield from _calls(a)
        for _, a in node.kwargs:
            yield from _calls(a)
    elif isinstance(node, BinOp):
        yield from _calls(node.left)
        yield from _calls(node.right)
    elif isinstance(node, Neg):
        yield from _calls(node.operand)


def expression_specs(text: str, order: int) -> list[tuple[str, LambertSpec]]:
    """``(pretty call text, spec)`` for each Lambert-type call in ``text``."""
    out = []
    for call in _calls(parse(text)):
        make = SPEC_BUILDERS.get(call.func)
        if make is None:
            continue
        args = [evaluate_value(a, order) for a in call.args]
        kwargs = {k: evaluate_value(v, order) for k, v in call.kwargs}
        out.append((pretty(call), make(*args, **kwargs)))
    return out


def catalog_specs(records) -> list[tuple[str, str, LambertSpec, int]]:
    """``(record id, call text, spec, order)`` over every side and reading, deduplicated per record."""
    out = []
    for rec in records:
        texts = [rec.lhs, rec.rhs]
        for rd in rec.readings:
            texts += list(rec.reading_sides(rd))
        seen = set()
        for t in texts:
            for call_text, spec in expression_specs(t, rec.order):
                if call_text not in seen:
                    seen.add(call_text)
                    out.append((rec.id, call_text, spec, rec.order))
    return out
