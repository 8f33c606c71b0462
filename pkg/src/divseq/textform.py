"""Canonical text form for ring elements.

Grammar, whitespace ignored:

    expr   := [ '+' | '-' ] term { ( '+' | '-' ) term }
    term   := factor { [ '*' ] factor }
    factor := INT | NAME [ '^' INT ]

NAME must be a variable of the ring; juxtaposition multiplies, so '2x'
and '2*x' parse the same way.  Printing is canonical: monomials in
descending lexicographic exponent order (signature order), '*' always
written out, coefficients 1 and -1 suppressed, terms joined without
spaces.  parse(format(p)) reproduces p exactly.
"""

from __future__ import annotations

import re

from . import poly
from .errors import UsageError

_TOKEN_RE = re.compile(r"\d+|[A-Za-z_][A-Za-z0-9_]*|\S")


def _tokenize(text):
    toks = []
    for m in _TOKEN_RE.finditer(text):
        t = m.group()
        if t[0].isdigit() or t[0].isalpha() or t[0] == "_" or t in "+-*^":
            toks.append(t)
        else:
            raise UsageError(f"unexpected character {t!r} in element text")
    return toks


def _is_int(t):
    return t is not None and t[0].isdigit()


def _is_name(t):
    return t is not None and (t[0].isalpha() or t[0] == "_")


class _Cursor:
    def __init__(self, toks):
        self.toks = toks
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self):
        t = self.peek()
        self.i += 1
        return t


def _parse_term(cur, variables, index_of):
    coeff = 1
    exps = [0] * len(variables)
    saw = False
    while True:
        t = cur.peek()
        if t == "*":
            if not saw:
                raise UsageError("misplaced '*' in element text")
            cur.take()
            t = cur.peek()
            if not (_is_int(t) or _is_name(t)):
                raise UsageError("expected a factor after '*'")
            continue
        if _is_int(t):
            cur.take()
            coeff *= int(t)
            saw = True
            if cur.peek() == "^":
                raise UsageError("'^' applies to variables only")
            continue
        if _is_name(t):
            cur.take()
            if t not in index_of:
                known = ", ".join(variables) if variables else "none"
                raise UsageError(
                    f"unknown variable {t!r} (ring variables: {known})"
                )
            e = 1
            if cur.peek() == "^":
                cur.take()
                t2 = cur.take()
                if not _is_int(t2):
                    raise UsageError("expected an integer exponent after '^'")
                e = int(t2)
            exps[index_of[t]] += e
            saw = True
            continue
        break
    if not saw:
        tail = f" before {t!r}" if t is not None else ""
        raise UsageError(f"expected a term{tail}")
    return coeff, tuple(exps)


def parse_rep(text, variables):
    """Parse canonical text into a recursive representation for the ring
    with the given variable signature."""
    toks = _tokenize(text)
    if not toks:
        raise UsageError("empty element text")
    cur = _Cursor(toks)
    index_of = {name: k for k, name in enumerate(variables)}
    monos: dict[tuple, int] = {}
    sign = 1
    if cur.peek() in ("+", "-"):
        sign = -1 if cur.take() == "-" else 1
    while True:
        coeff, exps = _parse_term(cur, variables, index_of)
        monos[exps] = monos.get(exps, 0) + sign * coeff
        t = cur.take()
        if t is None:
            break
        if t == "+":
            sign = 1
        elif t == "-":
            sign = -1
        else:
            raise UsageError(f"unexpected {t!r} in element text")
    pairs = [(e, k) for e, k in monos.items() if k]
    return poly.from_monomials(pairs, len(variables))


def format_rep(rep, variables):
    """Render a representation canonically; see the module docstring."""
    depth = len(variables)
    monos = sorted(poly.monomials(rep, depth), key=lambda m: m[0], reverse=True)
    if not monos:
        return "0"
    parts = []
    for exps, k in monos:
        factors = []
        for name, e in zip(variables, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(k)
        if factors and mag != 1:
            body = f"{mag}*" + "*".join(factors)
        elif factors:
            body = "*".join(factors)
        else:
            body = str(mag)
        if not parts:
            parts.append(body if k > 0 else "-" + body)
        else:
            parts.append(("+" if k > 0 else "-") + body)
    return "".join(parts)
