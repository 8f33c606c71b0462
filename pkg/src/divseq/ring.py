"""Rings and elements for the two exact coefficient domains.

A Ring is either the integers (empty signature) or Z[v1, ..., vk] with a
fixed, ordered tuple of variable names; the last variable is the
outermost one in the recursive representation.  RingElement pairs a Ring
with a value and supports exact arithmetic through operators.

The gcd-domain operations live here as module functions: gcd, lcm and
their list forms, exact division, canonical associates and substitution.
They reject zero inputs and mixed rings.  Arithmetic results are exact
values; only gcd, lcm and normalize produce canonical associates, whose
convention is a positive innermost leading integer.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from typing import Mapping, Sequence

from . import poly, textform
from .errors import DomainError, InexactDivision, UsageError

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class Ring:
    """The integers when the signature is empty, else Z[variables]."""

    __slots__ = ("variables",)

    def __init__(self, variables: tuple[str, ...] = ()):
        vs = tuple(variables)
        for v in vs:
            if not isinstance(v, str) or not _NAME_RE.match(v):
                raise UsageError(f"invalid variable name {v!r}")
        if len(set(vs)) != len(vs):
            raise UsageError(f"duplicate variable names in {vs!r}")
        self.variables = vs

    @property
    def depth(self) -> int:
        return len(self.variables)

    def __eq__(self, other):
        return isinstance(other, Ring) and self.variables == other.variables

    def __hash__(self):
        return hash(self.variables)

    def __repr__(self):
        return f"Ring({self.variables!r})"

    def __str__(self):
        if not self.variables:
            return "INT"
        return f"POLY({','.join(self.variables)})"

    def element(self, rep) -> "RingElement":
        """Wrap an already-valid representation; internal constructor."""
        return RingElement(self, rep)

    def zero(self) -> "RingElement":
        return RingElement(self, poly.zero(self.depth))

    def one(self) -> "RingElement":
        return RingElement(self, poly.one(self.depth))

    def from_int(self, n: int) -> "RingElement":
        if not isinstance(n, int):
            raise UsageError(f"expected an int, got {type(n).__name__}")
        return RingElement(self, poly.from_int(n, self.depth))

    def variable(self, name: str) -> "RingElement":
        if name not in self.variables:
            raise DomainError(f"{self} has no variable {name!r}")
        index = self.variables.index(name)
        return RingElement(self, poly.var_power(index, 1, self.depth))

    def parse(self, text: str) -> "RingElement":
        return RingElement(self, textform.parse_rep(text, self.variables))


INT = Ring(())


class RingElement:
    """An immutable exact value inside a Ring.

    Supports +, -, *, ** with other elements of the same ring (ints are
    coerced); equality is structural.  str() is the canonical text form
    and round-trips through Ring.parse.
    """

    __slots__ = ("ring", "rep")

    def __init__(self, ring: Ring, rep):
        self.ring = ring
        self.rep = rep

    @property
    def is_zero(self) -> bool:
        return poly.is_zero(self.rep, self.ring.depth)

    @property
    def is_one(self) -> bool:
        return self.rep == poly.one(self.ring.depth)

    def monomials(self):
        """Sorted list of (exponent_tuple, int) pairs, exponents following
        the signature order, highest first."""
        ms = list(poly.monomials(self.rep, self.ring.depth))
        ms.sort(key=lambda m: m[0], reverse=True)
        return ms

    def degree(self, var: str | None = None) -> int:
        """Degree in var, or total degree when var is None; zero has
        degree -1 and integer elements degree 0."""
        ms = self.monomials()
        if not ms:
            return -1
        if var is None:
            return max(sum(e) for e, _ in ms)
        if var not in self.ring.variables:
            raise DomainError(f"{self.ring} has no variable {var!r}")
        i = self.ring.variables.index(var)
        return max(e[i] for e, _ in ms)

    def _coerce(self, other):
        if isinstance(other, RingElement):
            return other
        if isinstance(other, int):
            return self.ring.from_int(other)
        return None

    def _binary(self, other, op):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        r = _common_ring(self, o)
        return RingElement(r, op(self.rep, o.rep, r.depth))

    def __add__(self, other):
        return self._binary(other, poly.add)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, poly.sub)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        return self._binary(other, poly.mul)

    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(self.ring, poly.neg(self.rep, self.ring.depth))

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise UsageError("negative exponents are not supported")
        return RingElement(self.ring, poly.pow_(self.rep, k, self.ring.depth))

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.ring == o.ring and self.rep == o.rep

    def __bool__(self):
        return not self.is_zero

    def __int__(self):
        if self.ring.depth != 0:
            raise DomainError(f"{self} is not an integer element")
        return self.rep

    def __str__(self):
        return textform.format_rep(self.rep, self.ring.variables)

    def __repr__(self):
        return f"<{self.ring} {self}>"


@dataclass(frozen=True)
class UnitAndCanonical:
    """normalize() output: input == unit * canonical, unit is 1 or -1."""

    canonical: RingElement
    unit: RingElement


def _common_ring(a: RingElement, b: RingElement) -> Ring:
    if a.ring != b.ring:
        raise DomainError(f"ring mismatch: {a.ring} vs {b.ring}")
    return a.ring


def _require_nonzero(op: str, *elems: RingElement) -> None:
    for e in elems:
        if e.is_zero:
            raise DomainError(f"zero element passed to {op}")


def gcd(a: RingElement, b: RingElement) -> RingElement:
    """Canonical greatest common divisor of two nonzero elements."""
    r = _common_ring(a, b)
    _require_nonzero("gcd", a, b)
    return r.element(poly.gcd(a.rep, b.rep, r.depth))


def lcm(a: RingElement, b: RingElement) -> RingElement:
    """Canonical least common multiple: a*b divided by gcd(a, b)."""
    g = gcd(a, b)
    return normalize(exact_div(a * b, g)).canonical


def gcd_many(elems: Sequence[RingElement]) -> RingElement:
    if not elems:
        raise UsageError("gcd_many needs at least one element")
    if len(elems) == 1:
        _require_nonzero("gcd_many", elems[0])
        return normalize(elems[0]).canonical
    return functools.reduce(gcd, elems)


def lcm_many(elems: Sequence[RingElement]) -> RingElement:
    """Least common multiple of a list.

    Polynomial rings fold through gcd-lattice distributivity,
    gcd(x, lcm(S)) == lcm of gcd(x, s) for s in S, which keeps every
    intermediate gcd between same-scale operands instead of pitting the
    accumulated lcm against one small term.
    """
    if not elems:
        raise UsageError("lcm_many needs at least one element")
    if len(elems) == 1:
        _require_nonzero("lcm_many", elems[0])
        return normalize(elems[0]).canonical
    r = _common_ring(elems[0], elems[1])
    if r.depth == 0:
        return functools.reduce(lcm, elems)
    acc = normalize(elems[0]).canonical
    _require_nonzero("lcm_many", acc)
    seen = [elems[0]]
    for x in elems[1:]:
        g = None
        for s in seen:
            pg = gcd(x, s)
            g = pg if g is None else lcm(g, pg)
        acc = normalize(acc * exact_div(x, g)).canonical
        seen.append(x)
    return acc


def exact_div(a: RingElement, b: RingElement) -> RingElement:
    """The quotient q with b*q == a, exactly; raises InexactDivision with
    the partial quotient and nonzero remainder otherwise."""
    r = _common_ring(a, b)
    _require_nonzero("exact division", a, b)
    q, rem = poly.div(a.rep, b.rep, r.depth)
    if not poly.is_zero(rem, r.depth):
        raise InexactDivision(a, b, r.element(q), r.element(rem))
    return r.element(q)


def normalize(a: RingElement) -> UnitAndCanonical:
    """Split a nonzero element into unit * canonical associate."""
    _require_nonzero("normalize", a)
    unit, rep = poly.canonical(a.rep, a.ring.depth)
    return UnitAndCanonical(a.ring.element(rep), a.ring.from_int(unit))


def is_associate(a: RingElement, b: RingElement) -> bool:
    """True when a and b differ only by a unit factor."""
    _common_ring(a, b)
    _require_nonzero("is_associate", a, b)
    return normalize(a).canonical == normalize(b).canonical


def evaluate(p: RingElement, assignment: Mapping[str, RingElement]) -> RingElement:
    """Substitute every variable of p's ring and collapse fully.

    Assignment values must all live in one target ring (which may be a
    polynomial ring, so partial substitution is the special case of
    mapping a variable to itself).  Plain ints are accepted and coerced
    to the target ring; an all-int assignment targets INT.
    """
    ring = p.ring
    if ring.depth == 0:
        raise DomainError("evaluate needs a polynomial element")
    for v in ring.variables:
        if v not in assignment:
            raise DomainError(f"missing variable {v!r} in assignment")
    values = [assignment[v] for v in ring.variables]
    target = INT
    for val in values:
        if isinstance(val, RingElement):
            target = val.ring
            break
    values = [
        target.from_int(v) if isinstance(v, int) and not isinstance(v, bool) else v
        for v in values
    ]
    for val in values:
        if not isinstance(val, RingElement):
            raise DomainError(f"assignment value {val!r} is not a ring element")
        if val.ring != target:
            raise DomainError(
                f"assignment mixes rings: {val.ring} vs {target}"
            )

    def go(rep, depth):
        if depth == 0:
            return target.from_int(rep)
        x = values[depth - 1]
        acc = None
        prev = None
        for e in sorted(rep, reverse=True):
            c = go(rep[e], depth - 1)
            acc = c if acc is None else acc * x ** (prev - e) + c
            prev = e
        if acc is None:
            return target.zero()
        if prev:
            acc = acc * x ** prev
        return acc

    return go(p.rep, ring.depth)
