"""Sparse recursive polynomial arithmetic over arbitrary-precision integers.

A value in Z[v1, ..., vk] is represented by nesting depth k: at depth 0 a
plain int, and at depth d >= 1 a dict mapping exponents of variable vd to
nonzero representations of depth d - 1.  The last variable of the ring
signature is the outermost one; {} is the zero polynomial at every
positive depth.  Representations are treated as immutable once built and
may be shared, so every function returns fresh structure instead of
mutating its arguments.

Exponent tuples produced by monomials() and consumed by from_monomials()
follow the signature order (v1, ..., vk).
"""

from __future__ import annotations

import math


def zero(depth):
    return 0 if depth == 0 else {}


def one(depth):
    return 1 if depth == 0 else {0: one(depth - 1)}


def is_zero(rep, depth):
    return rep == 0 if depth == 0 else not rep


def from_int(n, depth):
    if depth == 0:
        return n
    if n == 0:
        return {}
    return {0: from_int(n, depth - 1)}


def var_power(index, exp, depth):
    """The monomial v_index ** exp (0-based index into the signature)."""
    if exp == 0:
        return one(depth)
    if index == depth - 1:
        return {exp: one(depth - 1)}
    return {0: var_power(index, exp, depth - 1)}


def degree(rep, depth):
    """Degree in the outermost variable; -1 for the zero polynomial."""
    return max(rep) if rep else -1


def leading(rep, depth):
    """Coefficient of the highest power of the outermost variable."""
    return rep[max(rep)]


def lead_int(rep, depth):
    """The innermost leading integer, following leading coefficients down;
    0 for the zero polynomial."""
    while depth:
        if not rep:
            return 0
        rep = rep[max(rep)]
        depth -= 1
    return rep


def canonical(rep, depth):
    """Return (unit, c) with unit in {1, -1}, unit * c == rep, and the
    innermost leading integer of c positive.  Zero maps to (1, zero)."""
    if lead_int(rep, depth) < 0:
        return -1, neg(rep, depth)
    return 1, rep


def add(a, b, depth):
    if depth == 0:
        return a + b
    out = dict(a)
    for e, c in b.items():
        if e in out:
            s = add(out[e], c, depth - 1)
            if is_zero(s, depth - 1):
                del out[e]
            else:
                out[e] = s
        else:
            out[e] = c
    return out


def neg(a, depth):
    if depth == 0:
        return -a
    return {e: neg(c, depth - 1) for e, c in a.items()}


def sub(a, b, depth):
    return add(a, neg(b, depth), depth)


def mul(a, b, depth):
    if depth == 0:
        return a * b
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            p = mul(ca, cb, depth - 1)
            if e in out:
                s = add(out[e], p, depth - 1)
                if is_zero(s, depth - 1):
                    del out[e]
                else:
                    out[e] = s
            else:
                # stored coefficients are nonzero, so p is nonzero too
                out[e] = p
    return out


def scale(a, k, depth):
    """Multiply by a nonzero element k of the coefficient ring (depth-1)."""
    if depth == 0:
        return a * k
    return {e: mul(c, k, depth - 1) for e, c in a.items()}


def shift(a, n):
    """Multiply by the outermost variable to the power n (n >= 0)."""
    if n == 0:
        return a
    return {e + n: c for e, c in a.items()}


def pow_(a, k, depth):
    if k < 0:
        raise ValueError("negative exponent")
    result = one(depth)
    base = a
    while k:
        if k & 1:
            result = mul(result, base, depth)
        k >>= 1
        if k:
            base = mul(base, base, depth)
    return result


def div(a, b, depth):
    """Long division in the outermost variable with exact coefficient
    divisions: returns (q, r) with a == b*q + r.  When b divides a the
    remainder is zero; otherwise division stops at the first exponent
    whose leading coefficient is not exactly divisible, so r may still
    have degree >= deg b."""
    if depth == 0:
        return divmod(a, b)
    db = degree(b, depth)
    lb = leading(b, depth)
    q = {}
    r = a
    while r:
        dr = max(r)
        if dr < db:
            break
        qc, rc = div(r[dr], lb, depth - 1)
        if not is_zero(rc, depth - 1):
            break
        q[dr - db] = qc
        r = sub(r, shift(scale(b, qc, depth), dr - db), depth)
    return q, r


def _exact(a, b, depth):
    q, r = div(a, b, depth)
    if not is_zero(r, depth):
        raise ArithmeticError("internal division was not exact")
    return q


def exact_div_coeffs(a, k, depth):
    """Divide every coefficient by the coefficient-ring element k; the
    divisions must come out exact."""
    if depth == 0:
        return _exact(a, k, 0)
    return {e: _exact(c, k, depth - 1) for e, c in a.items()}


def prem(a, b, depth):
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a reduced mod b."""
    db = degree(b, depth)
    lb = leading(b, depth)
    r = a
    n = degree(a, depth) - db + 1
    while r and max(r) >= db:
        dr = max(r)
        lr = r[dr]
        r = sub(scale(r, lb, depth), shift(scale(b, lr, depth), dr - db), depth)
        n -= 1
    if n > 0 and not is_zero(r, depth):
        r = scale(r, pow_(lb, n, depth - 1), depth)
    return r


def content(a, depth):
    """Gcd of the coefficients, in canonical (positive-lead) form."""
    g = None
    unit = one(depth - 1)
    for c in a.values():
        g = c if g is None else gcd(g, c, depth - 1)
        if g == unit:
            break
    return canonical(g, depth - 1)[1]


def primitive(a, depth):
    """Split off the content: (content, primitive part).  The primitive
    part keeps the sign of a."""
    c = content(a, depth)
    if c == one(depth - 1):
        return c, a
    return c, exact_div_coeffs(a, c, depth)


def gcd(a, b, depth):
    """Greatest common divisor in canonical-associate form.

    Content extraction plus a primitive remainder sequence whose
    pseudo-remainders are reduced by the subresultant divisors, recursing
    through the coefficient ring; depth 0 is plain integer gcd.
    """
    if depth == 0:
        return math.gcd(a, b)
    if is_zero(a, depth):
        return canonical(b, depth)[1]
    if is_zero(b, depth):
        return canonical(a, depth)[1]
    if a == b:
        return canonical(a, depth)[1]
    ca, pa = primitive(a, depth)
    cb, pb = primitive(b, depth)
    cg = gcd(ca, cb, depth - 1)
    if degree(pa, depth) < degree(pb, depth):
        pa, pb = pb, pa
    if degree(pb, depth) == 0:
        pp = one(depth)  # a nonzero constant primitive part is a unit
    else:
        g = h = one(depth - 1)
        big, small = pa, pb
        while True:
            delta = degree(big, depth) - degree(small, depth)
            r = prem(big, small, depth)
            if is_zero(r, depth):
                pp = primitive(small, depth)[1]
                break
            if degree(r, depth) == 0:
                pp = one(depth)
                break
            big, small = small, exact_div_coeffs(
                r, mul(g, pow_(h, delta, depth - 1), depth - 1), depth
            )
            g = leading(big, depth)
            if delta == 1:
                h = g
            elif delta > 1:
                h = _exact(pow_(g, delta, depth - 1),
                           pow_(h, delta - 1, depth - 1), depth - 1)
    return canonical(scale(pp, cg, depth), depth)[1]


def monomials(rep, depth):
    """Yield (exponent_tuple, int_coefficient) pairs in signature order;
    the tuple lists v1 first even though vk is the outermost variable."""
    if depth == 0:
        if rep:
            yield (), rep
        return
    for e, c in rep.items():
        for exps, k in monomials(c, depth - 1):
            yield exps + (e,), k


def from_monomials(pairs, depth):
    """Rebuild a representation from (exponent_tuple, coefficient) pairs;
    duplicate exponent tuples are summed, zero sums dropped."""
    if depth == 0:
        return sum(k for _, k in pairs)
    groups = {}
    for exps, k in pairs:
        groups.setdefault(exps[-1], []).append((exps[:-1], k))
    out = {}
    for e, sub_pairs in groups.items():
        c = from_monomials(sub_pairs, depth - 1)
        if not is_zero(c, depth - 1):
            out[e] = c
    return out
