"""Built-in sequence families and derived cyclotomic objects.

Each entry declares whether its sequence is strongly divisible; that
flag is a tested claim, not documentation.  The cyclotomic polynomial
arrives as an lcm-sequence quotient of x^n - 1, and psi(n) is its
two-variable homogenization, obtained by exact Mobius division of
products of x^d - y^d.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Mapping

from .errors import UsageError
from .numtheory import divisors, mobius
from .ring import INT, Ring, RingElement, exact_div
from .sequences import SequenceSpec, lcm_sequence

_X = Ring(("x",))
_XY = Ring(("x", "y"))
_XYZ = Ring(("x", "y", "z"))


@dataclass(frozen=True)
class Param:
    name: str
    doc: str
    check: Callable[[Mapping[str, int]], str | None]


@dataclass(frozen=True)
class CatalogEntry:
    """A named family: parameter schema, ring builder, generator builder,
    the strong-divisibility flag the acceptance suite asserts, and a one
    line note."""

    name: str
    doc: str
    params: tuple[Param, ...]
    ring: Callable[[Mapping[str, int]], Ring]
    build: Callable[[Mapping[str, int]], Callable[[int], list[RingElement]]]
    strongly_divisible: bool
    note: str = ""


def _int_terms(f):
    def build(params):
        def generate(n):
            return [INT.from_int(f(k, params)) for k in range(1, n + 1)]

        return generate

    return build


def _geq(name, bound):
    def check(params):
        if params[name] < bound:
            return f"{name} must be >= {bound}"
        return None

    return check


def _nonzero(name):
    def check(params):
        if params[name] == 0:
            return f"{name} must be nonzero"
        return None

    return check


def _uv_check(params):
    u, v = params["u"], params["v"]
    if not u > v >= 1:
        return "need u > v >= 1"
    if math.gcd(u, v) != 1:
        return f"u and v must be coprime, gcd({u}, {v}) = {math.gcd(u, v)}"
    return None


def _fibonacci(k, params):
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def _poly_recurrence(ring, seeds, step):
    """Generator for P_1, P_2, ... given the first terms and
    step(n, terms) -> P_n for n past the seeds (n is 1-based)."""

    def build(params):
        def generate(n):
            terms = [ring.parse(s) for s in seeds]
            while len(terms) < n:
                terms.append(step(len(terms) + 1, terms))
            return terms[:n]

        return generate

    return build


_fib_poly = _poly_recurrence(
    _X, ["1", "x"], lambda n, t: _X.variable("x") * t[-1] + t[-2]
)


def _chebyshev_build(params):
    # a_n = U_(n-1): U_0 = 1, U_1 = 2x, U_(k+1) = 2x U_k - U_(k-1)
    def generate(n):
        x2 = 2 * _X.variable("x")
        terms = [_X.one(), x2]
        while len(terms) < n:
            terms.append(x2 * terms[-1] - terms[-2])
        return terms[:n]

    return generate


def _s3_build(params):
    # S_1 = 1, S_2 = x; S_n = x S_(n-1) + y S_(n-2) for even n,
    # S_n = z S_(n-1) + y S_(n-2) for odd n.
    def generate(n):
        x, y, z = (_XYZ.variable(v) for v in "xyz")
        terms = [_XYZ.one(), x]
        while len(terms) < n:
            k = len(terms) + 1
            lead = x if k % 2 == 0 else z
            terms.append(lead * terms[-1] + y * terms[-2])
        return terms[:n]

    return generate


def _xn_minus_1_build(params):
    def generate(n):
        x = _X.variable("x")
        return [x ** k - 1 for k in range(1, n + 1)]

    return generate


def _xn_minus_yn_build(params):
    def generate(n):
        x, y = _XY.variable("x"), _XY.variable("y")
        return [x ** k - y ** k for k in range(1, n + 1)]

    return generate


CATALOG: dict[str, CatalogEntry] = {}


def _register(entry: CatalogEntry) -> None:
    CATALOG[entry.name] = entry


_register(
    CatalogEntry(
        name="xn_minus_1",
        doc="a_n = x^n - 1 over POLY(x)",
        params=(),
        ring=lambda p: _X,
        build=_xn_minus_1_build,
        strongly_divisible=True,
        note="its lcm-sequence is the cyclotomic polynomials",
    )
)
_register(
    CatalogEntry(
        name="bn_minus_1",
        doc="a_n = b^n - 1 for a fixed integer base b >= 2",
        params=(Param("b", "integer base, b >= 2", _geq("b", 2)),),
        ring=lambda p: INT,
        build=_int_terms(lambda k, p: p["b"] ** k - 1),
        strongly_divisible=True,
        note="integer specialization of xn_minus_1",
    )
)
_register(
    CatalogEntry(
        name="xn_minus_yn",
        doc="a_n = x^n - y^n over POLY(x,y)",
        params=(),
        ring=lambda p: _XY,
        build=_xn_minus_yn_build,
        strongly_divisible=True,
        note="its lcm-sequence is the homogenized cyclotomics",
    )
)
_register(
    CatalogEntry(
        name="un_vn",
        doc="a_n = u^n - v^n for coprime integers u > v >= 1",
        params=(
            Param("u", "larger base", lambda p: None),
            Param("v", "smaller base", _uv_check),
        ),
        ring=lambda p: INT,
        build=_int_terms(lambda k, p: p["u"] ** k - p["v"] ** k),
        strongly_divisible=True,
        note="integer specialization of xn_minus_yn",
    )
)
_register(
    CatalogEntry(
        name="repunit",
        doc="a_n = (10^n - 1) / 9, the base-10 repunits 1, 11, 111, ...",
        params=(),
        ring=lambda p: INT,
        build=_int_terms(lambda k, p: (10 ** k - 1) // 9),
        strongly_divisible=True,
    )
)
_register(
    CatalogEntry(
        name="fibonacci",
        doc="a_n = F_n, the Fibonacci numbers 1, 1, 2, 3, 5, ...",
        params=(),
        ring=lambda p: INT,
        build=_int_terms(_fibonacci),
        strongly_divisible=True,
    )
)
_register(
    CatalogEntry(
        name="fibonacci_poly",
        doc="Fibonacci polynomials: F_1 = 1, F_2 = x, F_n = x F_(n-1) + F_(n-2)",
        params=(),
        ring=lambda p: _X,
        build=_fib_poly,
        strongly_divisible=True,
    )
)
_register(
    CatalogEntry(
        name="chebyshev_u",
        doc="a_n = U_(n-1), Chebyshev polynomials of the second kind",
        params=(),
        ring=lambda p: _X,
        build=_chebyshev_build,
        strongly_divisible=True,
    )
)
_register(
    CatalogEntry(
        name="s3_poly",
        doc="three-variable recurrence S_1 = 1, S_2 = x, alternating "
        "S_n = x S_(n-1) + y S_(n-2) (n even) / z S_(n-1) + y S_(n-2) (n odd)",
        params=(),
        ring=lambda p: _XYZ,
        build=_s3_build,
        strongly_divisible=True,
    )
)
_register(
    CatalogEntry(
        name="triangular",
        doc="a_n = n (n + 1) / 2, the triangular numbers",
        params=(),
        ring=lambda p: INT,
        build=_int_terms(lambda k, p: k * (k + 1) // 2),
        strongly_divisible=False,
        note="divisible (m | n implies a_m | a_n) but gcd(a_2, a_3) = 3 != a_1",
    )
)
_register(
    CatalogEntry(
        name="factorial",
        doc="a_n = n!",
        params=(),
        ring=lambda p: INT,
        build=_int_terms(lambda k, p: math.factorial(k)),
        strongly_divisible=False,
        note="gcd(a_2, a_3) = 2 != a_1; its lcm-sequence is still c_n = n",
    )
)
_register(
    CatalogEntry(
        name="geometric",
        doc="a_n = q^n for a fixed nonzero integer ratio q",
        params=(Param("q", "nonzero integer ratio", _nonzero("q")),),
        ring=lambda p: INT,
        build=_int_terms(lambda k, p: p["q"] ** k),
        strongly_divisible=False,
        note="fails for |q| > 1 (gcd(a_2, a_3) ~ q^2, not ~ q); the unit "
        "cases q = 1 and q = -1 hold trivially; lcm-sequence c_n = |q|",
    )
)
_register(
    CatalogEntry(
        name="constant",
        doc="a_n = a for a fixed nonzero integer a",
        params=(Param("a", "nonzero integer value", _nonzero("a")),),
        ring=lambda p: INT,
        build=_int_terms(lambda k, p: p["a"]),
        strongly_divisible=True,
        note="gcd(a_m, a_n) = |a| = a_gcd(m,n) always",
    )
)
_register(
    CatalogEntry(
        name="natural",
        doc="a_n = n",
        params=(),
        ring=lambda p: INT,
        build=_int_terms(lambda k, p: k),
        strongly_divisible=True,
        note="c_n = p when n = p^s is a prime power, else 1",
    )
)
_register(
    CatalogEntry(
        name="mersenne",
        doc="a_n = 2^n - 1, the Mersenne numbers",
        params=(),
        ring=lambda p: INT,
        build=_int_terms(lambda k, p: 2 ** k - 1),
        strongly_divisible=True,
        note="bn_minus_1 with b = 2",
    )
)


def catalog_names() -> list[str]:
    return sorted(CATALOG)


def builtin(name: str, params: Mapping[str, int] | None = None) -> SequenceSpec:
    """Look up a catalog entry and bind its parameters."""
    if name not in CATALOG:
        known = ", ".join(catalog_names())
        raise UsageError(f"unknown sequence {name!r}; known sequences: {known}")
    entry = CATALOG[name]
    given = dict(params or {})
    wanted = {p.name for p in entry.params}
    extra = sorted(set(given) - wanted)
    if extra:
        raise UsageError(
            f"{name} does not take parameter(s) {', '.join(extra)}"
            + (f"; it takes {', '.join(sorted(wanted))}" if wanted else "")
        )
    missing = sorted(wanted - set(given))
    if missing:
        raise UsageError(f"{name} requires parameter(s) {', '.join(missing)}")
    for p in entry.params:
        if not isinstance(given[p.name], int) or isinstance(given[p.name], bool):
            raise UsageError(f"parameter {p.name} must be an integer")
        problem = p.check(given)
        if problem:
            raise UsageError(f"{name}: {problem}")
    bound = tuple(sorted(given.items()))
    return SequenceSpec(entry.ring(given), name, bound, entry.build(given))


@lru_cache(maxsize=None)
def cyclotomic_phi(n: int) -> RingElement:
    """The n-th cyclotomic polynomial, as the n-th lcm-sequence term of
    x^n - 1."""
    if not isinstance(n, int) or n < 1:
        raise UsageError(f"index must be a positive integer, got {n!r}")
    return lcm_sequence(builtin("xn_minus_1"), n).c[n - 1]


def cyclotomic_phi_at(n: int, b: int) -> int:
    """Phi_n(b) for an integer b >= 2, computed the same way inside the
    integers: the n-th lcm-sequence term of b^n - 1, never by evaluating
    a polynomial."""
    if not isinstance(n, int) or n < 1:
        raise UsageError(f"index must be a positive integer, got {n!r}")
    if not isinstance(b, int) or b < 2:
        raise UsageError(f"base must be an integer >= 2, got {b!r}")
    return int(lcm_sequence(builtin("bn_minus_1", {"b": b}), n).c[n - 1])


@lru_cache(maxsize=None)
def psi(n: int) -> RingElement:
    """The homogenized cyclotomic polynomial in x and y: the exact Mobius
    quotient of products of x^d - y^d over d | n.  psi(1) = x - y, and
    the product of psi(d) over d | n rebuilds x^n - y^n exactly, so the
    result is returned as computed, not canonicalized."""
    if not isinstance(n, int) or n < 1:
        raise UsageError(f"index must be a positive integer, got {n!r}")
    x, y = _XY.variable("x"), _XY.variable("y")
    num = None
    den = None
    for d in divisors(n):
        mu = mobius(n // d)
        if mu == 0:
            continue
        t = x ** d - y ** d
        if mu == 1:
            num = t if num is None else num * t
        else:
            den = t if den is None else den * t
    if den is None:
        return num
    return exact_div(num, den)
