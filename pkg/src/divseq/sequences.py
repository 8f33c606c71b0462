"""Running-lcm sequences and the checks built on them.

For a sequence a_1, a_2, ... of nonzero elements of a gcd domain, the
running lcms are e_1 = 1, e_(n+1) = lcm(e_n, a_n), and the lcm-sequence
is the exact quotient c_n = e_(n+1) / e_n.  A sequence is strongly
divisible when gcd(a_m, a_n) is an associate of a_(gcd(m, n)) for all
index pairs, and that holds exactly when each a_n equals the product of
c_d over the divisors d of n; verify_equivalence checks both sides and
treats any disagreement as a bug.

Everything here works on canonical associates, so multiplying any input
term by a unit changes no reported c_n.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Sequence

from .errors import DomainError, InexactDivision, InternalError, UsageError
from .numtheory import divisors, factorize, mobius
from .ring import (
    INT,
    Ring,
    RingElement,
    exact_div,
    gcd,
    is_associate,
    lcm,
    lcm_many,
    normalize,
)


@dataclass(frozen=True)
class SequenceSpec:
    """A sequence source: a ring, a display label, the parameters it was
    built with, and a generator producing raw terms a_1..a_N.  Use
    materialize() rather than calling the generator directly; it
    validates and canonicalizes."""

    ring: Ring
    label: str
    params: tuple[tuple[str, int], ...]
    generator: Callable[[int], Sequence[RingElement]] = field(repr=False)

    def describe(self) -> str:
        if not self.params:
            return self.label
        inner = ", ".join(f"{k}={v}" for k, v in self.params)
        return f"{self.label}({inner})"


@dataclass(frozen=True)
class Witness:
    """A checkable counterexample: the indices involved, what was
    computed, and what the property required, as canonical text."""

    indices: tuple[int, ...]
    found: str
    expected: str
    note: str = ""


@dataclass(frozen=True)
class VerificationReport:
    name: str
    checked_terms: int
    holds: bool
    witness: Witness | None = None


@dataclass(frozen=True)
class LcmSequenceResult:
    """Canonical terms a_1..a_N, running lcms e_1..e_(N+1), and the
    lcm-sequence c_1..c_N."""

    a: tuple[RingElement, ...]
    e: tuple[RingElement, ...]
    c: tuple[RingElement, ...]

    @property
    def n(self) -> int:
        return len(self.a)


@dataclass(frozen=True)
class InversionResult:
    """Mobius inversion output; b holds None where the division was
    inexact, and first_inexact is the smallest such index."""

    b: tuple[RingElement | None, ...]
    exact: tuple[bool, ...]
    first_inexact: int | None


@dataclass(frozen=True)
class EquivalenceReport:
    """Paired verdicts for the two equivalent characterizations."""

    gcd_condition: VerificationReport
    product_condition: VerificationReport

    @property
    def holds(self) -> bool:
        return self.gcd_condition.holds


def explicit_spec(terms: Sequence[RingElement], label: str = "explicit") -> SequenceSpec:
    """Wrap a fixed term list as a SequenceSpec."""
    fixed = list(terms)
    if not fixed:
        raise UsageError("an explicit sequence needs at least one term")
    ring = fixed[0].ring

    def generate(n):
        if n > len(fixed):
            raise UsageError(
                f"explicit sequence provides {len(fixed)} terms, {n} requested"
            )
        return fixed[:n]

    return SequenceSpec(ring, label, (), generate)


_RING_DIRECTIVE = re.compile(r"ring\s*:\s*(.*)", re.IGNORECASE)
_INT_LINE = re.compile(r"[+-]?\d+\Z")
_NAME_SCAN = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def read_terms_file(path) -> SequenceSpec:
    """Load an explicit sequence from a text file.

    One term per line in canonical text syntax, line k giving a_k; blank
    lines and '#' comments are ignored.  A comment of the form
    '# ring: x y' (or '# ring: INT') pins the ring; otherwise a file of
    bare integers is INT and any variable names seen, sorted, define a
    polynomial ring.
    """
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {p}: {exc}") from exc
    ring = None
    lines: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if not s:
            continue
        if s.startswith("#"):
            m = _RING_DIRECTIVE.match(s[1:].strip())
            if m:
                names = m.group(1).replace(",", " ").split()
                if names in ([], ["INT"]):
                    ring = INT
                else:
                    ring = Ring(tuple(names))
            continue
        lines.append((lineno, s))
    if not lines:
        raise UsageError(f"no terms found in {p}")
    if ring is None:
        if all(_INT_LINE.match(s) for _, s in lines):
            ring = INT
        else:
            seen = sorted({m.group() for _, s in lines for m in _NAME_SCAN.finditer(s)})
            ring = Ring(tuple(seen))
    terms = []
    for lineno, s in lines:
        try:
            terms.append(ring.parse(s))
        except UsageError as exc:
            raise UsageError(f"{p}, line {lineno}: {exc}") from exc
    return explicit_spec(terms, label=f"file:{p.name}")


def materialize(spec: SequenceSpec, n_terms: int) -> list[RingElement]:
    """The canonical prefix a_1..a_N; rejects zero terms."""
    if not isinstance(n_terms, int) or n_terms < 1:
        raise UsageError(f"term count must be a positive integer, got {n_terms!r}")
    raw = list(spec.generator(n_terms))
    if len(raw) != n_terms:
        raise InternalError(
            f"generator for {spec.describe()} returned {len(raw)} terms, "
            f"expected {n_terms}"
        )
    out = []
    for i, t in enumerate(raw, 1):
        if not isinstance(t, RingElement) or t.ring != spec.ring:
            raise InternalError(
                f"generator for {spec.describe()} produced a foreign value "
                f"at index {i}"
            )
        if t.is_zero:
            raise DomainError(f"term a_{i} of {spec.describe()} is zero")
        out.append(normalize(t).canonical)
    return out


def lcm_sequence_of_terms(terms: Sequence[RingElement]) -> LcmSequenceResult:
    """Running lcms and their quotients for explicit terms.

    Terms may carry unit factors; results are canonical either way.  For
    polynomial rings the new gcd(e_n, a_n) is assembled distributively
    from the pairwise gcd(a_n, a_i), which keeps pseudo-division away
    from the large accumulated lcm; the direct recursion would be
    e_(n+1) = lcm(e_n, a_n) and the results agree.
    """
    terms = list(terms)
    if not terms:
        raise UsageError("at least one term required")
    ring = terms[0].ring
    for i, t in enumerate(terms, 1):
        if not isinstance(t, RingElement):
            raise DomainError(f"term a_{i} is not a ring element")
        if t.ring != ring:
            raise DomainError(f"ring mismatch at term a_{i}: {t.ring} vs {ring}")
        if t.is_zero:
            raise DomainError(f"term a_{i} is zero")
    e = [ring.one()]
    c = []
    if ring.depth == 0:
        for t in terms:
            nxt = lcm(e[-1], t)
            c.append(exact_div(nxt, e[-1]))
            e.append(nxt)
    else:
        seen: list[RingElement] = []
        for t in terms:
            g = None
            for s in seen:
                pg = gcd(t, s)
                g = pg if g is None else lcm(g, pg)
            cof = normalize(exact_div(t, g) if g is not None else t).canonical
            e.append(normalize(e[-1] * cof).canonical)
            c.append(cof)
            seen.append(t)
    a_canon = tuple(normalize(t).canonical for t in terms)
    return LcmSequenceResult(a_canon, tuple(e), tuple(c))


def lcm_sequence(spec: SequenceSpec, n_terms: int) -> LcmSequenceResult:
    return lcm_sequence_of_terms(materialize(spec, n_terms))


def mobius_invert(spec: SequenceSpec, n_terms: int) -> InversionResult:
    """Recover b with a_n = product of b_d over d | n, term by term.

    b_n is the quotient of the two Mobius half-products of a; an inexact
    division is recorded (the sequence is not a divisor product of
    anything) and the remaining indices are still computed.
    """
    a = materialize(spec, n_terms)
    ring = spec.ring
    b: list[RingElement | None] = []
    exact: list[bool] = []
    first_inexact = None
    for n in range(1, n_terms + 1):
        num = None
        den = None
        for d in divisors(n):
            mu = mobius(n // d)
            if mu == 1:
                num = a[d - 1] if num is None else num * a[d - 1]
            elif mu == -1:
                den = a[d - 1] if den is None else den * a[d - 1]
        if den is None:
            den = ring.one()
        try:
            q = exact_div(num, den)
        except InexactDivision:
            b.append(None)
            exact.append(False)
            if first_inexact is None:
                first_inexact = n
        else:
            b.append(q)
            exact.append(True)
    return InversionResult(tuple(b), tuple(exact), first_inexact)


def divisor_product(b: Sequence[RingElement], n: int) -> RingElement:
    """Product of b_d over the divisors d of n (b is 1-indexed as a list)."""
    if not isinstance(n, int) or n < 1:
        raise UsageError(f"index must be a positive integer, got {n!r}")
    if n > len(b):
        raise UsageError(f"divisor product at {n} needs {n} terms, have {len(b)}")
    acc = None
    for d in divisors(n):
        t = b[d - 1]
        if not isinstance(t, RingElement):
            raise DomainError(f"term b_{d} is missing")
        acc = t if acc is None else acc * t
    return acc


def _strong_divisibility_of_terms(a: Sequence[RingElement]) -> VerificationReport:
    n_terms = len(a)
    for m in range(1, n_terms + 1):
        for n in range(m, n_terms + 1):
            g = gcd(a[m - 1], a[n - 1])
            want = a[math.gcd(m, n) - 1]
            if g != want:
                w = Witness(
                    indices=(m, n),
                    found=str(g),
                    expected=str(want),
                    note=f"gcd(a_{m}, a_{n}) is not an associate of a_{math.gcd(m, n)}",
                )
                return VerificationReport("strong_divisibility", n_terms, False, w)
    return VerificationReport("strong_divisibility", n_terms, True, None)


def check_strong_divisibility(spec: SequenceSpec, n_terms: int = 40) -> VerificationReport:
    """Scan all pairs m <= n for gcd(a_m, a_n) ~ a_gcd(m,n); the witness
    is always the lexicographically smallest violating pair."""
    return _strong_divisibility_of_terms(materialize(spec, n_terms))


def check_special_coprime_criterion(
    b: Sequence[RingElement], n_terms: int | None = None
) -> VerificationReport:
    """For a divisor-product decomposition b, strong divisibility of the
    composed sequence is equivalent to gcd(b_m, b_n) being a unit for all
    index pairs where neither index divides the other; this checks that
    criterion directly on b."""
    terms = list(b)
    if n_terms is None:
        n_terms = len(terms)
    if n_terms > len(terms):
        raise UsageError(f"asked to check {n_terms} terms, have {len(terms)}")
    ring = None
    for i, t in enumerate(terms[:n_terms], 1):
        if not isinstance(t, RingElement):
            raise DomainError(f"term b_{i} is missing")
        if t.is_zero:
            raise DomainError(f"term b_{i} is zero")
        ring = t.ring if ring is None else ring
    one = ring.one()
    for m in range(1, n_terms + 1):
        # m < n already rules out n | m
        for n in range(m + 1, n_terms + 1):
            if n % m == 0:
                continue
            g = gcd(terms[m - 1], terms[n - 1])
            if g != one:
                w = Witness(
                    indices=(m, n),
                    found=str(g),
                    expected="1",
                    note=f"gcd(b_{m}, b_{n}) is not a unit",
                )
                return VerificationReport("coprime_criterion", n_terms, False, w)
    return VerificationReport("coprime_criterion", n_terms, True, None)


def verify_equivalence(spec: SequenceSpec, n_terms: int = 40) -> EquivalenceReport:
    """Check strong divisibility and the divisor-product identity
    a_n ~ product of c_d over d | n side by side.  The two verdicts must
    agree; a split is an InternalError because the equivalence is a
    theorem, not an expectation."""
    seq = lcm_sequence(spec, n_terms)
    cond_gcd = _strong_divisibility_of_terms(seq.a)
    cond_prod = VerificationReport("divisor_product", n_terms, True, None)
    for n in range(1, n_terms + 1):
        prod = divisor_product(seq.c, n)
        if not is_associate(prod, seq.a[n - 1]):
            w = Witness(
                indices=(n,),
                found=str(normalize(prod).canonical),
                expected=str(seq.a[n - 1]),
                note=f"product of c_d over d | {n} is not an associate of a_{n}",
            )
            cond_prod = VerificationReport("divisor_product", n_terms, False, w)
            break
    if cond_gcd.holds != cond_prod.holds:
        raise InternalError(
            f"equivalence violated for {spec.describe()} at {n_terms} terms: "
            f"strong divisibility {cond_gcd.holds}, divisor product {cond_prod.holds}"
        )
    return EquivalenceReport(cond_gcd, cond_prod)


def wnbei_quotient(spec: SequenceSpec, n: int) -> tuple[RingElement, RingElement]:
    """Two routes to c_n for a strong divisibility sequence: the quotient
    of consecutive running lcms, and a_n divided by the lcm of the terms
    at n/p over the prime divisors p of n.  Returns (left, right), both
    canonical.

    The caller is expected to have verified strong divisibility up to n;
    without it the right-hand division can fail, and the InexactDivision
    is propagated as the witness.
    """
    if not isinstance(n, int) or n < 2:
        raise UsageError(f"index must be an integer >= 2, got {n!r}")
    a = materialize(spec, n)
    left = exact_div(lcm_many(a), lcm_many(a[:-1]))
    right = exact_div(
        a[-1], lcm_many([a[n // p - 1] for p in factorize(n).primes])
    )
    return normalize(left).canonical, normalize(right).canonical
