import pytest

from divseq import (
    CATALOG,
    Ring,
    UsageError,
    builtin,
    catalog_names,
    cyclotomic_phi,
    cyclotomic_phi_at,
    divisors,
    euler_phi,
    evaluate,
    exact_div,
    is_associate,
    lcm_sequence,
    materialize,
    mobius,
    psi,
)

X = Ring(("x",))


def strs(spec, n):
    return [str(t) for t in materialize(spec, n)]


def test_fibonacci_poly_terms():
    assert strs(builtin("fibonacci_poly"), 4) == ["1", "x", "x^2+1", "x^3+2*x"]


def test_chebyshev_terms():
    assert strs(builtin("chebyshev_u"), 3) == ["1", "2*x", "4*x^2-1"]


def test_s3_terms():
    assert strs(builtin("s3_poly"), 4) == ["1", "x", "x*z+y", "x^2*z+2*x*y"]


def test_parametrized_entries():
    assert [int(t) for t in materialize(builtin("bn_minus_1", {"b": 3}), 3)] == [2, 8, 26]
    assert [int(t) for t in materialize(builtin("un_vn", {"u": 3, "v": 2}), 3)] == [1, 5, 19]
    # terms are canonical associates, so the sign of q^n is dropped
    assert [int(t) for t in materialize(builtin("geometric", {"q": -2}), 3)] == [2, 4, 8]
    assert [int(t) for t in materialize(builtin("mersenne"), 5)] == [1, 3, 7, 15, 31]


def test_builtin_validation():
    with pytest.raises(UsageError) as err:
        builtin("nope")
    assert "fibonacci" in str(err.value)  # lists known names
    with pytest.raises(UsageError):
        builtin("un_vn", {"u": 4, "v": 2})  # not coprime
    with pytest.raises(UsageError):
        builtin("un_vn", {"u": 2, "v": 3})  # u <= v
    with pytest.raises(UsageError):
        builtin("un_vn", {"u": 3})  # missing
    with pytest.raises(UsageError):
        builtin("bn_minus_1", {"b": 1})
    with pytest.raises(UsageError):
        builtin("geometric", {"q": 0})
    with pytest.raises(UsageError):
        builtin("constant", {"a": 0})
    with pytest.raises(UsageError):
        builtin("fibonacci", {"b": 2})  # takes no parameters
    with pytest.raises(UsageError):
        builtin("bn_minus_1", {"b": True})


def test_catalog_flags():
    flags = {name: CATALOG[name].strongly_divisible for name in catalog_names()}
    assert flags["triangular"] is False
    assert flags["factorial"] is False
    assert flags["geometric"] is False
    for name in (
        "xn_minus_1",
        "bn_minus_1",
        "xn_minus_yn",
        "un_vn",
        "repunit",
        "fibonacci",
        "fibonacci_poly",
        "chebyshev_u",
        "s3_poly",
        "constant",
        "natural",
        "mersenne",
    ):
        assert flags[name] is True
    assert catalog_names() == sorted(CATALOG)


def test_cyclotomic_goldens():
    assert str(cyclotomic_phi(1)) == "x-1"
    assert str(cyclotomic_phi(6)) == "x^2-x+1"
    assert str(cyclotomic_phi(12)) == "x^4-x^2+1"


def mobius_product_phi(n):
    x = X.variable("x")
    num = den = None
    for d in divisors(n):
        mu = mobius(n // d)
        if mu == 0:
            continue
        t = x ** d - 1
        if mu == 1:
            num = t if num is None else num * t
        else:
            den = t if den is None else den * t
    return num if den is None else exact_div(num, den)


def recursive_division_phi(n, memo):
    if n not in memo:
        x = X.variable("x")
        p = x ** n - 1
        for d in divisors(n)[:-1]:
            p = exact_div(p, recursive_division_phi(d, memo))
        memo[n] = p
    return memo[n]


def test_cyclotomic_three_routes_agree():
    memo = {}
    for n in range(1, 31):
        a = cyclotomic_phi(n)
        assert a == mobius_product_phi(n)
        assert a == recursive_division_phi(n, memo)
        assert a.degree() == euler_phi(n)


def test_cyclotomic_product_rebuilds():
    x = X.variable("x")
    for n in range(1, 31):
        prod = X.one()
        for d in divisors(n):
            prod = prod * cyclotomic_phi(d)
        assert prod == x ** n - 1


def test_cyclotomic_phi_at():
    assert cyclotomic_phi_at(6, 2) == 3
    assert cyclotomic_phi_at(1, 2) == 1
    assert cyclotomic_phi_at(4, 10) == 101
    with pytest.raises(UsageError):
        cyclotomic_phi_at(6, 1)
    with pytest.raises(UsageError):
        cyclotomic_phi(0)


def test_psi_goldens():
    assert str(psi(1)) == "x-y"
    assert str(psi(2)) == "x+y"
    assert str(psi(6)) == "x^2-x*y+y^2"


def test_psi_homogeneous():
    for n in range(2, 21):
        p = psi(n)
        degrees = {sum(exps) for exps, _ in p.monomials()}
        assert degrees == {euler_phi(n)}


def test_psi_specializes_to_phi():
    for n in range(1, 21):
        at_y1 = evaluate(psi(n), {"x": psi(n).ring.variable("x"), "y": psi(n).ring.one()})
        # collapse to the univariate ring through text form
        collapsed = X.parse(str(at_y1))
        assert is_associate(collapsed, cyclotomic_phi(n))


def test_un_vn_lcm_terms_match_psi_values():
    seq = lcm_sequence(builtin("un_vn", {"u": 3, "v": 2}), 20)
    for n in range(1, 21):
        want = int(evaluate(psi(n), {"x": 3, "y": 2}))
        assert int(seq.c[n - 1]) == abs(want)


def test_entry_metadata_is_complete():
    for name in catalog_names():
        e = CATALOG[name]
        assert e.doc
        params = {p.name: 2 for p in e.params}
        if name == "un_vn":
            params = {"u": 3, "v": 2}
        ring = e.ring(params)
        spec = builtin(name, params)
        assert spec.ring == ring
