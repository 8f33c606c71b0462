import pytest

from divseq import UsageError, divisors, euler_phi, factorize, mobius


def brute_divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def brute_mobius(n):
    # count squarefree prime factors by full expansion
    count = 0
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            count += 1
        else:
            d += 1
    if m > 1:
        count += 1
    return -1 if count % 2 else 1


def brute_phi(n):
    from math import gcd

    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def test_factorize_small():
    assert factorize(1).factors == ()
    assert factorize(12).factors == ((2, 2), (3, 1))
    assert factorize(97).factors == ((97, 1),)
    assert factorize(2584).factors == ((2, 3), (17, 1), (19, 1))
    assert factorize(360).primes == (2, 3, 5)


def test_factorize_reconstructs():
    for n in range(1, 500):
        prod = 1
        for p, e in factorize(n).factors:
            prod *= p ** e
        assert prod == n


def test_divisors_against_brute_force():
    for n in (1, 2, 12, 36, 97, 360):
        assert divisors(n) == brute_divisors(n)
    assert divisors(12) == [1, 2, 3, 4, 6, 12]


def test_mobius_and_phi_against_brute_force():
    for n in range(1, 200):
        assert mobius(n) == brute_mobius(n)
        assert euler_phi(n) == brute_phi(n)


def test_classical_divisor_sums():
    # sum of phi(d) over d | n is n; sum of mu(d) is 1 only at n = 1
    for n in range(1, 1001):
        ds = divisors(n)
        assert sum(euler_phi(d) for d in ds) == n
        assert sum(mobius(d) for d in ds) == (1 if n == 1 else 0)


def test_index_validation():
    for bad in (0, -3, True, 2.0, "6"):
        with pytest.raises(UsageError):
            factorize(bad)
        with pytest.raises(UsageError):
            mobius(bad)
        with pytest.raises(UsageError):
            euler_phi(bad)
        with pytest.raises(UsageError):
            divisors(bad)
