import random
from fractions import Fraction

import pytest

from squaretriads import exactnum as en
from squaretriads.errors import DomainError


def test_isqrt_examples():
    assert en.isqrt(0) == 0
    assert en.isqrt(289) == 17
    r = en.isqrt(518400)
    assert r == 720 and r * r == 518400


def test_isqrt_negative_rejected():
    with pytest.raises(DomainError):
        en.isqrt(-1)


def test_isqrt_bracketing_property():
    rng = random.Random(1)
    for _ in range(500):
        n = rng.randrange(0, 10**24)
        r = en.isqrt(n)
        assert r * r <= n < (r + 1) * (r + 1)


def test_is_perfect_square_examples():
    assert en.is_perfect_square(22500) == 150
    assert en.is_perfect_square(2880) is None  # isqrt is 53 and 53^2 != 2880
    assert en.is_perfect_square(1) == 1
    assert en.is_perfect_square(-4) is None


def test_is_perfect_square_of_squares():
    rng = random.Random(2)
    for _ in range(300):
        n = rng.randrange(-10**12, 10**12)
        assert en.is_perfect_square(n * n) == abs(n)


@pytest.mark.parametrize(
    "n,kernel,root",
    [(45, 5, 3), (64, 1, 8), (12, 3, 2), (1, 1, 1), (360, 10, 6)],
)
def test_squarefree_decompose(n, kernel, root):
    assert en.squarefree_decompose(n) == (kernel, root)
    assert kernel * root * root == n


def test_squarefree_decompose_against_factorize():
    for n in range(1, 10_000):
        kernel, root = en.squarefree_decompose(n)
        assert kernel * root * root == n
        for p, e in en.factorize(kernel).items():
            assert e == 1


@pytest.mark.parametrize(
    "n,factors",
    [(153, {3: 2, 17: 1}), (1, {}), (186624, {2: 8, 3: 6})],
)
def test_factorize_examples(n, factors):
    assert en.factorize(n) == factors


def test_factorize_large_deterministic():
    n = 3474741058973
    f1 = en.factorize(n)
    f2 = en.factorize(n)
    assert f1 == f2
    prod = 1
    for p, e in f1.items():
        assert en.is_prime(p)
        prod *= p**e
    assert prod == n


def test_factorize_rejects_nonpositive():
    with pytest.raises(DomainError):
        en.factorize(0)


def test_sum_of_two_squares_examples():
    got = en.sum_of_two_squares(153)
    assert got is not None and got[0] ** 2 + got[1] ** 2 == 153 and 0 <= got[0] <= got[1]
    assert en.sum_of_two_squares(5) == (1, 2)
    assert en.sum_of_two_squares(21) is None


def test_sum_of_two_squares_matches_exhaustive_search():
    """Representability and witness validity agree with brute force up to 1e5."""
    limit = 100_000
    reachable = set()
    p = 0
    while 2 * p * p <= limit:
        q = p
        while p * p + q * q <= limit:
            reachable.add(p * p + q * q)
            q += 1
        p += 1
    for n in range(1, limit + 1):
        got = en.sum_of_two_squares(n)
        assert (got is not None) == (n in reachable), n
        if got is not None:
            assert got[0] ** 2 + got[1] ** 2 == n
            assert 0 <= got[0] <= got[1]


def test_two_squares_witness_type_validates():
    with pytest.raises(DomainError):
        en.TwoSquares(1, 1, 3)


@pytest.mark.parametrize(
    "alpha,beta,expected",
    [
        ((1, 2, 5), (1, 2, 5), (1, 0, 1)),
        ((1, 1, 2), (1, 2, 5), (Fraction(3, 5), Fraction(1, 5), Fraction(2, 5))),
        ((0, 3, 9), (0, 1, 1), (3, 0, 9)),
    ],
)
def test_ratio_two_squares_examples(alpha, beta, expected):
    got = en.ratio_two_squares(en.TwoSquares(*alpha), en.TwoSquares(*beta))
    assert (got.p, got.q, got.value) == tuple(map(Fraction, expected))


def test_ratio_two_squares_identity_fuzz():
    rng = random.Random(3)
    for _ in range(300):
        a1, a2 = Fraction(rng.randint(-9, 9), rng.randint(1, 9)), Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        b1, b2 = Fraction(rng.randint(-9, 9), rng.randint(1, 9)), Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if (a1 == 0 and a2 == 0) or (b1 == 0 and b2 == 0):
            continue
        alpha = en.TwoSquares(a1, a2, a1 * a1 + a2 * a2)
        beta = en.TwoSquares(b1, b2, b1 * b1 + b2 * b2)
        out = en.ratio_two_squares(alpha, beta)
        assert out.p**2 + out.q**2 == alpha.value / beta.value


def test_ratio_two_squares_rejects_zero():
    z = en.TwoSquares(0, 0, 0)
    good = en.TwoSquares(1, 0, 1)
    with pytest.raises(DomainError):
        en.ratio_two_squares(z, good)
    with pytest.raises(DomainError):
        en.ratio_two_squares(good, z)
