import random

import sympy

from superwarp.graded import (EVEN, ODD, SuperScalar, left_odd_derivative,
                              merge_sign, sort_indices_sign, swap_sign)


def rand_super(rng, parity=None, n_odd=4):
    monos = []
    for size in range(n_odd + 1):
        if parity is not None and size % 2 != parity:
            continue
        if size == 0:
            monos.append(())
        elif size == 1:
            monos.extend((i,) for i in range(n_odd))
        elif size == 2:
            monos.extend((i, j) for i in range(n_odd)
                         for j in range(i + 1, n_odd))
        elif size == 3:
            monos.append((0, 1, 2))
        else:
            monos.append((0, 1, 2, 3))
    terms = {}
    for m in monos:
        if rng.random() < 0.6:
            c = sympy.Rational(rng.randint(-4, 4), rng.randint(1, 3))
            if c:
                terms[m] = c
    return SuperScalar(terms)


def test_sign_helpers():
    assert swap_sign(EVEN, ODD) == 1
    assert swap_sign(ODD, ODD) == -1
    assert merge_sign((0,), (1,)) == 1
    assert merge_sign((1,), (0,)) == -1
    assert merge_sign((0,), (0,)) is None
    assert sort_indices_sign([2, 1]) == ((1, 2), -1)


def test_odd_coordinates_anticommute():
    a = SuperScalar.odd_coordinate(0)
    b = SuperScalar.odd_coordinate(1)
    assert (a * b + b * a).is_zero()
    assert (a * a).is_zero()


def test_graded_commutativity_random():
    rng = random.Random(11)
    for _ in range(100):
        f = rand_super(rng, parity=rng.randint(0, 1))
        g = rand_super(rng, parity=rng.randint(0, 1))
        sign = swap_sign(f.parity() if f.terms else EVEN,
                         g.parity() if g.terms else EVEN)
        assert (f * g - (g * f).scale(sign)).is_zero()


def test_associativity_random():
    rng = random.Random(12)
    for _ in range(100):
        f, g, h = (rand_super(rng) for _ in range(3))
        assert ((f * g) * h - f * (g * h)).is_zero()


def test_left_odd_derivative_leibniz_random():
    rng = random.Random(13)
    for _ in range(100):
        p = rng.randint(0, 1)
        f = rand_super(rng, parity=p)
        g = rand_super(rng)
        i = rng.randint(0, 3)
        lhs = left_odd_derivative(f * g, i)
        rhs = left_odd_derivative(f, i) * g \
            + (f * left_odd_derivative(g, i)).scale(1 if p == EVEN else -1)
        assert (lhs - rhs).is_zero()


def test_sign_by_degree():
    a = SuperScalar.odd_coordinate(0)
    b = SuperScalar.odd_coordinate(1)
    s = SuperScalar.from_scalar(2) + a + a * b
    flipped = s.sign_by_degree(ODD)
    assert flipped.coefficient(()) == 2
    assert flipped.coefficient((0,)) == -1
    assert flipped.coefficient((0, 1)) == 1


def test_reindex_shift():
    a = SuperScalar.odd_coordinate(0) * SuperScalar.odd_coordinate(1)
    shifted = a.reindex({0: 2, 1: 3})
    assert shifted.coefficient((2, 3)) == 1


def test_canonical_and_equality():
    t = sympy.Symbol("t", positive=True)
    f = SuperScalar({(): (t ** 2 - t) / t})
    g = SuperScalar({(): t - 1})
    assert f.equals(g)
    assert (f - g).canonical().is_zero()
