import random

import pytest

from hurwitzian.algebra import (AlgebraElement, basis_sign, find_norm_violation,
                                lemma_condition, norm_mult_check, norm_sq, product,
                                random_element)
from hurwitzian.gf2n import CubicForm, make_alpha_O, omega, random_cubic
from hurwitzian.polarization import twist_from_cubic
from hurwitzian.sets import VecSet

COMPLEX = twist_from_cubic(CubicForm(1, [(1,)]))
F_O3 = twist_from_cubic(make_alpha_O(3))


def test_basis_sign_examples():
    assert basis_sign(COMPLEX, 1, 1) == -1
    assert all(basis_sign(F_O3, 0, y) == 1 for y in range(8))
    assert basis_sign(F_O3, 0b100, 0b100) == -1


def test_product_unit():
    rng = random.Random(0)
    for n in range(1, 5):
        f = twist_from_cubic(random_cubic(n, rng))
        b = random_element(n, range(1 << n), rng)
        one = AlgebraElement.basis(n, 0)
        assert product(f, one, b) == b
        assert product(f, b, one) == b


def test_complex_multiplication():
    a0, a1, b0, b1 = 3, -2, 5, 7
    a = AlgebraElement(1, {0: a0, 1: a1})
    b = AlgebraElement(1, {0: b0, 1: b1})
    assert product(COMPLEX, a, b) == AlgebraElement(1, {0: a0 * b0 - a1 * b1, 1: a0 * b1 + a1 * b0})


def test_imaginary_unit_squares_to_minus_one():
    e1 = AlgebraElement.basis(3, 0b100)
    assert product(F_O3, e1, e1) == AlgebraElement(3, {0: -1})


def test_norm_sq():
    assert norm_sq(AlgebraElement(3)) == 0
    assert norm_sq(AlgebraElement(3, {0: 3, 0b100: -4})) == 25


def test_no_zero_coefficients_stored():
    assert AlgebraElement(2, {1: 0, 2: 5}).coeffs == {2: 5}


def test_bilinearity():
    rng = random.Random(1)
    for n in range(1, 5):
        f = twist_from_cubic(random_cubic(n, rng))
        full = range(1 << n)
        a, a2, b = (random_element(n, full, rng) for _ in range(3))
        assert product(f, a + a2, b) == product(f, a, b) + product(f, a2, b)
        assert product(f, b, a + a2) == product(f, b, a) + product(f, b, a2)
        assert product(f, a.scale(3), b) == product(f, a, b).scale(3)


def test_octonion_norm_on_hurwitzian_set():
    rng = random.Random(2)
    A = range(8)
    for _ in range(50):
        a = random_element(3, A, rng)
        b = random_element(3, range(8), rng)
        assert norm_sq(product(F_O3, a, b)) == norm_sq(a) * norm_sq(b)


def test_lemma_condition_examples():
    full4 = range(16)
    assert not lemma_condition(make_alpha_O(4), [0, omega(4)], full4)
    assert lemma_condition(make_alpha_O(3), range(8), range(8))
    assert lemma_condition(CubicForm(3), [5], range(8))


def test_norm_mult_check_examples():
    assert norm_mult_check(F_O3, [0], range(8))
    assert norm_mult_check(F_O3, range(8), range(8))
    f4 = twist_from_cubic(make_alpha_O(4))
    assert not norm_mult_check(f4, [0, omega(4)], range(16), trials=5)


def test_lemma_cross_check_both_directions():
    rng = random.Random(7)
    seen = {True: 0, False: 0}
    for trial in range(150):
        n = rng.randint(1, 5)
        alpha = random_cubic(n, rng)
        f = twist_from_cubic(alpha)
        A = rng.sample(range(1 << n), rng.randint(1, min(4, 1 << n)))
        B = rng.sample(range(1 << n), rng.randint(1, min(4, 1 << n)))
        cond = lemma_condition(alpha, A, B)
        seen[cond] += 1
        if cond:
            assert norm_mult_check(f, A, B, trials=100, seed=trial)
            assert find_norm_violation(f, A, B) is None
        else:
            assert find_norm_violation(f, A, B) is not None
    assert seen[True] > 10 and seen[False] > 10


def test_element_json_roundtrip():
    a = AlgebraElement(3, {0b110: -4, 0: 2})
    assert a.to_json() == '{"n": 3, "terms": [{"basis": "000", "coeff": 2}, {"basis": "110", "coeff": -4}]}'
    assert AlgebraElement.from_json(a.to_json()) == a


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        product(F_O3, AlgebraElement(2, {0: 1}), AlgebraElement(3, {0: 1}))
    with pytest.raises(ValueError):
        AlgebraElement(2, {8: 1})


def test_big_integer_coefficients_exact():
    a = AlgebraElement(3, {x: 10**20 + x for x in range(8)})
    b = AlgebraElement(3, {x: -(10**19) * (x + 1) for x in range(8)})
    assert norm_sq(product(F_O3, a, b)) == norm_sq(a) * norm_sq(b)
