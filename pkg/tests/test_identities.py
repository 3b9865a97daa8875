import random

import pytest

from hurwitzian.algebra import AlgebraElement, lemma_condition, norm_sq, product, random_element
from hurwitzian.gf2n import CubicForm, make_alpha_O, random_cubic
from hurwitzian.hadamard import hadamard_paley
from hurwitzian.identities import (ExpansionBudgetExceeded, Identity, build_identity,
                                   expansion_residual, hurwitz_radon_identity, mutate,
                                   parse_text, render_text, verify_symbolic)
from hurwitzian.polarization import TwistFn, twist_from_cubic
from hurwitzian.sets import VecSet

COMPLEX = twist_from_cubic(CubicForm(1, [(1,)]))


def two_square():
    return build_identity(COMPLEX, [0, 1], [0, 1])


def test_two_square_identity():
    ident = two_square()
    assert ident.terms == {0: [(1, 0, 0), (-1, 1, 1)], 1: [(1, 0, 1), (1, 1, 0)]}
    assert ident.size == (2, 2, 2)
    assert verify_symbolic(ident)
    assert render_text(ident) == "c0 = a0*b0 - a1*b1\nc1 = a0*b1 + a1*b0"


def test_sign_flip_breaks_two_square():
    ident = two_square()
    bad = Identity(1, ident.A, ident.B, {0: [(1, 0, 0), (1, 1, 1)], 1: ident.terms[1]})
    assert not verify_symbolic(bad)


def test_scalar_identity():
    f = twist_from_cubic(make_alpha_O(3))
    ident = build_identity(f, [0], range(8))
    assert all(len(ts) == 1 and ts[0][0] == 1 for ts in ident.terms.values())
    assert verify_symbolic(ident)
    assert render_text(ident).splitlines()[5] == "c101 = a000*b101"


def test_octonion_identity():
    ident = hurwitz_radon_identity(3)
    assert ident.size == (8, 8, 8)
    assert verify_symbolic(ident)


@pytest.mark.parametrize("n,size", [(1, (2, 2, 2)), (2, (4, 4, 4)), (3, (8, 8, 8)), (4, (8, 16, 16)),
                                    (5, (10, 32, 32)), (6, (12, 64, 64)), (7, (16, 128, 128))])
def test_hurwitz_radon_identities(n, size):
    ident = hurwitz_radon_identity(n)
    assert ident.size == size
    assert ident.term_count() == size[0] * size[1]
    assert verify_symbolic(ident)


def test_hadamard_identity():
    ident = hurwitz_radon_identity(11, hadamard_paley(11))
    assert ident.size == (24, 2048, 2048)
    assert verify_symbolic(ident)


def test_identity_agrees_with_algebra_norm():
    # numeric evaluation of the identity equals the algebra product
    rng = random.Random(0)
    f = twist_from_cubic(make_alpha_O(3))
    ident = build_identity(f, range(8), range(8))
    a = random_element(3, range(8), rng)
    b = random_element(3, range(8), rng)
    c = {z: sum(s * a.coeffs.get(x, 0) * b.coeffs.get(y, 0) for s, x, y in ts)
         for z, ts in ident.terms.items()}
    assert AlgebraElement(3, c) == product(f, a, b)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_full_algebras_compose(n):
    # C, H, O: norm multiplicative on the whole algebra
    f = twist_from_cubic(make_alpha_O(n))
    assert verify_symbolic(build_identity(f, range(1 << n), range(1 << n)))


def test_full_algebra_n4_does_not_compose():
    f = twist_from_cubic(make_alpha_O(4))
    assert not verify_symbolic(build_identity(f, range(16), range(16)))


def test_soundness_bridge_random():
    rng = random.Random(42)
    outcomes = set()
    for _ in range(200):
        n = rng.randint(1, 4)
        alpha = random_cubic(n, rng)
        A = rng.sample(range(1 << n), rng.randint(1, 1 << n))
        B = rng.sample(range(1 << n), rng.randint(1, 1 << n))
        got = verify_symbolic(build_identity(twist_from_cubic(alpha), A, B))
        assert got == lemma_condition(alpha, A, B)
        outcomes.add(got)
    assert outcomes == {True, False}


def test_every_single_sign_mutation_detected():
    ident = hurwitz_radon_identity(2)
    assert ident.size == (4, 4, 4)
    for z, ts in ident.terms.items():
        for i in range(len(ts)):
            terms = {k: list(v) for k, v in ident.terms.items()}
            s, x, y = terms[z][i]
            terms[z][i] = (-s, x, y)
            assert not verify_symbolic(Identity(ident.n, ident.A, ident.B, terms))


def test_mutate_helper():
    ident = hurwitz_radon_identity(3)
    bad = mutate(ident, 1, seed=7)
    assert not verify_symbolic(bad)
    assert sum(s1 != s2 for z in ident.terms for (s1, *_), (s2, *_) in zip(ident.terms[z], bad.terms[z])) == 1
    assert mutate(ident, 1, seed=7) == bad


def test_residual_reports_monomials():
    ident = two_square()
    bad = Identity(1, ident.A, ident.B, {0: [(1, 0, 0), (1, 1, 1)], 1: ident.terms[1]})
    # cross term a0 a1 b0 b1 no longer cancels
    assert expansion_residual(bad) == {(0, 1, 0, 1): 4}


def test_budget():
    with pytest.raises(ExpansionBudgetExceeded):
        verify_symbolic(hurwitz_radon_identity(3), budget=10)
    with pytest.raises(ExpansionBudgetExceeded):
        hurwitz_radon_identity(12)


def test_text_roundtrip():
    ident = hurwitz_radon_identity(3)
    assert parse_text(render_text(ident)) == ident
    bad = mutate(ident, 3, seed=1)
    assert parse_text(render_text(bad)) == bad


def test_json_roundtrip_and_format():
    ident = two_square()
    d = ident.to_dict()
    assert d["size"] == [2, 2, 2]
    assert d["terms"]["0"] == [{"s": 1, "x": "0", "y": "0"}, {"s": -1, "x": "1", "y": "1"}]
    assert Identity.from_json(ident.to_json()) == ident
    big = hurwitz_radon_identity(4)
    assert Identity.from_json(big.to_json()) == big


def test_parse_rejects_malformed():
    with pytest.raises(ValueError):
        parse_text("c0 = a0*b0 -\nc1 = a0*b1 + a1*b0")
    with pytest.raises(ValueError):
        parse_text("c0 = a0*b0 - a1*b1\nc1 = a0*b1")  # A x B not covered
    with pytest.raises(ValueError):
        parse_text("c1 = a0*b0")  # wrong bucket


def test_bucket_partition():
    rng = random.Random(9)
    for _ in range(20):
        n = rng.randint(1, 5)
        A = rng.sample(range(1 << n), rng.randint(1, 1 << n))
        B = rng.sample(range(1 << n), rng.randint(1, 1 << n))
        ident = build_identity(twist_from_cubic(random_cubic(n, rng)), VecSet(n, A), VecSet(n, B))
        assert ident.term_count() == len(A) * len(B)
        assert len(ident.terms) == len({x ^ y for x in A for y in B})
