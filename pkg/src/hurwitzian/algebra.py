"""The twisted group algebra (R[F_2^n], f) with exact integer coefficients."""
from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass

from .gf2n import CubicForm, check_vec, from_bin, to_bin
from .polarization import TwistFn


@dataclass(frozen=True)
class AlgebraElement:
    """Sparse element sum_x a_x e_x; zero coefficients are never stored."""

    n: int
    coeffs: dict

    def __init__(self, n: int, coeffs=None):
        clean = {}
        for x, c in (coeffs or {}).items():
            check_vec(x, n)
            if c:
                clean[x] = int(c)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def basis(cls, n: int, x: int) -> AlgebraElement:
        return cls(n, {x: 1})

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        out = dict(self.coeffs)
        for x, c in other.coeffs.items():
            out[x] = out.get(x, 0) + c
        return AlgebraElement(self.n, out)

    def __neg__(self):
        return AlgebraElement(self.n, {x: -c for x, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k: int) -> AlgebraElement:
        return AlgebraElement(self.n, {x: k * c for x, c in self.coeffs.items()})

    def to_json(self) -> str:
        terms = [{"basis": to_bin(x, self.n), "coeff": c} for x, c in sorted(self.coeffs.items())]
        return json.dumps({"n": self.n, "terms": terms})

    @classmethod
    def from_json(cls, data) -> AlgebraElement:
        if isinstance(data, str):
            data = json.loads(data)
        n = data["n"]
        coeffs = {}
        for t in data["terms"]:
            x = from_bin(t["basis"], n)
            coeffs[x] = coeffs.get(x, 0) + int(t["coeff"])
        return cls(n, coeffs)


def basis_sign(f: TwistFn, x: int, y: int) -> int:
    return -1 if f(x, y) else 1


def product(f: TwistFn, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    if not f.n == a.n == b.n:
        raise ValueError(f"dimension mismatch: f={f.n}, a={a.n}, b={b.n}")
    out: dict[int, int] = {}
    for x, ax in a.coeffs.items():
        for y, by in b.coeffs.items():
            z = x ^ y
            term = ax * by
            out[z] = out.get(z, 0) + (-term if f(x, y) else term)
    return AlgebraElement(f.n, out)


def norm_sq(a: AlgebraElement) -> int:
    return sum(c * c for c in a.coeffs.values())


def lemma_condition(alpha: CubicForm, A, B) -> bool:
    """alpha(x+x') = 1 whenever x != x' in A, y != y' in B and x+x' = y+y'."""
    sums_b = {y ^ w for y, w in itertools.combinations(set(B), 2)}
    for x, w in itertools.combinations(set(A), 2):
        s = x ^ w
        if s in sums_b and not alpha(s):
            return False
    return True


def random_element(n: int, support, rng: random.Random, low: int = -9, high: int = 9) -> AlgebraElement:
    return AlgebraElement(n, {x: rng.randint(low, high) for x in support})


def norm_mult_check(f: TwistFn, A, B, trials: int = 100, seed: int = 0,
                    low: int = -9, high: int = 9) -> bool:
    """Sample integer a on A, b on B and test ||a||^2 ||b||^2 == ||ab||^2 exactly."""
    rng = random.Random(seed)
    A, B = sorted(set(A)), sorted(set(B))
    for _ in range(trials):
        a = random_element(f.n, A, rng, low, high)
        b = random_element(f.n, B, rng, low, high)
        if norm_sq(product(f, a, b)) != norm_sq(a) * norm_sq(b):
            return False
    return True


def find_norm_violation(f: TwistFn, A, B):
    """Search all +-1 coefficient vectors on A and B for a norm failure.

    Returns a violating (a, b) pair or None. Exponential in |A| + |B|.
    """
    A, B = sorted(set(A)), sorted(set(B))
    for sa in itertools.product((1, -1), repeat=len(A) - 1):
        a = AlgebraElement(f.n, dict(zip(A, (1,) + sa)))
        for sb in itertools.product((1, -1), repeat=len(B) - 1):
            b = AlgebraElement(f.n, dict(zip(B, (1,) + sb)))
            if norm_sq(product(f, a, b)) != norm_sq(a) * norm_sq(b):
                return a, b
    return None
