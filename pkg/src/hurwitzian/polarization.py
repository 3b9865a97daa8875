"""Polarizations of cubic forms and the twisting functions they induce."""
from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .gf2n import CubicForm, check_dim, check_vec, index_mask, mobius

TABLE_MAX_N = 12
SECOND_POLARIZATION_MAX_N = 10
DIRECT_DEGREE_MAX_N = 6


def _same_dim(*ns):
    if len(set(ns)) != 1:
        raise ValueError(f"dimension mismatch: {ns}")


def _canonical_pairs(n, monomials):
    parity = {}
    for I, J in monomials:
        I = tuple(sorted(set(int(i) for i in I)))
        J = tuple(sorted(set(int(j) for j in J)))
        if not I or not J:
            raise ValueError("each twist monomial needs factors from both arguments")
        if len(I) + len(J) > 3:
            raise ValueError(f"twist monomial {(I, J)} has degree > 3")
        if min(I + J) < 1 or max(I + J) > n:
            raise ValueError(f"twist monomial {(I, J)} has an index outside 1..{n}")
        parity[(I, J)] = parity.get((I, J), 0) ^ 1
    return frozenset(k for k, v in parity.items() if v)


@dataclass(frozen=True)
class TwistFn:
    """f(x, y) = XOR of prod_{i in I} x_i * prod_{j in J} y_j over monomials (I, J)."""

    n: int
    monomials: frozenset

    def __init__(self, n: int, monomials=()):
        n = check_dim(n)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "monomials", _canonical_pairs(n, monomials))
        object.__setattr__(self, "_rows", {})

    def __repr__(self):
        return f"TwistFn(n={self.n}, {self.to_text()!r})"

    def sorted_monomials(self):
        return sorted(self.monomials, key=lambda m: (-(len(m[0]) + len(m[1])), m))

    @cached_property
    def _masks(self):
        return tuple((index_mask(self.n, I), index_mask(self.n, J)) for I, J in self.monomials)

    def row(self, x: int) -> tuple[int, ...]:
        """J-masks of the polynomial y -> f(x, y), reduced mod 2."""
        r = self._rows.get(x)
        if r is None:
            parity = {}
            for mi, mj in self._masks:
                if x & mi == mi:
                    parity[mj] = parity.get(mj, 0) ^ 1
            r = tuple(sorted(m for m, v in parity.items() if v))
            self._rows[x] = r
        return r

    def __call__(self, x: int, y: int) -> int:
        check_vec(x, self.n)
        check_vec(y, self.n)
        acc = 0
        for m in self.row(x):
            if y & m == m:
                acc ^= 1
        return acc

    def table(self) -> np.ndarray:
        """Full 2^n x 2^n value table, uint8."""
        if self.n > TABLE_MAX_N:
            raise ValueError(f"twist table needs n <= {TABLE_MAX_N}")
        size = 1 << self.n
        by_i = {}
        for mi, mj in self._masks:
            by_i.setdefault(mi, []).append(mj)
        if not by_i:
            return np.zeros((size, size), dtype=np.uint8)
        ind_x = np.zeros((len(by_i), size), dtype=np.uint8)
        g_y = np.zeros((len(by_i), size), dtype=np.uint8)
        for k, (mi, mjs) in enumerate(sorted(by_i.items())):
            anf = np.zeros(size, dtype=np.uint8)
            anf[mi] = 1
            ind_x[k] = mobius(anf)
            anf = np.zeros(size, dtype=np.uint8)
            for mj in mjs:
                anf[mj] ^= 1
            g_y[k] = mobius(anf)
        return ((ind_x.T.astype(np.int32) @ g_y.astype(np.int32)) & 1).astype(np.uint8)

    def to_text(self) -> str:
        if not self.monomials:
            return "0"
        return "+".join(
            "".join(f"x{i}" for i in I) + "".join(f"y{j}" for j in J)
            for I, J in self.sorted_monomials()
        )

    @classmethod
    def from_text(cls, n: int, text: str) -> TwistFn:
        text = text.replace(" ", "")
        if text in ("", "0"):
            return cls(n)
        monos = []
        for term in text.split("+"):
            if not re.fullmatch(r"([xy]\d+)+", term):
                raise ValueError(f"cannot parse twist monomial {term!r}")
            factors = re.findall(r"([xy])(\d+)", term)
            monos.append((
                [int(i) for v, i in factors if v == "x"],
                [int(j) for v, j in factors if v == "y"],
            ))
        return cls(n, monos)

    def to_json(self) -> str:
        return json.dumps({
            "n": self.n,
            "monomials": [[list(I), list(J)] for I, J in self.sorted_monomials()],
        })

    @classmethod
    def from_json(cls, data) -> TwistFn:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["n"], [(tuple(I), tuple(J)) for I, J in data["monomials"]])


def beta(alpha: CubicForm, x: int, y: int) -> int:
    return alpha(x ^ y) ^ alpha(x) ^ alpha(y)


def second_polarization(alpha: CubicForm, x: int, y: int, z: int) -> int:
    a = alpha
    return (a(x ^ y ^ z) ^ a(x ^ y) ^ a(x ^ z) ^ a(y ^ z)
            ^ a(x) ^ a(y) ^ a(z))


def delta_f(f: TwistFn, x: int, y: int, z: int) -> int:
    return f(y, z) ^ f(x ^ y, z) ^ f(x, y ^ z) ^ f(x, y)


def twist_from_cubic(alpha: CubicForm) -> TwistFn:
    """Substitute each monomial of alpha by its bilinear-in-y counterpart.

    x_i x_j x_k -> x_i x_j y_k + x_i y_j x_k + y_i x_j x_k,
    x_i x_j -> x_i y_j (i < j), x_i -> x_i y_i.
    """
    out = []
    for m in alpha.monomials:
        if len(m) == 3:
            i, j, k = m
            out += [((i, j), (k,)), ((i, k), (j,)), ((j, k), (i,))]
        elif len(m) == 2:
            out.append(((m[0],), (m[1],)))
        else:
            out.append(((m[0],), (m[0],)))
    return TwistFn(alpha.n, out)


@dataclass(frozen=True)
class PropertyReport:
    first_polarization: bool
    second_polarization: bool
    linear_in_second: bool
    reconstructs_alpha: bool
    exhaustive: tuple[bool, bool, bool, bool]

    @property
    def all(self) -> bool:
        return (self.first_polarization and self.second_polarization
                and self.linear_in_second and self.reconstructs_alpha)

    def as_dict(self) -> dict:
        keys = ("a", "b", "c", "d")
        vals = (self.first_polarization, self.second_polarization,
                self.linear_in_second, self.reconstructs_alpha)
        return {
            "properties": dict(zip(keys, vals)),
            "exhaustive": dict(zip(keys, self.exhaustive)),
        }


def _bits_matrix(n):
    ar = np.arange(1 << n)
    return ((ar[:, None] >> (n - 1 - np.arange(n))[None, :]) & 1).astype(np.int32)


def _table_checks(alpha, f):
    n = alpha.n
    size = 1 << n
    ta = alpha.truth_table()
    F = f.table()
    ar = np.arange(size)
    xor = ar[:, None] ^ ar[None, :]
    a = bool(np.array_equal(F ^ F.T, ta[xor] ^ ta[:, None] ^ ta[None, :]))
    d = bool(np.array_equal(np.diagonal(F), ta))
    # linear in y for every x <=> f(x,y) = sum_i y_i f(x,e_i), same as the y,y' statement
    cols = np.array([1 << (n - i) for i in range(1, n + 1)])
    predicted = (F[:, cols].astype(np.int32) @ _bits_matrix(n).T) & 1
    c = bool(np.array_equal(predicted, F))
    b = None
    if n <= SECOND_POLARIZATION_MAX_N:
        b = True
        col = ta[ar][:, None]
        row = ta[ar][None, :]
        base = ta[xor] ^ col ^ row
        for x in range(size):
            lhs = F ^ F[x ^ ar] ^ F[x][xor] ^ F[x][:, None]
            rhs = ta[x ^ xor] ^ ta[x ^ ar][:, None] ^ ta[x ^ ar][None, :] ^ ta[x] ^ base
            if not np.array_equal(lhs, rhs):
                b = False
                break
    return a, b, c, d


def check_properties(alpha: CubicForm, f: TwistFn, trials: int = 2000, seed: int = 0) -> PropertyReport:
    """Check properties (a)-(d) linking alpha and f.

    Exhaustive via value tables when n <= 12 ((b) only up to n = 10); otherwise
    each non-exhaustive property is tested on ``trials`` random tuples drawn
    from a generator seeded with ``seed``.
    """
    _same_dim(alpha.n, f.n)
    n = alpha.n
    a = b = c = d = None
    if n <= TABLE_MAX_N:
        a, b, c, d = _table_checks(alpha, f)
    exhaustive = (a is not None, b is not None, c is not None, d is not None)
    rng = random.Random(seed)

    def rand():
        return rng.getrandbits(n)

    if a is None:
        a = all(f(x, y) ^ f(y, x) == beta(alpha, x, y)
                for x, y in ((rand(), rand()) for _ in range(trials)))
    if b is None:
        b = all(delta_f(f, x, y, z) == second_polarization(alpha, x, y, z)
                for x, y, z in ((rand(), rand(), rand()) for _ in range(trials)))
    if c is None:
        c = all(f(x, y ^ w) == f(x, y) ^ f(x, w)
                for x, y, w in ((rand(), rand(), rand()) for _ in range(trials)))
    if d is None:
        d = all(f(x, x) == alpha(x) for x in (rand() for _ in range(trials)))
    return PropertyReport(a, b, c, d, exhaustive)


@dataclass(frozen=True)
class TruthTable:
    n: int
    values: np.ndarray

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=np.uint8) & 1
        if vals.ndim != 1 or vals.shape[0] != 1 << self.n:
            raise ValueError(f"truth table on F_2^{self.n} needs {1 << self.n} entries")
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_form(cls, alpha: CubicForm) -> TruthTable:
        return cls(alpha.n, alpha.truth_table())

    @classmethod
    def from_anf(cls, n: int, monomial_masks) -> TruthTable:
        anf = np.zeros(1 << n, dtype=np.uint8)
        for m in monomial_masks:
            anf[m] ^= 1
        return cls(n, mobius(anf))

    @classmethod
    def from_bits(cls, text: str) -> TruthTable:
        """Parse a string of 2^n '0'/'1' characters, entry x at position x."""
        text = text.strip()
        n = len(text).bit_length() - 1
        if len(text) != 1 << n or set(text) - {"0", "1"}:
            raise ValueError("truth table must be 2^n characters of 0/1")
        return cls(n, np.frombuffer(text.encode(), dtype=np.uint8) - ord("0"))

    def anf_degree(self) -> int:
        coeffs = mobius(self.values)
        return max((int(m).bit_count() for m in np.flatnonzero(coeffs)), default=0)


def _fourth_difference_vanishes(g: np.ndarray, n: int) -> bool:
    size = 1 << n
    ar = np.arange(size)
    xy = ar[:, None] ^ ar[None, :]
    gx = g[:, None]
    gy = g[None, :]
    gxy = g[xy]
    for z in range(size):
        for t in range(z, size):
            s = (g[xy ^ z ^ t] ^ g[xy ^ z] ^ g[xy ^ t] ^ g[ar ^ z ^ t][:, None] ^ g[ar ^ z ^ t][None, :]
                 ^ gxy ^ g[ar ^ z][:, None] ^ g[ar ^ t][:, None] ^ g[ar ^ z][None, :] ^ g[ar ^ t][None, :]
                 ^ g[z ^ t] ^ gx ^ gy ^ g[z] ^ g[t] ^ g[0])
            if s.any():
                return False
    return True


def is_degree_le3(g: TruthTable, method: str = "auto") -> bool:
    """True iff the alternating sum of g over all sub-sums of (x, y, z, t) vanishes.

    ``method="direct"`` evaluates the sum over every quadruple (16^n terms);
    ``"anf"`` reads the algebraic degree off the Moebius transform. Both decide
    the same condition; ``"auto"`` uses the direct route for n <= 6.
    """
    if g.n < 4:
        return True
    if method == "auto":
        method = "direct" if g.n <= DIRECT_DEGREE_MAX_N else "anf"
    if method == "direct":
        return _fourth_difference_vanishes(g.values, g.n)
    if method == "anf":
        return g.anf_degree() <= 3
    raise ValueError(f"unknown method {method!r}")
