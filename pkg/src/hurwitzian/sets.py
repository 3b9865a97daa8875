"""Hurwitzian sets: the Hurwitz-Radon function, constructions and exact search.

A set A of F_2^n is Hurwitzian for a cubic form alpha when alpha(x + x') = 1
for every pair of distinct x, x' in A. For the weight-mod-4 form this says no
two members are at Hamming distance divisible by 4.
"""
from __future__ import annotations

import itertools
import json
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .clique import find_clique_of_size, max_clique
from .gf2n import (CubicForm, all_cubic_monomials, basis, check_dim, check_vec,
                   from_bin, index_mask, make_alpha_O, mobius, omega, to_bin, wt)
from .hadamard import HadamardMatrix

DEFAULT_MAX_N = 8


@dataclass(frozen=True)
class VecSet:
    n: int
    elems: tuple[int, ...]

    def __init__(self, n: int, elems=()):
        n = check_dim(n)
        elems = tuple(check_vec(int(x), n) for x in elems)
        if len(set(elems)) != len(elems):
            raise ValueError("VecSet elements must be distinct")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "elems", elems)

    def __len__(self):
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def __contains__(self, x):
        return x in set(self.elems)

    def sorted(self) -> VecSet:
        return VecSet(self.n, sorted(self.elems))

    def translate(self, v: int) -> VecSet:
        return VecSet(self.n, (x ^ v for x in self.elems))

    def sumset(self, other: VecSet) -> set[int]:
        return {x ^ y for x in self.elems for y in other.elems}

    def to_strings(self) -> list[str]:
        return [to_bin(x, self.n) for x in self.elems]

    def to_text(self) -> str:
        return "\n".join(self.to_strings()) + "\n"

    @classmethod
    def full(cls, n: int) -> VecSet:
        return cls(n, range(1 << n))

    @classmethod
    def from_strings(cls, rows, n: int | None = None) -> VecSet:
        rows = [r.strip() for r in rows if r.strip()]
        if n is None:
            if not rows:
                raise ValueError("cannot infer dimension of an empty set")
            n = len(rows[0])
        return cls(n, (from_bin(r, n) for r in rows))

    @classmethod
    def from_text(cls, text: str, n: int | None = None) -> VecSet:
        """One binary vector per line; ``#`` starts a comment."""
        return cls.from_strings([line.split("#", 1)[0] for line in text.splitlines()], n)


def _elems(A) -> list[int]:
    return list(A.elems) if isinstance(A, VecSet) else list(A)


def rho(N: int) -> int:
    """Hurwitz-Radon number; depends only on the 2-adic part 2^n of N."""
    if N < 1:
        raise ValueError("rho is defined for N >= 1")
    n = (N & -N).bit_length() - 1
    return {0: 2 * n + 1, 1: 2 * n, 2: 2 * n, 3: 2 * n + 2}[n % 4]


def is_hurwitzian(alpha: CubicForm, A) -> bool:
    if isinstance(A, VecSet) and A.n != alpha.n:
        raise ValueError(f"dimension mismatch: form {alpha.n}, set {A.n}")
    return all(alpha(x ^ y) for x, y in itertools.combinations(_elems(A), 2))


def construct_mod12(n: int) -> VecSet:
    """{0, e_1..e_n, e_1+e_2..e_1+e_n}: size 2n, pairwise sums of weight <= 3."""
    if n % 4 not in (1, 2):
        raise ValueError(f"construct_mod12 needs n = 1, 2 mod 4, got {n}")
    e = [basis(n, i) for i in range(1, n + 1)]
    return VecSet(n, [0] + e + [e[0] ^ v for v in e[1:]])


def construct_mod3(n: int) -> VecSet:
    if n % 4 != 3:
        raise ValueError(f"construct_mod3 needs n = 3 mod 4, got {n}")
    w = omega(n)
    e = [basis(n, i) for i in range(1, n + 1)]
    return VecSet(n, [0, w] + e + [v ^ w for v in e])


def construct_mod0(n: int) -> VecSet:
    """construct_mod3(n-1) padded with a trailing zero coordinate (2n elements)."""
    if n % 4 != 0:
        raise ValueError(f"construct_mod0 needs n = 0 mod 4, got {n}")
    return VecSet(n, (x << 1 for x in construct_mod3(n - 1)))


def best_construction(n: int) -> VecSet:
    """The largest explicit set for alpha_O: rho(2^n) elements, or 2n if 4 | n."""
    r = n % 4
    if r in (1, 2):
        return construct_mod12(n)
    if r == 3:
        return construct_mod3(n)
    return construct_mod0(n)


def hadamard_binary_rows(H: HadamardMatrix) -> tuple[list[str], list[str]]:
    """The two 0/1 matrices built from the normalized H without its first column."""
    rows = H.normalized().rows
    h1 = ["".join("1" if v == -1 else "0" for v in r[1:]) for r in rows]
    h2 = ["".join("1" if v == 1 else "0" for v in r[1:]) for r in rows]
    return h1, h2


def hurwitzian_from_hadamard(H: HadamardMatrix) -> VecSet:
    m = H.m
    if m % 4 or (m // 4) % 2 == 0:
        raise ValueError(f"need order m = 4s with s odd, got m = {m}")
    h1, h2 = hadamard_binary_rows(H)
    return VecSet.from_strings(h1 + h2, m - 1)


# -- exact search -----------------------------------------------------------

@dataclass
class MaxSetResult:
    n: int
    size: int
    witness: VecSet
    exact: bool
    nodes: int = 0
    notes: list[str] = field(default_factory=list)

    def certificate(self, alpha_name: str = "alpha_O") -> dict:
        cert = {
            "n": self.n,
            "alpha": alpha_name,
            "max": self.size,
            "witness": sorted(self.witness.to_strings()),
        }
        if not self.exact:
            cert["lower_bound"] = True
        return cert


def _table_of(alpha) -> np.ndarray:
    return alpha.truth_table() if isinstance(alpha, CubicForm) else np.asarray(alpha, dtype=np.uint8)


def period_space(table: np.ndarray) -> list[int]:
    """All p with alpha(u + p) = alpha(u) for every u (a linear subspace)."""
    ar = np.arange(table.shape[0])
    return [p for p in range(table.shape[0]) if np.array_equal(table[ar ^ p], table)]


def _reduced_representatives(n: int, periods: list[int]) -> list[int]:
    # Echelon basis of the period space; representatives vanish on pivot bits.
    pivots = 0
    rows = []
    for p in periods:
        for piv, r in rows:
            if p >> piv & 1:
                p ^= r
        if p:
            piv = p.bit_length() - 1
            rows = [(q, r ^ p if r >> piv & 1 else r) for q, r in rows]
            rows.append((piv, p))
            pivots |= 1 << piv
    return [x for x in range(1 << n) if not x & pivots]


def _graph(table, vertices):
    tl = table.tolist()
    order = sorted(vertices, key=lambda u: (-sum(tl[u ^ v] for v in vertices if v != u), u))
    pos = {v: i for i, v in enumerate(order)}
    adj = [0] * len(order)
    for i, u in enumerate(order):
        m = 0
        for v in order:
            if v != u and tl[u ^ v]:
                m |= 1 << pos[v]
        adj[i] = m
    return order, adj


def _lex_smallest(table, n, size):
    """Lexicographically smallest sorted Hurwitzian set of the given size (contains 0)."""
    tl = table.tolist()
    verts = [s for s in range(1, 1 << n) if tl[s]]
    order, adj = _graph(table, verts)
    index = {v: i for i, v in enumerate(order)}
    chosen = [0]
    cand = (1 << len(order)) - 1
    for v in sorted(verts):
        need = size - len(chosen)
        if need == 0:
            break
        i = index[v]
        if not cand >> i & 1:
            continue
        rest = adj[i] & cand
        greater = 0
        for u in order:
            if u > v:
                greater |= 1 << index[u]
        rest &= greater
        if find_clique_of_size(adj, rest, need - 1) is not None:
            chosen.append(v)
            cand = rest
    return chosen


def _max_from_table(table, n, budget=None, deterministic=False):
    tl = table.tolist()
    if tl[0]:
        raise ValueError("form must vanish at 0")
    reps = _reduced_representatives(n, period_space(table))
    verts = [s for s in reps if s and tl[s]]
    order, adj = _graph(table, verts)
    res = max_clique(adj, budget=budget)
    witness = [0] + [order[i] for i in res.clique]
    if deterministic and res.exact:
        witness = _lex_smallest(table, n, len(witness))
    return len(witness), sorted(witness), res.exact, res.nodes


def greedy_hurwitzian(alpha: CubicForm, candidates) -> VecSet:
    chosen = [0]
    for v in candidates:
        if v and all(alpha(v ^ c) for c in chosen):
            chosen.append(v)
    return VecSet(alpha.n, chosen)


def _low_weight_vectors(n, max_weight=3):
    for k in range(1, max_weight + 1):
        for idx in itertools.combinations(range(1, n + 1), k):
            yield index_mask(n, idx)


def max_hurwitzian(alpha: CubicForm, max_n: int = DEFAULT_MAX_N, budget: int | None = None,
                   deterministic: bool = False) -> MaxSetResult:
    """Exact maximum Hurwitzian set for ``alpha``, by clique search.

    Translating A keeps its pairwise sums, so 0 is assumed in A; the remaining
    members form a clique in the graph on {s != 0 : alpha(s) = 1} joined when
    alpha(u + v) = 1. If alpha has nonzero periods p (alpha(u + p) = alpha(u)),
    members can be shifted by p freely, so one representative per coset is
    searched. Above ``max_n`` or past ``budget`` search nodes, a lower bound is
    returned with ``exact=False``.
    """
    n = alpha.n
    if n > max_n:
        if alpha == make_alpha_O(n):
            w = best_construction(n)
            note = "explicit construction; search skipped above max_n"
        else:
            w = greedy_hurwitzian(alpha, _low_weight_vectors(n) if n > 16 else range(1 << n))
            note = "greedy; search skipped above max_n"
        return MaxSetResult(n, len(w), w.sorted(), False, 0, [note])
    size, witness, exact, nodes = _max_from_table(alpha.truth_table(), n, budget, deterministic)
    notes = [] if exact else ["node budget exceeded"]
    return MaxSetResult(n, size, VecSet(n, witness), exact, nodes, notes)


# -- conjecture at n = 4 ------------------------------------------------------

def _monomial_tables(n):
    monos = all_cubic_monomials(n)
    tabs = []
    for m in monos:
        anf = np.zeros(1 << n, dtype=np.uint8)
        anf[index_mask(n, m)] = 1
        tabs.append(mobius(anf))
    return monos, np.array(tabs, dtype=np.int64)


def _conjecture_chunk(args):
    n, start, stop = args
    monos, tabs = _monomial_tables(n)
    k = len(monos)
    codes = np.arange(start, stop)
    bits = (codes[:, None] >> np.arange(k)[None, :]) & 1
    tables = ((bits @ tabs) & 1).astype(np.uint8)
    return [_max_from_table(t, n)[0] for t in tables]


def form_from_code(n: int, code: int) -> CubicForm:
    """Form whose monomial j (in ``all_cubic_monomials`` order) is present iff bit j of code."""
    monos = all_cubic_monomials(n)
    return CubicForm(n, [m for j, m in enumerate(monos) if code >> j & 1])


def default_threads() -> int:
    return int(os.environ.get("HURWITZIAN_THREADS", "1"))


def conjecture_check(n: int = 4, threads: int | None = None) -> dict:
    """Maximum Hurwitzian set size of every cubic form on F_2^n (n <= 4 practical)."""
    threads = threads or default_threads()
    k = len(all_cubic_monomials(n))
    total = 1 << k
    step = 1024
    chunks = [(n, s, min(s + step, total)) for s in range(0, total, step)]
    if threads > 1:
        with ProcessPoolExecutor(threads) as ex:
            parts = list(ex.map(_conjecture_chunk, chunks))
    else:
        parts = [_conjecture_chunk(c) for c in chunks]
    maxima = [m for p in parts for m in p]
    alpha_O_code = total - 1
    bound = 2 * n + 1
    gmax = max(maxima)
    return {
        "n": n,
        "forms": total,
        "global_max": gmax,
        "forbidden_size": bound,
        "holds": gmax < bound,
        "distribution": {str(s): c for s, c in sorted(Counter(maxima).items())},
        "alpha_O_max": maxima[alpha_O_code],
        "zero_form_max": maxima[0],
        "maxima": maxima,
    }


def conjecture_check_n4(threads: int | None = None) -> dict:
    return conjecture_check(4, threads)


def load_rows_fixture(path) -> VecSet:
    with open(path) as fh:
        return VecSet.from_text(fh.read())


def dump_certificate(result: MaxSetResult, alpha_name: str, **extra) -> str:
    cert = result.certificate(alpha_name)
    cert.update(extra)
    return json.dumps(cert)
