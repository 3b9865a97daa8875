"""Sum-of-squares identities read off a twisted group algebra, and their exact check.

For coordinate sets A, B the product of a = sum a_x e_x and b = sum b_y e_y has
coefficients c_z = sum_{x+y=z} (-1)^f(x,y) a_x b_y. The identity
(sum a_x^2)(sum b_y^2) = sum c_z^2 holds as polynomials iff all cross terms of
the c_z^2 cancel, which ``verify_symbolic`` decides by full expansion.
"""
from __future__ import annotations

import json
import random
import re
from collections import defaultdict
from dataclasses import dataclass

from .gf2n import check_dim, from_bin, make_alpha_O, to_bin
from .hadamard import HadamardMatrix
from .polarization import TwistFn, twist_from_cubic
from .sets import VecSet, best_construction, hurwitzian_from_hadamard

DEFAULT_PRODUCT_BUDGET = 50_000_000


class ExpansionBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Identity:
    n: int
    A: tuple[int, ...]
    B: tuple[int, ...]
    terms: dict  # z -> list of (sign, x, y), sorted by (x, y)

    @property
    def size(self) -> tuple[int, int, int]:
        return (len(self.A), len(self.B), len(self.terms))

    def term_count(self) -> int:
        return sum(len(t) for t in self.terms.values())

    def to_dict(self) -> dict:
        n = self.n
        return {
            "size": list(self.size),
            "terms": {
                to_bin(z, n): [{"s": s, "x": to_bin(x, n), "y": to_bin(y, n)} for s, x, y in ts]
                for z, ts in sorted(self.terms.items())
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, data) -> Identity:
        if isinstance(data, str):
            data = json.loads(data)
        buckets = data["terms"]
        if not buckets:
            raise ValueError("identity has no terms")
        n = len(next(iter(buckets)))
        terms = {
            from_bin(z, n): [(int(t["s"]), from_bin(t["x"], n), from_bin(t["y"], n)) for t in ts]
            for z, ts in buckets.items()
        }
        ident = _assemble(n, terms)
        if "size" in data and tuple(data["size"]) != ident.size:
            raise ValueError(f"declared size {data['size']} does not match terms {ident.size}")
        return ident


def _assemble(n, terms) -> Identity:
    check_dim(n)
    A = sorted({x for ts in terms.values() for _, x, _ in ts})
    B = sorted({y for ts in terms.values() for _, _, y in ts})
    seen = set()
    clean = {}
    for z, ts in terms.items():
        for s, x, y in ts:
            if s not in (1, -1):
                raise ValueError(f"sign must be +-1, got {s}")
            if x ^ y != z:
                raise ValueError(f"term ({x}, {y}) filed under wrong bucket {z}")
            if (x, y) in seen:
                raise ValueError(f"pair ({x}, {y}) appears twice")
            seen.add((x, y))
        clean[z] = sorted(ts, key=lambda t: (t[1], t[2]))
    if len(seen) != len(A) * len(B):
        raise ValueError("terms do not cover A x B exactly once")
    return Identity(n, tuple(A), tuple(B), dict(sorted(clean.items())))


def build_identity(f: TwistFn, A, B) -> Identity:
    A = A.elems if isinstance(A, VecSet) else tuple(A)
    B = B.elems if isinstance(B, VecSet) else tuple(B)
    terms = defaultdict(list)
    for x in sorted(set(A)):
        for y in sorted(set(B)):
            terms[x ^ y].append((-1 if f(x, y) else 1, x, y))
    return Identity(f.n, tuple(sorted(set(A))), tuple(sorted(set(B))), dict(sorted(terms.items())))


def expansion_residual(ident: Identity, budget: int = DEFAULT_PRODUCT_BUDGET) -> dict:
    """Nonzero coefficients of sum_z c_z^2 - (sum a_x^2)(sum b_y^2).

    Monomials a_x a_x' b_y b_y' are keyed by ``((min x, max x), (min y, max y))``.
    """
    work = sum(len(ts) ** 2 for ts in ident.terms.values())
    if work > budget:
        raise ExpansionBudgetExceeded(f"{work} products exceed budget {budget}")
    poly = defaultdict(int)
    for ts in ident.terms.values():
        for s1, x1, y1 in ts:
            for s2, x2, y2 in ts:
                xa, xb = (x1, x2) if x1 <= x2 else (x2, x1)
                ya, yb = (y1, y2) if y1 <= y2 else (y2, y1)
                poly[(xa, xb, ya, yb)] += s1 * s2
    for x in ident.A:
        for y in ident.B:
            poly[(x, x, y, y)] -= 1
    return {k: v for k, v in poly.items() if v}


def verify_symbolic(ident: Identity, budget: int = DEFAULT_PRODUCT_BUDGET) -> bool:
    return not expansion_residual(ident, budget)


def identity_set(n: int, hadamard: HadamardMatrix | None = None) -> VecSet:
    if hadamard is not None:
        A = hurwitzian_from_hadamard(hadamard)
        if A.n != n:
            raise ValueError(f"Hadamard matrix of order {hadamard.m} gives dimension {A.n}, not {n}")
        return A
    return best_construction(n)


def hurwitz_radon_identity(n: int, hadamard: HadamardMatrix | None = None, max_n: int = 11) -> Identity:
    """[|A|, 2^n, 2^n] identity from the weight-mod-4 twist and the best known set A."""
    if n > max_n:
        raise ExpansionBudgetExceeded(f"n = {n} above max_n = {max_n}")
    f = twist_from_cubic(make_alpha_O(n))
    return build_identity(f, identity_set(n, hadamard), range(1 << n))


def mutate(ident: Identity, k: int = 1, seed: int = 0) -> Identity:
    """Flip the sign of k distinct randomly chosen terms."""
    rng = random.Random(seed)
    flat = [(z, i) for z, ts in ident.terms.items() for i in range(len(ts))]
    picks = set(rng.sample(flat, k))
    terms = {
        z: [(-s if (z, i) in picks else s, x, y) for i, (s, x, y) in enumerate(ts)]
        for z, ts in ident.terms.items()
    }
    return Identity(ident.n, ident.A, ident.B, terms)


def render_text(ident: Identity) -> str:
    n = ident.n
    lines = []
    for z, ts in ident.terms.items():
        parts = []
        for j, (s, x, y) in enumerate(ts):
            mono = f"a{to_bin(x, n)}*b{to_bin(y, n)}"
            if j == 0:
                parts.append(mono if s == 1 else f"-{mono}")
            else:
                parts.append(("+ " if s == 1 else "- ") + mono)
        lines.append(f"c{to_bin(z, n)} = " + " ".join(parts))
    return "\n".join(lines)


_TERM = re.compile(r"([+-]?)\s*a([01]+)\*b([01]+)")


def parse_text(text: str) -> Identity:
    terms = {}
    n = None
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        m = re.fullmatch(r"c([01]+)\s*=\s*(.+)", line)
        if not m:
            raise ValueError(f"cannot parse identity line {line!r}")
        zs, rhs = m.groups()
        n = n or len(zs)
        ts = []
        pos = 0
        for t in _TERM.finditer(rhs):
            if rhs[pos:t.start()].strip():
                raise ValueError(f"junk in {line!r}")
            pos = t.end()
            ts.append((-1 if t.group(1) == "-" else 1, from_bin(t.group(2), n), from_bin(t.group(3), n)))
        if rhs[pos:].strip() or not ts:
            raise ValueError(f"junk in {line!r}")
        terms[from_bin(zs, n)] = ts
    if n is None:
        raise ValueError("empty identity text")
    return _assemble(n, terms)
