"""Vectors of F_2^n and Boolean cubic forms.

Vectors are plain ints whose low ``n`` bits hold the coordinates. Coordinate 1
is the most significant of those bits, so ``format(x, "0{n}b")`` reads the
coordinates left to right (``x_1 x_2 ... x_n``), and numeric order equals
lexicographic order of the binary strings.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import numpy as np

MAX_DIM = 64


def check_dim(n: int) -> int:
    if not isinstance(n, (int, np.integer)) or not 1 <= n <= MAX_DIM:
        raise ValueError(f"dimension must be an integer in 1..{MAX_DIM}, got {n!r}")
    return int(n)


def check_vec(x: int, n: int) -> int:
    if x < 0 or x >> n:
        raise ValueError(f"vector {x:#x} does not fit in dimension {n}")
    return x


def wt(x: int) -> int:
    """Hamming weight."""
    return x.bit_count()


def omega(n: int) -> int:
    return (1 << check_dim(n)) - 1


def basis(n: int, i: int) -> int:
    """The standard basis vector e_i, 1 <= i <= n."""
    check_dim(n)
    if not 1 <= i <= n:
        raise ValueError(f"basis index {i} out of range 1..{n}")
    return 1 << (n - i)


def index_mask(n: int, idx) -> int:
    m = 0
    for i in idx:
        m |= basis(n, i)
    return m


def mask_indices(n: int, mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(1, n + 1) if mask >> (n - i) & 1)


def to_bin(x: int, n: int) -> str:
    return format(x, f"0{n}b")


def from_bin(s: str, n: int | None = None) -> int:
    s = s.strip()
    if not s or set(s) - {"0", "1"}:
        raise ValueError(f"not a binary vector: {s!r}")
    if n is not None and len(s) != n:
        raise ValueError(f"expected {n} coordinates, got {len(s)} in {s!r}")
    return int(s, 2)


def to_hex(x: int) -> str:
    return format(x, "x")


def from_hex(s: str, n: int) -> int:
    return check_vec(int(s, 16), n)


def mobius(values: np.ndarray) -> np.ndarray:
    """Binary Moebius transform of a length-2^n 0/1 array (an involution).

    Maps ANF coefficients to the truth table and back.
    """
    out = np.array(values, dtype=np.uint8) & 1
    size = out.shape[0]
    n = size.bit_length() - 1
    if size != 1 << n:
        raise ValueError("length must be a power of two")
    for i in range(n):
        view = out.reshape(-1, 2, 1 << i)
        view[:, 1, :] ^= view[:, 0, :]
    return out


def _canonical_monomials(n: int, monomials) -> frozenset[tuple[int, ...]]:
    parity: dict[tuple[int, ...], int] = {}
    for mono in monomials:
        idx = tuple(sorted(set(int(i) for i in mono)))
        if not idx:
            raise ValueError("constant monomial is not allowed in a cubic form")
        if idx[0] < 1 or idx[-1] > n:
            raise ValueError(f"monomial {mono!r} has an index outside 1..{n}")
        if len(idx) > 3:
            raise ValueError(f"monomial {mono!r} has degree {len(idx)} > 3")
        parity[idx] = parity.get(idx, 0) ^ 1
    return frozenset(k for k, v in parity.items() if v)


@dataclass(frozen=True)
class CubicForm:
    """Boolean function of degree <= 3 without constant term, in ANF.

    ``monomials`` holds strictly increasing index tuples over 1..n. Input with
    repeated indices or repeated monomials is reduced (x_i^2 = x_i, then
    cancellation mod 2).
    """

    n: int
    monomials: frozenset

    def __init__(self, n: int, monomials=()):
        n = check_dim(n)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "monomials", _canonical_monomials(n, monomials))

    def __repr__(self):
        return f"CubicForm(n={self.n}, {self.to_text()!r})"

    def sorted_monomials(self) -> list[tuple[int, ...]]:
        return sorted(self.monomials, key=lambda m: (-len(m), m))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(index_mask(self.n, m) for m in self.sorted_monomials())

    @property
    def degree(self) -> int:
        return max((len(m) for m in self.monomials), default=0)

    def __call__(self, x: int) -> int:
        return eval_cubic(self, x)

    @cached_property
    def _table(self) -> np.ndarray:
        if self.n > 24:
            raise ValueError(f"truth table of a form on F_2^{self.n} is too large")
        anf = np.zeros(1 << self.n, dtype=np.uint8)
        for m in self.masks:
            anf[m] = 1
        table = mobius(anf)
        table.flags.writeable = False
        return table

    def truth_table(self) -> np.ndarray:
        """Values at every x in 0..2^n-1 (read-only uint8 array)."""
        return self._table

    def to_text(self) -> str:
        if not self.monomials:
            return "0"
        return "+".join("".join(f"x{i}" for i in m) for m in self.sorted_monomials())

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "monomials": [list(m) for m in self.sorted_monomials()]})

    @classmethod
    def from_json(cls, data) -> CubicForm:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["n"], [tuple(m) for m in data["monomials"]])

    @classmethod
    def from_text(cls, n: int, text: str) -> CubicForm:
        """Parse ``"x1x2x3+x1x2+x1"`` (or ``"1,2,3+1,2+1"``); ``"0"`` is the zero form."""
        text = text.replace(" ", "")
        if text in ("", "0"):
            return cls(n)
        monomials = []
        for term in text.split("+"):
            if re.fullmatch(r"(x\d+)+", term):
                monomials.append([int(i) for i in re.findall(r"\d+", term)])
            elif re.fullmatch(r"\d+(,\d+)*", term):
                monomials.append([int(i) for i in term.split(",")])
            else:
                raise ValueError(f"cannot parse monomial {term!r}")
        return cls(n, monomials)


def eval_cubic(form: CubicForm, x: int) -> int:
    check_vec(x, form.n)
    acc = 0
    for m in form.masks:
        if x & m == m:
            acc ^= 1
    return acc


def make_alpha_O(n: int) -> CubicForm:
    """All triples, pairs and singletons: the weight-mod-4 counting form."""
    n = check_dim(n)
    idx = range(1, n + 1)
    monos = [c for k in (1, 2, 3) for c in combinations(idx, k)]
    return CubicForm(n, monos)


def alpha_O_closed(x: int) -> int:
    return 0 if wt(x) % 4 == 0 else 1


def random_cubic(n: int, rng, density: float = 0.5) -> CubicForm:
    idx = range(1, n + 1)
    monos = [c for k in (1, 2, 3) for c in combinations(idx, k) if rng.random() < density]
    return CubicForm(n, monos)


def all_cubic_monomials(n: int) -> list[tuple[int, ...]]:
    idx = range(1, n + 1)
    return [c for k in (3, 2, 1) for c in combinations(idx, k)]
