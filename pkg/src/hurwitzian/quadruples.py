"""Additive quadruples x + x' + y + y' = 0 between two subsets of F_2^n."""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import asdict, dataclass, field

from .gf2n import CubicForm
from .sets import VecSet

RATIO_EXPONENT = 6 / 5


def _check(A: VecSet, B: VecSet):
    if A.n != B.n:
        raise ValueError(f"dimension mismatch: {A.n} vs {B.n}")


def pair_sum_histogram(X) -> Counter:
    """s -> number of unordered pairs {x, x'} of X with x + x' = s."""
    elems = X.elems if isinstance(X, VecSet) else tuple(X)
    return Counter(x ^ w for x, w in itertools.combinations(elems, 2))


def count_proper_quadruples(A: VecSet, B: VecSet, ordered: bool = False) -> int:
    """Proper quadruples, counted as pairs of unordered pairs (x4 when ``ordered``)."""
    _check(A, B)
    ha, hb = pair_sum_histogram(A), pair_sum_histogram(B)
    count = sum(m * hb[s] for s, m in ha.items() if s in hb)
    return 4 * count if ordered else count


def hypothesis_check(alpha: CubicForm, A: VecSet, B: VecSet) -> bool:
    _check(A, B)
    if alpha.n != A.n:
        raise ValueError("dimension mismatch between form and sets")
    hb = pair_sum_histogram(B)
    return all(alpha(s) for s in pair_sum_histogram(A) if s in hb)


@dataclass
class QuadrupleReport:
    n: int
    size_a: int
    size_b: int
    proper_count: int
    hypothesis_holds: bool
    sumset_size: int
    ratio: float
    swapped: bool = False
    notes: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return asdict(self)


def quadruple_report(alpha: CubicForm, A: VecSet, B: VecSet, precision: int = 6) -> QuadrupleReport:
    """Counts and the informational ratio |A+B| / |A|^(6/5); nothing is asserted about it."""
    _check(A, B)
    notes = []
    swapped = len(A) > len(B)
    if swapped:
        A, B = B, A
        notes.append("swapped A and B so that |A| <= |B|")
    if len(A) != len(B):
        notes.append("|A| != |B|: the [r, r, N] identity argument assumes equal sizes")
    sumset = len(A.sumset(B))
    return QuadrupleReport(
        n=A.n,
        size_a=len(A),
        size_b=len(B),
        proper_count=count_proper_quadruples(A, B),
        hypothesis_holds=hypothesis_check(alpha, A, B),
        sumset_size=sumset,
        ratio=round(sumset / len(A) ** RATIO_EXPONENT, precision),
        swapped=swapped,
        notes=notes,
    )
