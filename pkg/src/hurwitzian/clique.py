"""Branch-and-bound maximum clique on bitset adjacency (greedy colouring bound).

Vertices are 0..k-1; ``adj[v]`` is an int whose bit u is set iff u ~ v.
"""
from __future__ import annotations

from dataclasses import dataclass


class BudgetExceeded(Exception):
    pass


@dataclass
class CliqueResult:
    clique: list[int]
    exact: bool
    nodes: int

    @property
    def size(self) -> int:
        return len(self.clique)


def _colour_sort(P: int, adj: list[int]):
    # vertices in colour-class order with their colour number (an upper bound)
    order, bounds = [], []
    U, k = P, 0
    while U:
        k += 1
        Q = U
        while Q:
            low = Q & -Q
            v = low.bit_length() - 1
            U &= ~low
            Q &= ~low & ~adj[v]
            order.append(v)
            bounds.append(k)
    return order, bounds


class _Search:
    def __init__(self, adj, budget, target=None):
        self.adj = adj
        self.budget = budget
        self.target = target
        self.nodes = 0
        self.best: list[int] = []
        self.R: list[int] = []

    def run(self, P: int, floor: int = 0):
        self._floor = floor
        self._expand(P)

    def _bound(self):
        return max(len(self.best), self._floor)

    def _expand(self, P: int):
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExceeded
        adj, R = self.adj, self.R
        order, bounds = _colour_sort(P, adj)
        for i in range(len(order) - 1, -1, -1):
            if len(R) + bounds[i] <= self._bound():
                return
            v = order[i]
            R.append(v)
            NP = P & adj[v]
            if NP:
                self._expand(NP)
            elif len(R) > self._bound():
                self.best = list(R)
            R.pop()
            if self.target is not None and len(self.best) >= self.target:
                return
            P &= ~(1 << v)


def max_clique(adj: list[int], budget: int | None = None, candidates: int | None = None) -> CliqueResult:
    """Maximum clique among ``candidates`` (default: all vertices)."""
    if candidates is None:
        candidates = (1 << len(adj)) - 1
    s = _Search(adj, budget)
    exact = True
    try:
        if candidates:
            s.run(candidates)
    except BudgetExceeded:
        exact = False
    return CliqueResult(sorted(s.best), exact, s.nodes)


def find_clique_of_size(adj: list[int], candidates: int, k: int, budget: int | None = None):
    """A clique of exactly ``k`` vertices inside ``candidates``, or None."""
    if k <= 0:
        return []
    if not candidates:
        return None
    s = _Search(adj, budget, target=k)
    s.run(candidates, floor=k - 1)
    return sorted(s.best[:k]) if len(s.best) >= k else None
