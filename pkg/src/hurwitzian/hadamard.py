"""Hadamard matrices (Sylvester, Paley I) and the +/- row text format."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class HadamardMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        m = len(rows)
        if any(len(r) != m for r in rows):
            raise ValueError("Hadamard matrix must be square")
        if any(v not in (1, -1) for r in rows for v in r):
            raise ValueError("entries must be +1 or -1")
        if not (m in (1, 2) or m % 4 == 0):
            raise ValueError(f"no Hadamard matrix of order {m}")
        H = self.array()
        if not np.array_equal(H @ H.T, m * np.eye(m, dtype=np.int64)):
            raise ValueError("H H^T != m I")

    @property
    def m(self) -> int:
        return len(self.rows)

    def array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64).reshape(len(self.rows), -1)

    def normalized(self) -> HadamardMatrix:
        """Negate every row whose first entry is -1."""
        return HadamardMatrix(tuple(r if r[0] == 1 else tuple(-v for v in r) for r in self.rows))

    def to_text(self) -> str:
        return "\n".join("".join("+" if v == 1 else "-" for v in r) for r in self.rows)

    @classmethod
    def from_text(cls, text: str) -> HadamardMatrix:
        rows = []
        for line in text.splitlines():
            line = line.split("#", 1)[0].replace(" ", "")
            if not line:
                continue
            if set(line) - {"+", "-"}:
                raise ValueError(f"bad Hadamard row {line!r}")
            rows.append(tuple(1 if ch == "+" else -1 for ch in line))
        return cls(tuple(rows))


def hadamard_sylvester(k: int) -> HadamardMatrix:
    if k < 0:
        raise ValueError("k must be >= 0")
    H = np.array([[1]], dtype=np.int64)
    for _ in range(k):
        H = np.block([[H, H], [H, -H]])
    return HadamardMatrix(tuple(map(tuple, H.tolist())))


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % d for d in range(2, int(q ** 0.5) + 1))


def hadamard_paley(q: int) -> HadamardMatrix:
    """Paley type I matrix of order q + 1 for a prime q = 3 (mod 4)."""
    if not _is_prime(q) or q % 4 != 3:
        raise ValueError(f"Paley I needs a prime q = 3 mod 4, got {q}")
    squares = {(i * i) % q for i in range(1, q)}

    def chi(a):
        a %= q
        return 0 if a == 0 else (1 if a in squares else -1)

    m = q + 1
    S = np.zeros((m, m), dtype=np.int64)
    S[0, 1:] = 1
    S[1:, 0] = -1
    for i in range(q):
        for j in range(q):
            S[i + 1, j + 1] = chi(j - i)
    H = S + np.eye(m, dtype=np.int64)
    return HadamardMatrix(tuple(map(tuple, H.tolist())))


def parse_hadamard_spec(name: str) -> HadamardMatrix:
    """``"paley11"`` / ``"sylvester2"`` shorthands used by the CLI."""
    if name.startswith("paley"):
        return hadamard_paley(int(name[5:]))
    if name.startswith("sylvester"):
        return hadamard_sylvester(int(name[9:]))
    raise ValueError(f"unknown Hadamard matrix {name!r}")
