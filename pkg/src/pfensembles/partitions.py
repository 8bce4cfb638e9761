"""Partitions, conjugation, doubling, Frobenius coordinates, enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

ENUMERATION_CAP = 40


@dataclass(frozen=True)
class Partition:
    """A partition: weakly decreasing sequence of positive integers."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError("partition parts must be positive")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("partition parts must be weakly decreasing")
        object.__setattr__(self, "parts", parts)

    @staticmethod
    def of(*parts) -> "Partition":
        return Partition(tuple(parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")" if self.parts else "()"

    def boxes(self):
        """All boxes (i, j) of the diagram, 1-based."""
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield i, j

    def conjugate(self) -> "Partition":
        """Transposed diagram: column lengths become rows."""
        if not self.parts:
            return self
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(tuple(cols))

    def double_union(self) -> "Partition":
        """The diagram with every part duplicated adjacently."""
        doubled = []
        for p in self.parts:
            doubled.extend((p, p))
        return Partition(tuple(doubled))

    def frobenius(self) -> "FrobeniusCoords":
        """Arm/leg lengths of the diagonal boxes: P_i = mu_i - i, Q_i = mu'_i - i."""
        conj = self.conjugate().parts
        p, q = [], []
        for i, part in enumerate(self.parts, start=1):
            if part < i:
                break
            p.append(part - i)
            q.append(conj[i - 1] - i)
        return FrobeniusCoords(tuple(p), tuple(q))

    def to_json_obj(self) -> list:
        return list(self.parts)

    @staticmethod
    def from_json_obj(obj: Sequence[int]) -> "Partition":
        return Partition(tuple(obj))


EMPTY = Partition(())


@dataclass(frozen=True)
class FrobeniusCoords:
    """Frobenius coordinates (P_1,...,P_D | Q_1,...,Q_D)."""

    P: tuple
    Q: tuple

    def __post_init__(self):
        P = tuple(int(v) for v in self.P)
        Q = tuple(int(v) for v in self.Q)
        if len(P) != len(Q):
            raise ValueError("P and Q must have equal length")
        for seq in (P, Q):
            if any(v < 0 for v in seq):
                raise ValueError("Frobenius coordinates must be nonnegative")
            if any(seq[i] <= seq[i + 1] for i in range(len(seq) - 1)):
                raise ValueError("Frobenius coordinates must strictly decrease")
        object.__setattr__(self, "P", P)
        object.__setattr__(self, "Q", Q)

    @property
    def diagonal(self) -> int:
        return len(self.P)

    @property
    def size(self) -> int:
        return sum(self.P) + sum(self.Q) + self.diagonal

    def to_partition(self) -> Partition:
        d = self.diagonal
        rows = [self.P[i] + i + 1 for i in range(d)]
        # extend with the column counts below the diagonal
        extra_rows = max((self.Q[i] + i + 1 for i in range(d)), default=0)
        parts = []
        for i in range(extra_rows):
            if i < d:
                parts.append(rows[i])
            else:
                parts.append(sum(1 for j in range(d) if self.Q[j] + j + 1 > i))
        return Partition(tuple(p for p in parts if p > 0))


def from_frobenius(coords: FrobeniusCoords) -> Partition:
    return coords.to_partition()


def partitions_of(n: int, cap: int = ENUMERATION_CAP) -> Iterator[Partition]:
    """All partitions of n in lexicographically decreasing order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > cap:
        raise ValueError(f"enumeration cap exceeded: {n} > {cap}")

    def gen(remaining, max_part):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, max_part), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    for parts in gen(n, n):
        yield Partition(parts)


def partitions_up_to(max_size: int, cap: int = ENUMERATION_CAP) -> Iterator[Partition]:
    for n in range(max_size + 1):
        yield from partitions_of(n, cap=cap)
