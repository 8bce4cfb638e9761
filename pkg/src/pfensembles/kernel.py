"""Finite-window Pfaffian ensemble: matrix Pf(J+L), the correlation
kernel K = J + (J+L)^(-1), Pfaffian correlation functions, and an
exhaustive brute-force oracle.

The window restriction is treated as an exact finite L-ensemble in its
own right, so every identity here is tested with zero tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .exact import AlgebraicScalar
from .ensemble import (
    DOUBLEPRIME,
    PRIME,
    HSpec,
    SkewMatrix,
    l_entry,
    pfaffian,
    pfaffian_elimination,
)
from .lattice import HalfInt

EXACT_WINDOW_MAX_POINTS = 12


class SingularMatrixError(ZeroDivisionError):
    """J+L is not invertible over the extension field."""


@dataclass(frozen=True)
class Window:
    """All lattice points with |x| <= radius (radius a positive half-integer)."""

    radius: HalfInt

    def __post_init__(self):
        if self.radius.twice <= 0:
            raise ValueError("window radius must be positive")

    @property
    def points(self) -> tuple:
        r = self.radius.twice
        return tuple(HalfInt(t) for t in range(-r, r + 1, 2))

    def __len__(self):
        return len(self.points)


def _window_labels(w: Window):
    labels = []
    for x in w.points:
        labels.append((x, PRIME))
        labels.append((x, DOUBLEPRIME))
    return labels


def assemble_full_L(spec: HSpec, w: Window) -> SkewMatrix:
    if len(w) > EXACT_WINDOW_MAX_POINTS:
        raise ValueError("window too large for the exact path")
    labels = _window_labels(w)
    return SkewMatrix(
        labels, spec.base, lambda i, j: l_entry(spec, labels[i], labels[j])
    )


def assemble_J(w: Window, base: Fraction) -> SkewMatrix:
    labels = _window_labels(w)
    one = AlgebraicScalar.one(base)
    zero = AlgebraicScalar.zero(base)

    def entry(i, j):
        # unit 2x2 symplectic block on the diagonal of the block structure
        return one if (j == i + 1 and i % 2 == 0) else zero

    return SkewMatrix(labels, base, entry)


def _j_plus_l(spec: HSpec, w: Window) -> SkewMatrix:
    L = assemble_full_L(spec, w)
    J = assemble_J(w, spec.base)
    return SkewMatrix(
        L.labels, spec.base, lambda i, j: L.rows[i][j] + J.rows[i][j]
    )


def pf_matrix_J_plus_L(spec: HSpec, w: Window) -> AlgebraicScalar:
    """Pfaffian of the finite matrix J+L (equals the subset expansion)."""
    m = _j_plus_l(spec, w)
    return pfaffian_elimination(m.rows, spec.base)


def invert(rows, base: Fraction):
    """Matrix inverse over the extension field, first-nonzero pivoting."""
    n = len(rows)
    m = [list(r) for r in rows]
    zero = AlgebraicScalar.zero(base)
    one = AlgebraicScalar.one(base)
    inv = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if not m[r][col].is_zero()), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular over the exact field")
        m[col], m[piv] = m[piv], m[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        f = m[col][col].inv()
        m[col] = [v * f for v in m[col]]
        inv[col] = [v * f for v in inv[col]]
        for r in range(n):
            if r == col or m[r][col].is_zero():
                continue
            g = m[r][col]
            m[r] = [v - g * w_ for v, w_ in zip(m[r], m[col])]
            inv[r] = [v - g * w_ for v, w_ in zip(inv[r], inv[col])]
    return inv


def kernel_K(spec: HSpec, w: Window) -> SkewMatrix:
    """K = J + (J+L)^(-1); skew-symmetry is checked on construction."""
    jl = _j_plus_l(spec, w)
    inv = invert(jl.rows, spec.base)
    J = assemble_J(w, spec.base)
    n = len(inv)
    k_rows = [
        [J.rows[i][j] + inv[i][j] for j in range(n)] for i in range(n)
    ]
    for i in range(n):
        for j in range(i, n):
            if not (k_rows[i][j] + k_rows[j][i]).is_zero():
                raise AssertionError("kernel matrix is not skew-symmetric")
    K = SkewMatrix(jl.labels, spec.base, lambda i, j: k_rows[i][j])
    return K


def rho_pfaffian(K: SkewMatrix, w: Window, X: Sequence[HalfInt]) -> AlgebraicScalar:
    """Correlation value Pf of the 2|X| x 2|X| block submatrix of K."""
    pts = sorted(X)
    index = {x: i for i, x in enumerate(w.points)}
    rowsel = []
    for x in pts:
        if x not in index:
            raise ValueError(f"point {x} outside the window")
        rowsel.extend((2 * index[x], 2 * index[x] + 1))
    sub = [[K.rows[r][c] for c in rowsel] for r in rowsel]
    return pfaffian_expansion_or_elim(sub, K.base)


def pfaffian_expansion_or_elim(rows, base):
    from .ensemble import EXPANSION_MAX_DIM, pfaffian_expansion

    if len(rows) <= EXPANSION_MAX_DIM:
        return pfaffian_expansion(rows, base)
    return pfaffian_elimination(rows, base)


class SubsetExpansion:
    """All subset Pfaffians of one window, computed once and reused."""

    def __init__(self, spec: HSpec, w: Window):
        from .ensemble import l_submatrix

        self.spec = spec
        self.window = w
        self.pf_by_subset = {}
        pts = w.points
        for k in range(len(pts) + 1):
            for sub in combinations(pts, k):
                self.pf_by_subset[frozenset(sub)] = pfaffian(l_submatrix(spec, sub))
        self._norm = None

    def total(self) -> AlgebraicScalar:
        return sum(
            self.pf_by_subset.values(), AlgebraicScalar.zero(self.spec.base)
        )

    def rho(self, X: Sequence[HalfInt]) -> AlgebraicScalar:
        fixed = frozenset(X)
        if not fixed.issubset(self.window.points):
            raise ValueError("points outside the window")
        total = AlgebraicScalar.zero(self.spec.base)
        for sub, pf in self.pf_by_subset.items():
            if fixed.issubset(sub):
                total = total + pf
        if self._norm is None:
            self._norm = pf_matrix_J_plus_L(self.spec, self.window)
        return total / self._norm


@lru_cache(maxsize=8)
def _subset_expansion(spec: HSpec, w: Window) -> SubsetExpansion:
    return SubsetExpansion(spec, w)


def rho_bruteforce(spec: HSpec, w: Window, X: Sequence[HalfInt]) -> AlgebraicScalar:
    """Sum of Pf L(Y|Y) over all window subsets Y containing X, normalized
    by the matrix Pfaffian of J+L."""
    return _subset_expansion(spec, w).rho(X)
