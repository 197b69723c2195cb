"""
Goeritz matrices for the twisted torus knots T(3, 3k+1; 2m), exact congruence
diagonalization, and signatures via the Gordon-Litherland correction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

Number = int | Fraction


class SymIntMatrix:
    """A symmetric matrix with exact rational entries."""

    __slots__ = ('rows',)

    def __init__(self, rows: Sequence[Sequence[Number]]):
        d = len(rows)
        if any(len(r) != d for r in rows):
            raise ValueError('matrix must be square')
        conv = tuple(tuple(Fraction(x) for x in r) for r in rows)
        for i in range(d):
            for j in range(i + 1, d):
                if conv[i][j] != conv[j][i]:
                    raise ValueError(f'matrix is not symmetric at ({i}, {j})')
        self.rows = conv

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        return self.rows[ij[0]][ij[1]]

    def __eq__(self, other) -> bool:
        if isinstance(other, SymIntMatrix):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.rows)

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.rows]

    def to_ints(self) -> list[list[int]]:
        out = []
        for r in self.rows:
            if any(x.denominator != 1 for x in r):
                raise ValueError('matrix has non-integer entries')
            out.append([int(x) for x in r])
        return out

    def delete(self, k: int) -> SymIntMatrix:
        """Drop row and column k."""
        return SymIntMatrix([[x for j, x in enumerate(r) if j != k]
                             for i, r in enumerate(self.rows) if i != k])

    def dump(self) -> str:
        """One row per line, space separated, integers bare and fractions as p/q."""
        return '\n'.join(' '.join(str(x) for x in r) for r in self.rows)

    @classmethod
    def parse(cls, text: str) -> SymIntMatrix:
        return cls([[Fraction(tok) for tok in line.split()]
                    for line in text.strip().splitlines() if line.strip()])

    def __repr__(self) -> str:
        return f'SymIntMatrix({self.dump()!r})'


@dataclass(frozen=True)
class Inertia:
    n_pos: int
    n_neg: int
    n_zero: int

    @property
    def signature(self) -> int:
        return self.n_pos - self.n_neg

    @property
    def dim(self) -> int:
        return self.n_pos + self.n_neg + self.n_zero


def congruence_diagonalize(m: SymIntMatrix) -> tuple[list[Fraction], list[list[Fraction]]]:
    """
    Simultaneous row/column reduction to diagonal form.

    Returns the diagonal and a nonsingular S with S M S^T = diag. A zero pivot whose row is
    not zero is repaired first by swapping in a later nonzero diagonal entry, or else by
    adding a later row and column with a nonzero off-diagonal entry to the pivot row and column.
    """
    d = m.dim
    a = [list(r) for r in m.rows]
    s = [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]

    def swap(i, j):
        a[i], a[j] = a[j], a[i]
        for r in a:
            r[i], r[j] = r[j], r[i]
        s[i], s[j] = s[j], s[i]

    def add(dst, src, c):
        # row_dst += c row_src, then col_dst += c col_src
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        for r in a:
            r[dst] += c * r[src]
        s[dst] = [x + c * y for x, y in zip(s[dst], s[src])]

    for r in range(d):
        if a[r][r] == 0:
            j = next((j for j in range(r + 1, d) if a[j][j] != 0), None)
            if j is not None:
                swap(r, j)
            else:
                j = next((j for j in range(r + 1, d) if a[r][j] != 0), None)
                if j is None:
                    continue
                add(r, j, Fraction(1))
        piv = a[r][r]
        for i in range(r + 1, d):
            if a[i][r] != 0:
                add(i, r, -a[i][r] / piv)
    return [a[i][i] for i in range(d)], s


def inertia(m: SymIntMatrix | Sequence[Sequence[Number]]) -> Inertia:
    """
    >>> inertia([[-1, 0, 0], [0, -1, 0], [0, 0, 1]])
    Inertia(n_pos=1, n_neg=2, n_zero=0)
    """
    if not isinstance(m, SymIntMatrix):
        m = SymIntMatrix(m)
    diag, _ = congruence_diagonalize(m)
    return Inertia(sum(1 for x in diag if x > 0),
                   sum(1 for x in diag if x < 0),
                   sum(1 for x in diag if x == 0))


def signature(m: SymIntMatrix | Sequence[Sequence[Number]]) -> int:
    return inertia(m).signature


# ---------------------------------------------------------------------------
# The twisted torus family


@dataclass(frozen=True)
class GoeritzData:
    full: SymIntMatrix     # includes the unbounded white region as index 0
    reduced: SymIntMatrix  # row and column 0 deleted
    mu: int                # correction term: sum of eta over type II crossings


def goeritz_family_matrix(k: int, m: int) -> GoeritzData:
    """
    Goeritz data for T(3, q; 2m) with q = 3k+1, from the checkerboard surface on the braid
    (sigma_2 sigma_1)^q (sigma_1)^{2m}. Regions X_1..X_{q-1} meet X_0 once, X_q meets X_0 in
    2m+1 crossings, and X_i, X_j share one sigma_2 crossing iff i - j = +-1 mod q.
    """
    if k < 1 or m < 0:
        raise ValueError(f'need k >= 1 and m >= 0, got k={k}, m={m}')
    q = 3 * k + 1
    g = [[0] * (q + 1) for _ in range(q + 1)]
    for i in range(1, q):
        g[0][i] = g[i][0] = -1
    g[0][q] = g[q][0] = -(2 * m + 1)
    for i in range(1, q + 1):
        for j in range(1, q + 1):
            if i != j and (i - j) % q in (1, q - 1):
                g[i][j] = 1
    for i in range(q + 1):
        g[i][i] = -sum(g[i][j] for j in range(q + 1) if j != i)
    full = SymIntMatrix(g)
    return GoeritzData(full, full.delete(0), q + 2 * m)


def _pn_matrix(l: int, eps: Number, corner: int) -> SymIntMatrix:
    if l < 1:
        raise ValueError(f'need l >= 1, got {l}')
    q = 3 * l + 1
    g = [[0] * q for _ in range(q)]
    for i in range(q):
        g[i][i] = -1
        if i + 1 < q:
            g[i][i + 1] = g[i + 1][i] = 1
    g[q - 1][q - 1] = eps
    g[0][q - 1] = g[q - 1][0] = corner
    return SymIntMatrix(g)


def make_P(l: int, eps: Number) -> SymIntMatrix:
    """(3l+1)-square: -1 diagonal except eps last, +1 on the off-diagonals and both corners."""
    return _pn_matrix(l, eps, 1)


def make_N(l: int, eps: Number) -> SymIntMatrix:
    """As make_P but with -1 in the two corner entries."""
    return _pn_matrix(l, eps, -1)


B_BLOCK = SymIntMatrix([[-1, 0, 0], [0, -1, 0], [0, 0, 1]])


@dataclass(frozen=True)
class PNReduction:
    blocks: int            # number of 3x3 diag(-1, -1, 1) blocks split off
    tail: Fraction         # the remaining 1x1 entry
    chain: tuple[str, ...]  # e.g. ('P3', 'N2', 'P1')

    def diagonal(self) -> list[Fraction]:
        return [Fraction(-1), Fraction(-1), Fraction(1)] * self.blocks + [self.tail]

    def inertia(self) -> Inertia:
        return inertia([[x if i == j else 0 for j, _ in enumerate(self.diagonal())]
                        for i, x in enumerate(self.diagonal())])


def pn_reduce(l: int, eps: Number, kind: Literal['P', 'N']) -> PNReduction:
    """
    Follow P_l ~ B + N_{l-1} and N_l ~ B + P_{l-1} down to P_1 ~ B + (eps - 2) or
    N_1 ~ B + (eps + 2).
    """
    if l < 1:
        raise ValueError(f'need l >= 1, got {l}')
    if kind not in ('P', 'N'):
        raise ValueError(f"kind must be 'P' or 'N', got {kind!r}")
    chain = []
    cur = kind
    for i in range(l, 0, -1):
        chain.append(f'{cur}{i}')
        if i > 1:
            cur = 'N' if cur == 'P' else 'P'
    tail = Fraction(eps) - 2 if cur == 'P' else Fraction(eps) + 2
    return PNReduction(l, tail, tuple(chain))


def signature_closed_form(k: int, m: int) -> int:
    """Signature of T(3, 3k+1; 2m): -4k-2m-2 if k is odd and m is 0 or 1, else -4k-2m."""
    if k < 1 or m < 0:
        raise ValueError(f'need k >= 1 and m >= 0, got k={k}, m={m}')
    if k % 2 == 1 and m in (0, 1):
        return -4 * k - 2 * m - 2
    return -4 * k - 2 * m


def signature_gordon_litherland(k: int, m: int) -> int:
    """sign(G) - mu with G the reduced Goeritz matrix."""
    data = goeritz_family_matrix(k, m)
    return signature(data.reduced) - data.mu


def twisted_torus_signature(k_param: int, m: int) -> int:
    """Signature of T(3, k_param; 2m) for any admissible k_param, via the standard form."""
    from .braidcore import standard_form
    kp, mm = standard_form(k_param, m)
    return signature_gordon_litherland((kp - 1) // 3, mm)
