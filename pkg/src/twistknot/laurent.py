"""
Exact integer Laurent polynomials in one variable t, and square matrices over them.

A LaurentPoly stores a dense coefficient tuple starting at its lowest exponent, so
``t^-1 + 2 + t^3`` is ``LaurentPoly((1, 2, 0, 0, 1), low=-1)``. Coefficients are Python
ints, so nothing ever overflows.
"""

from __future__ import annotations

import functools
import itertools
import threading
from dataclasses import dataclass
from typing import Iterable, Sequence


class InexactDivision(ArithmeticError):
    """Raised when a Laurent polynomial division leaves a nonzero remainder."""


@dataclass(frozen=True, init=False)
class LaurentPoly:
    """
    An integer Laurent polynomial in t.

    >>> t = LaurentPoly.t()
    >>> (1 - t) * (1 + t)
    LaurentPoly('1 - t^2')
    """
    coeffs: tuple[int, ...]
    low: int

    def __init__(self, coeffs: Iterable[int] = (), low: int = 0):
        c = list(coeffs)
        start = 0
        while start < len(c) and c[start] == 0:
            start += 1
        end = len(c)
        while end > start and c[end - 1] == 0:
            end -= 1
        object.__setattr__(self, 'coeffs', tuple(int(x) for x in c[start:end]))
        object.__setattr__(self, 'low', low + start if end > start else 0)

    @classmethod
    def t(cls, k: int = 1) -> LaurentPoly:
        return cls((1,), k)

    @classmethod
    def monomial(cls, coeff: int, k: int) -> LaurentPoly:
        return cls((coeff,), k)

    @classmethod
    def from_dict(cls, terms: dict[int, int]) -> LaurentPoly:
        terms = {k: v for k, v in terms.items() if v}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls([terms.get(k, 0) for k in range(lo, hi + 1)], lo)

    @classmethod
    def coerce(cls, x: int | LaurentPoly) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        return cls((x,), 0)

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def high(self) -> int:
        """Highest exponent present. Undefined (returns low - 1) for zero."""
        return self.low + len(self.coeffs) - 1

    def degree_span(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> int:
        i = k - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def terms(self) -> list[tuple[int, int]]:
        """Nonzero (exponent, coefficient) pairs in increasing exponent order."""
        return [(self.low + i, c) for i, c in enumerate(self.coeffs) if c]

    def exponents(self) -> list[int]:
        return [k for k, _ in self.terms()]

    def is_polynomial(self) -> bool:
        return self.is_zero() or self.low >= 0

    def eval_at_zero(self) -> int:
        if self.low > 0 or self.is_zero():
            return 0
        if self.low < 0:
            raise ValueError(f'{self} has negative powers of t; cannot evaluate at 0')
        return self.coeffs[0]

    def __call__(self, value):
        """Evaluate at a number (Fraction for negative exponents)."""
        total = 0
        for k, c in self.terms():
            total += c * value**k
        return total

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by t^k."""
        if self.is_zero():
            return self
        return LaurentPoly(self.coeffs, self.low + k)

    def reverse(self) -> LaurentPoly:
        """Substitute t -> 1/t."""
        if self.is_zero():
            return self
        return LaurentPoly(reversed(self.coeffs), -self.high)

    def substitute_power(self, n: int) -> LaurentPoly:
        """Substitute t -> t^n for n >= 1."""
        return LaurentPoly.from_dict({n * k: c for k, c in self.terms()})

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: int | LaurentPoly) -> LaurentPoly:
        other = LaurentPoly.coerce(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.low - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.low - lo + i] += c
        return LaurentPoly(out, lo)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly([-c for c in self.coeffs], self.low)

    def __sub__(self, other: int | LaurentPoly) -> LaurentPoly:
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other: int | LaurentPoly) -> LaurentPoly:
        return LaurentPoly.coerce(other) + (-self)

    def __mul__(self, other: int | LaurentPoly) -> LaurentPoly:
        other = LaurentPoly.coerce(other)
        if self.is_zero() or other.is_zero():
            return LaurentPoly()
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return LaurentPoly(out, self.low + other.low)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if len(self.coeffs) == 1 and abs(self.coeffs[0]) == 1:
                return LaurentPoly((self.coeffs[0] ** (-n),), self.low * n)
            raise ValueError('only units may be raised to negative powers')
        result = LaurentPoly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.coerce(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs and self.low == other.low

    def __hash__(self) -> int:
        return hash((self.coeffs, self.low))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"LaurentPoly('{render(self)}')"


def render(p: LaurentPoly, var: str = 't') -> str:
    """
    Render in ascending powers with explicit signs.

    >>> render(LaurentPoly((1, -1, 0, 1, 0, -1, 1)))
    '1 - t + t^3 - t^5 + t^6'
    """
    if p.is_zero():
        return '0'
    parts = []
    for k, c in p.terms():
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f'{var}^{k}'
            body = mono if mag == 1 else f'{mag}{mono}'
        if not parts:
            parts.append(body if c > 0 else f'-{body}')
        else:
            parts.append(f'+ {body}' if c > 0 else f'- {body}')
    return ' '.join(parts)


def divmod_poly(a: LaurentPoly, b: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Long division of a by b after clearing both to ordinary polynomials; integer quotient only."""
    if b.is_zero():
        raise ZeroDivisionError('division by the zero polynomial')
    if a.is_zero():
        return LaurentPoly(), LaurentPoly()
    # Work with a * t^-a.low and b * t^-b.low, then restore the shift.
    num = list(a.coeffs)
    den = b.coeffs
    lead = den[-1]
    shift = a.low - b.low
    if len(num) < len(den):
        return LaurentPoly(), a
    quot = [0] * (len(num) - len(den) + 1)
    for i in range(len(quot) - 1, -1, -1):
        top = num[i + len(den) - 1]
        if top == 0:
            continue
        if top % lead:
            raise InexactDivision(f'leading coefficient {lead} does not divide {top}')
        qc = top // lead
        quot[i] = qc
        for j, d in enumerate(den):
            num[i + j] -= qc * d
    return LaurentPoly(quot, shift), LaurentPoly(num, a.low)


def exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """
    Quotient q with q * b == a, raising InexactDivision otherwise.

    >>> t = LaurentPoly.t()
    >>> exact_div(1 - t**3, 1 - t)
    LaurentPoly('1 + t + t^2')
    """
    try:
        q, r = divmod_poly(a, b)
    except InexactDivision as exc:
        raise InexactDivision(f'{b} does not divide {a}') from exc
    if not r.is_zero():
        raise InexactDivision(f'{b} does not divide {a} (remainder {r})')
    return q


_cyclo_lock = threading.Lock()
_cyclo_cache: dict[int, LaurentPoly] = {}


def cyclotomic(n: int) -> LaurentPoly:
    """
    The n-th cyclotomic polynomial, by dividing t^n - 1 by phi_d for the proper divisors d.

    >>> cyclotomic(12)
    LaurentPoly('1 - t^2 + t^4')
    """
    if n < 1:
        raise ValueError('cyclotomic index must be positive')
    with _cyclo_lock:
        hit = _cyclo_cache.get(n)
    if hit is not None:
        return hit
    num = LaurentPoly.t(n) - 1
    for d in divisors(n)[:-1]:
        num = exact_div(num, cyclotomic(d))
    with _cyclo_lock:
        _cyclo_cache[n] = num
    return num


@functools.lru_cache(maxsize=None)
def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def geometric(n: int) -> LaurentPoly:
    """1 + t + ... + t^(n-1)."""
    return LaurentPoly([1] * n)


# ---------------------------------------------------------------------------
# Matrices


class PolyMatrix:
    """A square matrix over LaurentPoly. Treated as immutable once built."""

    __slots__ = ('rows',)

    def __init__(self, rows: Sequence[Sequence[int | LaurentPoly]]):
        d = len(rows)
        if any(len(r) != d for r in rows):
            raise ValueError('PolyMatrix must be square')
        self.rows = tuple(tuple(LaurentPoly.coerce(x) for x in r) for r in rows)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, d: int) -> PolyMatrix:
        return cls([[1 if i == j else 0 for j in range(d)] for i in range(d)])

    @classmethod
    def scalar(cls, d: int, p: LaurentPoly) -> PolyMatrix:
        return cls([[p if i == j else 0 for j in range(d)] for i in range(d)])

    def __getitem__(self, ij: tuple[int, int]) -> LaurentPoly:
        i, j = ij
        return self.rows[i][j]

    def _check(self, other: PolyMatrix):
        if self.dim != other.dim:
            raise ValueError(f'dimension mismatch: {self.dim} vs {other.dim}')

    def __add__(self, other: PolyMatrix) -> PolyMatrix:
        self._check(other)
        return PolyMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: PolyMatrix) -> PolyMatrix:
        self._check(other)
        return PolyMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> PolyMatrix:
        return PolyMatrix([[-a for a in r] for r in self.rows])

    def __mul__(self, other: PolyMatrix | LaurentPoly | int) -> PolyMatrix:
        if not isinstance(other, PolyMatrix):
            c = LaurentPoly.coerce(other)
            return PolyMatrix([[a * c for a in r] for r in self.rows])
        self._check(other)
        d = self.dim
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for col in cols:
                acc = LaurentPoly()
                for a, b in zip(r, col):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(out)

    def __rmul__(self, other: LaurentPoly | int) -> PolyMatrix:
        return self * other

    def __pow__(self, n: int) -> PolyMatrix:
        if n < 0:
            raise ValueError('negative matrix powers are not supported')
        result = PolyMatrix.identity(self.dim)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def trace(self) -> LaurentPoly:
        return sum((self.rows[i][i] for i in range(self.dim)), LaurentPoly())

    def det(self) -> LaurentPoly:
        return determinant(self.rows)

    def eval_at_zero(self) -> list[list[int]]:
        return [[a.eval_at_zero() for a in r] for r in self.rows]

    def submatrix(self, idx: Sequence[int]) -> PolyMatrix:
        return PolyMatrix([[self.rows[i][j] for j in idx] for i in idx])

    def __str__(self) -> str:
        return '\n'.join('[' + ', '.join(str(a) for a in r) + ']' for r in self.rows)

    def __repr__(self) -> str:
        return f'PolyMatrix({[[str(a) for a in r] for r in self.rows]})'


def determinant(rows: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Cofactor expansion up to 4x4, fraction-free Bareiss elimination beyond."""
    d = len(rows)
    if d == 0:
        return LaurentPoly((1,))
    if d <= 4:
        return _cofactor_det([list(r) for r in rows])
    return _bareiss_det([list(r) for r in rows])


def _cofactor_det(m: list[list[LaurentPoly]]) -> LaurentPoly:
    d = len(m)
    if d == 1:
        return m[0][0]
    if d == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = LaurentPoly()
    for j, a in enumerate(m[0]):
        if a.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = a * _cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _bareiss_det(m: list[list[LaurentPoly]]) -> LaurentPoly:
    d = len(m)
    sign = 1
    prev = LaurentPoly((1,))
    for k in range(d - 1):
        if m[k][k].is_zero():
            for r in range(k + 1, d):
                if not m[r][k].is_zero():
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly()
        for i in range(k + 1, d):
            for j in range(k + 1, d):
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev)
        prev = m[k][k]
    return m[d - 1][d - 1] * sign


def char_poly(m: PolyMatrix) -> list[LaurentPoly]:
    """
    Coefficients [1, a_1, ..., a_d] of det(I - x M) as a polynomial in x.

    a_j is (-1)^j times the sum of the j x j principal minors, so a_1 = -trace(M)
    and a_d = (-1)^d det(M).
    """
    d = m.dim
    out = [LaurentPoly((1,))]
    for j in range(1, d + 1):
        e = LaurentPoly()
        for idx in itertools.combinations(range(d), j):
            e = e + m.submatrix(idx).det()
        out.append(e if j % 2 == 0 else -e)
    return out


def char_poly_monic(m: PolyMatrix) -> list[LaurentPoly]:
    """
    Coefficients of det(x I - M) in increasing powers of x, obtained from char_poly by
    reversing the coefficient list.
    """
    return list(reversed(char_poly(m)))
