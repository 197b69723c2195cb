"""
Braid words in the Artin generators, their permutations, and Garside left normal form.

A positive permutation braid is stored as its permutation in one-line notation:
``w = (w(1), ..., w(n))`` with 1-based values, and the generator sigma_i maps to the
adjacent transposition s_i. Composition follows braid multiplication, so the word
sigma_{i1} ... sigma_{ik} goes to s_{i1} ... s_{ik} with (uv)(j) = u(v(j)).

With that convention the right descent set of w is {i : w(i) > w(i+1)} and the left
descent set is the right descent set of the inverse. A pair (x, y) of simple braids is
left-weighted when every left descent of y is a right descent of x.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

Letter = tuple[int, int]    # (generator index, sign)
Perm = tuple[int, ...]


class BraidSyntaxError(ValueError):
    """Malformed braid text; ``pos`` is the 0-based character offset of the problem."""

    def __init__(self, message: str, pos: int):
        super().__init__(f'{message} (at position {pos})')
        self.pos = pos


class ParameterError(ValueError):
    """A family constructor was called outside its admissible parameter range."""


@dataclass(frozen=True)
class BraidWord:
    """
    A word in sigma_1^{+-1}, ..., sigma_{n-1}^{+-1} on ``strands`` strands.

    >>> BraidWord.from_ints(3, [2, 1, -2])
    BraidWord('3: 2 1 -2')
    """
    strands: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise ValueError('a braid needs at least two strands')
        letters = tuple((int(i), int(s)) for i, s in self.letters)
        for i, s in letters:
            if not 1 <= i <= self.strands - 1:
                raise ValueError(f'generator index {i} out of range for {self.strands} strands')
            if s not in (1, -1):
                raise ValueError(f'letter sign must be +1 or -1, got {s}')
        object.__setattr__(self, 'letters', letters)

    @classmethod
    def from_ints(cls, strands: int, ints: Iterable[int]) -> BraidWord:
        return cls(strands, tuple((abs(x), 1 if x > 0 else -1) for x in ints))

    def to_ints(self) -> list[int]:
        return [i * s for i, s in self.letters]

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if self.strands != other.strands:
            raise ValueError('cannot multiply braids on different strand counts')
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, k: int) -> BraidWord:
        if k < 0:
            return self.inverse() ** (-k)
        return BraidWord(self.strands, self.letters * k)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple((i, -s) for i, s in reversed(self.letters)))

    def is_positive(self) -> bool:
        return all(s > 0 for _, s in self.letters)

    def __str__(self) -> str:
        return format_braid(self)

    def __repr__(self) -> str:
        return f"BraidWord('{format_braid(self)}')"


def gen(strands: int, *indices: int) -> BraidWord:
    """Shorthand: ``gen(3, 2, 1)`` is sigma_2 sigma_1 in B_3 (negative ints invert)."""
    return BraidWord.from_ints(strands, indices)


# ---------------------------------------------------------------------------
# Text format

_TOKEN = re.compile(r'\s*(?:(\()|(\))\s*(?:[x×*]\s*(\d+))?|([+-]?\d+))')


def parse_braid(text: str) -> BraidWord:
    """
    Parse ``"<n>: <tok> <tok> ..."``. Tokens are nonzero integers (+i is sigma_i, -i its
    inverse); ``( ... )x k`` (or ``×k``) repeats a group.

    >>> parse_braid('3: (2 1)x2 -2')
    BraidWord('3: 2 1 2 1 -2')
    """
    head = re.match(r'\s*(\d+)\s*:', text)
    if head is None:
        raise BraidSyntaxError('expected "<strands>:" prefix', 0)
    n = int(head.group(1))
    if n < 2:
        raise BraidSyntaxError('strand count must be at least 2', head.start(1))
    pos = head.end()
    stack: list[list[int]] = [[]]
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise BraidSyntaxError(f'unexpected character {text[pos]!r}', pos)
        start = m.start(1) if m.group(1) else m.start(2) if m.group(2) else m.start(4)
        if m.group(1):
            stack.append([])
        elif m.group(2):
            if len(stack) == 1:
                raise BraidSyntaxError('unmatched ")"', start)
            reps = int(m.group(3)) if m.group(3) else 1
            group = stack.pop()
            stack[-1].extend(group * reps)
        else:
            v = int(m.group(4))
            if v == 0:
                raise BraidSyntaxError('generator 0 is not allowed', start)
            if abs(v) > n - 1:
                raise BraidSyntaxError(
                    f'generator index {abs(v)} out of range for {n} strands (must be 1..{n - 1})', start)
            stack[-1].append(v)
        pos = m.end()
    if len(stack) != 1:
        raise BraidSyntaxError('unclosed "("', len(text))
    return BraidWord.from_ints(n, stack[0])


def format_braid(b: BraidWord) -> str:
    body = ' '.join(str(x) for x in b.to_ints())
    return f'{b.strands}: {body}' if body else f'{b.strands}:'


# ---------------------------------------------------------------------------
# Permutations


def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


def half_twist_perm(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def compose(u: Perm, v: Perm) -> Perm:
    """(uv)(j) = u(v(j))."""
    return tuple(u[x - 1] for x in v)


def invert(u: Perm) -> Perm:
    out = [0] * len(u)
    for i, x in enumerate(u, start=1):
        out[x - 1] = i
    return tuple(out)


def right_mul_gen(w: Perm, i: int) -> Perm:
    """w s_i: swap positions i and i+1."""
    w = list(w)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def left_mul_gen(w: Perm, i: int) -> Perm:
    """s_i w: swap values i and i+1."""
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)


@lru_cache(maxsize=None)
def right_descents(w: Perm) -> frozenset[int]:
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


@lru_cache(maxsize=None)
def left_descents(w: Perm) -> frozenset[int]:
    return right_descents(invert(w))


def perm_length(w: Perm) -> int:
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


def braid_permutation(b: BraidWord) -> Perm:
    w = identity_perm(b.strands)
    for i, _ in b.letters:
        w = right_mul_gen(w, i)
    return w


def perm_cycles(w: Perm) -> list[list[int]]:
    seen = set()
    cycles = []
    for start in range(1, len(w) + 1):
        if start in seen:
            continue
        cyc = []
        x = start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = w[x - 1]
        cycles.append(cyc)
    return cycles


def closure_components(b: BraidWord) -> int:
    """Number of components of the braid closure (cycles of the induced permutation)."""
    return len(perm_cycles(braid_permutation(b)))


def is_knot(b: BraidWord) -> bool:
    return closure_components(b) == 1


def writhe(b: BraidWord) -> int:
    """Exponent sum of the word."""
    return sum(s for _, s in b.letters)


# ---------------------------------------------------------------------------
# Garside normal form


@dataclass(frozen=True)
class PermutationBraid:
    """A positive braid in which every pair of strands crosses at most once."""
    perm: Perm

    @property
    def strands(self) -> int:
        return len(self.perm)

    def word(self) -> BraidWord:
        """A reduced positive word, peeled greedily off the left with the smallest descent."""
        w = self.perm
        out = []
        while True:
            desc = left_descents(w)
            if not desc:
                break
            i = min(desc)
            out.append(i)
            w = left_mul_gen(w, i)
        return BraidWord.from_ints(self.strands, out)

    def __len__(self) -> int:
        return perm_length(self.perm)


@dataclass(frozen=True)
class NormalForm:
    """Delta^infimum * factors[0] * ... * factors[-1], left-weighted."""
    strands: int
    infimum: int
    factors: tuple[PermutationBraid, ...] = field(default_factory=tuple)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def supremum(self) -> int:
        return self.infimum + len(self.factors)

    def word(self) -> BraidWord:
        """A braid word for this element: Delta^p (inverted if p < 0) followed by the factors."""
        n = self.strands
        delta = PermutationBraid(half_twist_perm(n)).word()
        out = delta ** self.infimum
        for x in self.factors:
            out = out * x.word()
        return out

    def __str__(self) -> str:
        parts = [f'Delta^{self.infimum}']
        parts += ['[' + ' '.join(map(str, x.word().to_ints())) + ']' for x in self.factors]
        return ' . '.join(parts)


def _tau(w: Perm) -> Perm:
    """Conjugation by Delta on permutations: i -> n+1-i on both sides."""
    n = len(w)
    return tuple(n + 1 - w[n - x] for x in range(1, n + 1))


def _left_weight(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    """Move generators from the front of b to the back of a until (a, b) is left-weighted."""
    while True:
        movable = left_descents(b) - right_descents(a)
        if not movable:
            return a, b
        i = min(movable)
        a = right_mul_gen(a, i)
        b = left_mul_gen(b, i)


def _normalize(infimum: int, factors: list[Perm], n: int) -> NormalForm:
    ident = identity_perm(n)
    delta = half_twist_perm(n)
    # Insertion: after appending each factor, sweep right-to-left restoring left-weightedness.
    out: list[Perm] = []
    for x in factors:
        out.append(x)
        for j in range(len(out) - 2, -1, -1):
            a, b = _left_weight(out[j], out[j + 1])
            if a == out[j] and b == out[j + 1]:
                break
            out[j], out[j + 1] = a, b
        while out and out[-1] == ident:
            out.pop()
    lead = 0
    while lead < len(out) and out[lead] == delta:
        lead += 1
    return NormalForm(n, infimum + lead, tuple(PermutationBraid(p) for p in out[lead:]))


def garside_normal_form(b: BraidWord) -> NormalForm:
    """
    Left normal form. A negative letter sigma_i^{-1} is rewritten as Delta^{-1} (Delta sigma_i^{-1}),
    the Delta^{-1} is pushed to the front past the factors already read (conjugating them by
    Delta), and the positive permutation braid Delta sigma_i^{-1} is appended.

    >>> nf = garside_normal_form(gen(3, 2, 1, 2, 1, 2, 1, 2, 1))
    >>> nf.infimum, nf.canonical_length
    (2, 1)
    """
    n = b.strands
    delta = half_twist_perm(n)
    p = 0
    factors: list[Perm] = []
    for i, s in b.letters:
        if s > 0:
            factors.append(right_mul_gen(identity_perm(n), i))
        else:
            factors = [_tau(x) for x in factors]
            p -= 1
            factors.append(right_mul_gen(delta, i))
    # Any leading Delta^p with p odd also twists nothing: p is already at the front.
    return _normalize(p, factors, n)


def normal_form_product(u: NormalForm, v: NormalForm) -> NormalForm:
    """Normal form of the product of two braids given in normal form."""
    if u.strands != v.strands:
        raise ValueError('strand counts differ')
    n = u.strands
    # Delta^a X Delta^b Y = Delta^(a+b) tau^b(X) Y
    xs = [x.perm for x in u.factors]
    if v.infimum % 2:
        xs = [_tau(x) for x in xs]
    return _normalize(u.infimum + v.infimum, xs + [y.perm for y in v.factors], n)


def is_twist_positive(b: BraidWord) -> bool:
    """A positive word that factors as Delta^2 times a positive word."""
    return b.is_positive() and garside_normal_form(b).infimum >= 2


def twist_positive_cofactor(b: BraidWord) -> BraidWord:
    """
    For a twist positive word, a positive word gamma with b = Delta^2 gamma in the braid group.
    """
    if not is_twist_positive(b):
        raise ValueError(f'{format_braid(b)} is not twist positive')
    nf = garside_normal_form(b)
    rest = NormalForm(nf.strands, nf.infimum - 2, nf.factors)
    return rest.word()


def full_twist(n: int) -> BraidWord:
    """(sigma_1 ... sigma_{n-1})^n."""
    return BraidWord.from_ints(n, list(range(1, n)) * n)


def half_twist(n: int) -> BraidWord:
    return PermutationBraid(half_twist_perm(n)).word()


def conjugate_by_garside(b: BraidWord) -> BraidWord:
    """Delta b Delta^{-1}: swaps sigma_i and sigma_{n-i}."""
    n = b.strands
    return BraidWord(n, tuple((n - i, s) for i, s in b.letters))


def cyclic_rotate(b: BraidWord, k: int) -> BraidWord:
    """Move the first k letters to the end (a conjugate braid)."""
    if not b.letters:
        return b
    k %= len(b.letters)
    return BraidWord(b.strands, b.letters[k:] + b.letters[:k])


# ---------------------------------------------------------------------------
# Families


def make_torus_braid(p: int, q: int) -> BraidWord:
    """(sigma_1 ... sigma_{p-1})^q on p strands."""
    if p < 2 or q < 1:
        raise ParameterError(f'torus braid needs p >= 2 and q >= 1, got p={p}, q={q}')
    return BraidWord.from_ints(p, list(range(1, p)) * q)


def make_twisted_torus_braid(k: int, m: int) -> BraidWord:
    """
    (sigma_2 sigma_1)^k (sigma_2)^{2m} on three strands, for k >= 4, k not divisible by 3, m >= 0.
    """
    if k < 4:
        raise ParameterError(f'need k >= 4, got k={k}')
    if k % 3 == 0:
        raise ParameterError(f'need k not divisible by 3 (closure is a link), got k={k}')
    if m < 0:
        raise ParameterError(f'need m >= 0, got m={m}')
    return twisted_torus_word(k, m)


def twisted_torus_word(k: int, m: int) -> BraidWord:
    """The same word with no admissibility checks (links and small k allowed)."""
    if k < 0 or m < 0:
        raise ParameterError('exponents must be nonnegative')
    return BraidWord.from_ints(3, [2, 1] * k + [2] * (2 * m))


def make_tlink_braid(pairs: Sequence[tuple[int, int]]) -> BraidWord:
    """
    (sigma_1 ... sigma_{p_1 - 1})^{q_1} ... (sigma_1 ... sigma_{p_s - 1})^{q_s} on p_s strands,
    for 2 <= p_1 <= ... <= p_s and every q_i > 0.
    """
    if not pairs:
        raise ParameterError('a T-link needs at least one (p, q) pair')
    ps = [p for p, _ in pairs]
    if ps[0] < 2:
        raise ParameterError(f'need p_1 >= 2, got {ps[0]}')
    if any(a > b for a, b in zip(ps, ps[1:])):
        raise ParameterError(f'need p_1 <= ... <= p_s, got {ps}')
    if any(q <= 0 for _, q in pairs):
        raise ParameterError('need every q_i > 0')
    ints: list[int] = []
    for p, q in pairs:
        ints += list(range(1, p)) * q
    return BraidWord.from_ints(ps[-1], ints)


def make_one_bridge_braid(w: int, b: int, t: int) -> BraidWord:
    """(sigma_b ... sigma_1)(sigma_{w-1} ... sigma_1)^t on w strands, 1 <= b <= w-2, t >= 1."""
    if w < 3:
        raise ParameterError(f'need w >= 3, got w={w}')
    if not 1 <= b <= w - 2:
        raise ParameterError(f'need 1 <= b <= w-2, got b={b}')
    if t < 1:
        raise ParameterError(f'need t >= 1, got t={t}')
    return BraidWord.from_ints(w, list(range(b, 0, -1)) + list(range(w - 1, 0, -1)) * t)


def make_vafaee_braid(w: int, t: int, k: int, s: int) -> BraidWord:
    """
    (sigma_{w-1} ... sigma_1)^t (sigma_{w-1} ... sigma_{w-k})^{s k} on w strands,
    for 1 <= k <= w-1, t >= 1, s >= 0.
    """
    if w < 2:
        raise ParameterError(f'need w >= 2, got w={w}')
    if not 1 <= k <= w - 1:
        raise ParameterError(f'need 1 <= k <= w-1, got k={k}')
    if t < 1 or s < 0:
        raise ParameterError(f'need t >= 1 and s >= 0, got t={t}, s={s}')
    block = list(range(w - 1, w - k - 1, -1))
    return BraidWord.from_ints(w, list(range(w - 1, 0, -1)) * t + block * (s * k))


def make_baker_kegel_braid(n: int) -> BraidWord:
    """(sigma_2 sigma_1 sigma_3 sigma_2)^{2n+1} sigma_1^{-1} sigma_2 sigma_1 sigma_1 sigma_2 on four strands."""
    if n < 1:
        raise ParameterError(f'need n >= 1, got n={n}')
    return BraidWord.from_ints(4, [2, 1, 3, 2] * (2 * n + 1) + [-1, 2, 1, 1, 2])


def gamma_pq_braid(p: int, q: int) -> BraidWord:
    """(sigma_2)^p (sigma_1 sigma_2 sigma_2 sigma_1)^q; closures are always links."""
    return BraidWord.from_ints(3, ([2] if p >= 0 else [-2]) * abs(p)
                               + ([1, 2, 2, 1] if q >= 0 else [-1, -2, -2, -1]) * abs(q))


def standard_form(k_param: int, m: int) -> tuple[int, int]:
    """
    Reindex T(3, k_param; 2m) so the first parameter is 1 mod 3:
    T(3, 3r+2; 2m) is isotopic to T(3, 3r+1; 2m+2).
    """
    if k_param < 4 or k_param % 3 == 0 or m < 0:
        raise ParameterError(f'T(3,{k_param};{2 * m}) is not an admissible twisted torus knot')
    if k_param % 3 == 1:
        return k_param, m
    return k_param - 1, m + 1
