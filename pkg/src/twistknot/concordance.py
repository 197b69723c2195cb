"""
Genus and tau bookkeeping for positive braid knots, same-genus families of three-strand
twisted torus knots, their signature ledger, the Burau-trace Fox-Milnor obstruction, and
the per-genus distinctness report.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
from dataclasses import dataclass, field
from math import gcd

from .braidcore import (
    BraidWord,
    closure_components,
    format_braid,
    is_twist_positive,
    make_twisted_torus_braid,
    standard_form,
    writhe,
)
from .burau import (
    AlexanderPoly,
    PreconditionError,
    alexander,
    reduced_burau,
    torus_alexander,
    torus_divisor_products,
)
from .goeritz import signature_closed_form, signature_gordon_litherland
from .laurent import LaurentPoly


class LedgerViolation(AssertionError):
    """A computed signature sequence broke the expected same-genus pattern."""


class UndistinguishedPair(AssertionError):
    """Two members of a family could not be separated by any available invariant."""


def genus_tau(b: BraidWord) -> tuple[int, int]:
    """
    Seifert genus of a positive braid knot from 2g - 1 = writhe - n; tau equals the genus.

    >>> genus_tau(BraidWord.from_ints(2, [1, 1, 1]))
    (1, 1)
    """
    if not b.is_positive():
        raise PreconditionError('genus formula needs a positive word')
    if closure_components(b) != 1:
        raise PreconditionError('closure is a link')
    num = writhe(b) - b.strands + 1
    if num % 2:
        raise PreconditionError(f'writhe parity is wrong for a knot: {writhe(b)} on {b.strands} strands')
    g = num // 2
    return g, g


def torus_genus(p: int, q: int) -> int:
    return (p - 1) * (q - 1) // 2


def ttk_label(k_param: int, m: int) -> str:
    return f'T(3,{k_param};{2 * m})'


def same_tau_family(q: int) -> list[tuple[int, int]]:
    """
    Standard-form parameters (k_param, m), meaning T(3, k_param; 2m), of the three-strand twisted
    torus knots with the same genus as T(3, q). The torus knot comes first.

    >>> same_tau_family(10)
    [(10, 0), (7, 3), (4, 6)]
    """
    if q < 4 or q % 3 == 0:
        raise ValueError(f'need q >= 4 with q not divisible by 3, got {q}')
    r = q // 3
    base = 0 if q % 3 == 1 else 1
    return [(3 * (r - s) + 1, base + 3 * s) for s in range(r)]


def _k_of(k_param: int) -> int:
    return (k_param - 1) // 3


def signature_ledger(q: int) -> list[tuple[tuple[int, int], int]]:
    """
    Signatures of the same-genus family. With k = floor(q/3) even they drop by 2 at each
    step; with k odd the first two agree and the rest drop by 2.
    """
    fam = same_tau_family(q)
    ledger = []
    for kp, m in fam:
        ledger.append(((kp, m), signature_closed_form(_k_of(kp), m)))
    sigs = [s for _, s in ledger]
    steps = [a - b for a, b in zip(sigs, sigs[1:])]
    k = q // 3
    expected = [2] * len(steps)
    if k % 2 == 1 and steps:
        expected[0] = 0
    if steps != expected:
        raise LedgerViolation(f'q={q}: signature steps {steps}, expected {expected}')
    return ledger


@dataclass(frozen=True)
class ObstructionResult:
    status: str                  # "Obstructed" | "Inconclusive"
    trace1: LaurentPoly
    trace2: LaurentPoly
    reason: str

    @property
    def obstructed(self) -> bool:
        return self.status == 'Obstructed'


def _guess_torus(b: BraidWord, a: AlexanderPoly) -> tuple[int, int] | None:
    p = b.strands
    deg = a.degree
    if deg % (p - 1):
        return None
    q = deg // (p - 1) + 1
    if q < 2 or gcd(p, q) != 1:
        return None
    return (p, q) if torus_alexander(p, q) == a else None


def fox_milnor_trace_obstruction(b1: BraidWord, b2: BraidWord,
                                 base_torus: tuple[int, int] | None = None) -> ObstructionResult:
    """
    Obstruct a concordance between the closures of two positive braids with equal strand
    count and writhe. Their Burau determinants then agree, so unequal traces force unequal
    Alexander polynomials; when the first polynomial is a product of distinct cyclotomic
    factors (as for a torus knot), the connected sum with the mirror reverse cannot have
    an f(t) f(1/t) factorization. Equal traces give Inconclusive, never a concordance claim.
    """
    for b in (b1, b2):
        if not b.is_positive():
            raise PreconditionError(f'{format_braid(b)} is not a positive word')
        if closure_components(b) != 1:
            raise PreconditionError(f'closure of {format_braid(b)} is a link')
    if b1.strands != b2.strands:
        raise PreconditionError('braids must have the same strand count')
    if writhe(b1) != writhe(b2):
        raise PreconditionError(f'writhes differ: {writhe(b1)} vs {writhe(b2)}')
    tr1 = reduced_burau(b1).trace()
    tr2 = reduced_burau(b2).trace()
    if tr1 == tr2:
        return ObstructionResult('Inconclusive', tr1, tr2, 'Burau traces agree')
    a1 = alexander(b1)
    pq = base_torus or _guess_torus(b1, a1)
    if pq is None:
        return ObstructionResult('Inconclusive', tr1, tr2,
                                 'first knot is not recognized as a torus knot')
    products = torus_divisor_products(*pq)
    if len(set(products)) != len(products):
        return ObstructionResult('Inconclusive', tr1, tr2,
                                 f'T{pq} has repeated cyclotomic factors')
    if torus_alexander(*pq) != a1:
        return ObstructionResult('Inconclusive', tr1, tr2,
                                 f'Alexander polynomial of the first braid is not that of T{pq}')
    return ObstructionResult('Obstructed', tr1, tr2,
                             f'traces differ and T{pq} has square-free cyclotomic Alexander polynomial')


def torus_distinctness(p1: int, q1: int, p2: int, q2: int) -> str:
    """
    'same-knot', 'braid-index', or 'genus' for two positive torus knots.

    >>> torus_distinctness(3, 4, 3, 5)
    'genus'
    """
    for p, q in ((p1, q1), (p2, q2)):
        if p < 2 or q < 2 or gcd(p, q) != 1:
            raise ValueError(f'T({p},{q}) is not a nontrivial torus knot')
    a, b = sorted((p1, q1)), sorted((p2, q2))
    if a == b:
        return 'same-knot'
    if a[0] != b[0]:
        return 'braid-index'
    if torus_genus(*a) != torus_genus(*b):
        return 'genus'
    raise UndistinguishedPair(f'T{tuple(a)} and T{tuple(b)}')  # unreachable for distinct pairs


def cable_index_bounds(p: int, q: int, br_k: int, i_k: int) -> tuple[int, int, bool]:
    """(p * br(K), p * i(K), whether br(K) = i(K) forces equalities for the cable)."""
    if p < 2:
        raise ValueError(f'cable needs p >= 2, got {p}')
    if br_k > i_k:
        raise ValueError('bridge index cannot exceed braid index')
    return p * br_k, p * i_k, br_k == i_k


def cable_alexander(companion: AlexanderPoly, p: int, q: int) -> AlexanderPoly:
    """Alexander polynomial of the (p, q)-cable: Delta_K(t^p) * Delta_{T(p,q)}(t)."""
    return AlexanderPoly.normalize(companion.poly.substitute_power(p) * torus_alexander(p, q).poly)


def conjecture_form_check(a: AlexanderPoly, n: int, genus: int) -> bool:
    """
    Whether Delta matches 1 - t + t^n + ... + t^{2g-n} ... - t^{2g-1} + t^{2g}, with zero
    coefficients strictly between t and t^n and between t^{2g-n} and t^{2g-1}.
    """
    top = 2 * genus
    if a.degree != top or n < 2 or top - n <= n - 1:
        return False
    c = a.coeff
    ends = c(0) == 1 and c(1) == -1 and c(n) == 1 and c(top) == 1 and c(top - 1) == -1 and c(top - n) == 1
    gaps = all(c(j) == 0 for j in range(2, n)) and all(c(j) == 0 for j in range(top - n + 1, top - 1))
    return ends and gaps


# ---------------------------------------------------------------------------
# Reports


@dataclass
class InvariantRecord:
    label: str
    q: int                       # the torus knot T(3, q) whose genus class this member is in
    k_param: int
    m: int
    braid: BraidWord
    writhe: int
    genus: int
    tau: int
    signature: int
    alexander: AlexanderPoly
    twist_positive: bool
    lspace_assumed: bool = True
    torus_knot: bool = False

    @property
    def k(self) -> int:
        return _k_of(self.k_param)

    def as_dict(self) -> dict:
        return {
            'label': self.label, 'q': self.q, 'k': self.k, 'm': self.m,
            'braid': format_braid(self.braid), 'writhe': self.writhe, 'genus': self.genus,
            'tau': self.tau, 'signature': self.signature, 'alexander': str(self.alexander),
            'flags': {'twist_positive': self.twist_positive, 'lspace_assumed': self.lspace_assumed,
                      'torus_knot': self.torus_knot},
        }


def member_record(q: int, k_param: int, m: int) -> InvariantRecord:
    b = make_twisted_torus_braid(k_param, m)
    g, tau = genus_tau(b)
    k = _k_of(k_param)
    sig = signature_closed_form(k, m)
    engine = signature_gordon_litherland(k, m)
    if sig != engine:
        raise LedgerViolation(f'{ttk_label(k_param, m)}: closed form {sig} != Goeritz {engine}')
    return InvariantRecord(
        label=ttk_label(k_param, m), q=q, k_param=k_param, m=m, braid=b, writhe=writhe(b),
        genus=g, tau=tau, signature=sig, alexander=alexander(b),
        twist_positive=is_twist_positive(b), torus_knot=m in (0, 1))


@dataclass
class PairVerdict:
    i: int
    j: int
    verdict: str          # signature | fox-milnor-trace | genus | braid-index | same-knot
    detail: str = ''


@dataclass
class DistinctnessReport:
    q: int
    genus: int
    members: list[InvariantRecord]
    pairs: list[PairVerdict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        if all(p.verdict != 'same-knot' for p in self.pairs):
            return 'pairwise distinct'
        return 'not distinguished'

    def obstructions_for(self, idx: int) -> list[str]:
        used = {p.verdict for p in self.pairs if idx in (p.i, p.j)}
        return sorted(used)

    def as_dict(self) -> dict:
        return {
            'q': self.q, 'genus': self.genus, 'verdict': self.verdict,
            'members': [r.as_dict() for r in self.members],
            'pairs': [{'a': self.members[p.i].label, 'b': self.members[p.j].label,
                       'verdict': p.verdict, 'detail': p.detail} for p in self.pairs],
            'notes': self.notes,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)

    CSV_COLUMNS = ('label', 'q', 'k', 'm', 'writhe', 'genus', 'tau', 'signature',
                   'verdict', 'obstruction_used')

    def csv_rows(self) -> list[dict]:
        rows = []
        for idx, r in enumerate(self.members):
            rows.append({
                'label': r.label, 'q': r.q, 'k': r.k, 'm': r.m, 'writhe': r.writhe,
                'genus': r.genus, 'tau': r.tau, 'signature': r.signature,
                'verdict': self.verdict, 'obstruction_used': ';'.join(self.obstructions_for(idx)),
            })
        return rows

    def to_csv(self, header: bool = True) -> str:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=self.CSV_COLUMNS, lineterminator='\n')
        if header:
            w.writeheader()
        w.writerows(self.csv_rows())
        return buf.getvalue()


def distinctness_report(q: int) -> DistinctnessReport:
    """
    Separate every pair in the genus class of T(3, q): by signature where it differs, and by
    the Burau-trace obstruction against the torus knot for the one possible equal pair.
    """
    fam = same_tau_family(q)
    signature_ledger(q)
    members = [member_record(q, kp, m) for kp, m in fam]
    genus = members[0].genus
    if any(r.genus != genus or r.writhe != members[0].writhe for r in members):
        raise LedgerViolation(f'q={q}: family members do not share writhe')
    report = DistinctnessReport(q, genus, members)
    report.notes.append(
        f'braid index 3 class; separated from T(2,{2 * genus + 1}) by braid index '
        '(assumed via concordance-minimal braid index, not computed)')
    for i, j in itertools.combinations(range(len(members)), 2):
        a, b = members[i], members[j]
        if a.signature != b.signature:
            report.pairs.append(PairVerdict(i, j, 'signature', f'{a.signature} vs {b.signature}'))
            continue
        if i != 0:
            raise UndistinguishedPair(f'{a.label} and {b.label} share signature {a.signature}')
        res = fox_milnor_trace_obstruction(a.braid, b.braid, base_torus=(3, q))
        if not res.obstructed:
            raise UndistinguishedPair(f'{a.label} and {b.label}: {res.reason}')
        report.pairs.append(PairVerdict(i, j, 'fox-milnor-trace',
                                        f'trace {res.trace1} vs {res.trace2}'))
    return report
