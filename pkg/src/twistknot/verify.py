"""
The reproducibility checks: every exact identity the library is built to confirm, as
named check functions returning CheckResult. Used by ``twistknot verify`` and the
acceptance tests.
"""

from __future__ import annotations

import itertools
import json
import os
import random
import time
from dataclasses import dataclass, field, fields
from math import gcd
from pathlib import Path
from typing import Callable, Iterator

from .braidcore import (
    BraidWord,
    full_twist,
    is_knot,
    is_twist_positive,
    make_one_bridge_braid,
    make_tlink_braid,
    make_torus_braid,
    make_twisted_torus_braid,
    make_vafaee_braid,
    twisted_torus_word,
    writhe,
)
from .burau import (
    alexander,
    baker_kegel_certificate,
    burau_char_poly,
    exponent_gaps,
    form_matches,
    lspace_admissible,
    reduced_burau,
    torus_alexander,
)
from .concordance import distinctness_report, same_tau_family
from .goeritz import (
    goeritz_family_matrix,
    inertia,
    make_N,
    make_P,
    pn_reduce,
    signature_closed_form,
    signature_gordon_litherland,
)
from .laurent import LaurentPoly, PolyMatrix

CONFIG_ENV = 'TWISTKNOT_CONFIG'


@dataclass
class Config:
    output_format: str = 'text'
    q_max: int = 40
    k_max: int = 8
    m_max: int = 8
    n_max: int = 5
    fail_fast: bool = False

    def __post_init__(self):
        if self.output_format not in ('json', 'csv', 'text'):
            raise ValueError(f'unknown output format {self.output_format!r}')
        for name in ('q_max', 'k_max', 'm_max', 'n_max'):
            if getattr(self, name) < 1:
                raise ValueError(f'{name} must be positive')

    @classmethod
    def load(cls, path: str | os.PathLike | None = None, **overrides) -> Config:
        """Defaults, then the JSON file at ``path`` (or $TWISTKNOT_CONFIG), then overrides."""
        values: dict = {}
        path = path or os.environ.get(CONFIG_ENV)
        if path:
            values.update(json.loads(Path(path).read_text()))
        known = {f.name for f in fields(cls)}
        unknown = set(values) - known
        if unknown:
            raise ValueError(f'unknown config keys: {sorted(unknown)}')
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


@dataclass
class CheckResult:
    key: str
    claim: str
    paper_ref: str
    passed: bool
    detail: str = ''
    seconds: float = 0.0
    failures: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = 'PASS' if self.passed else 'FAIL'
        out = f'{status} {self.key}: {self.claim} [{self.paper_ref}]'
        if self.detail:
            out += f' {self.detail}'
        return out

    def as_dict(self) -> dict:
        return {'key': self.key, 'claim': self.claim, 'paper_ref': self.paper_ref,
                'passed': self.passed, 'detail': self.detail, 'failures': self.failures[:20]}


class _Collector:
    def __init__(self):
        self.failures: list[str] = []
        self.count = 0

    def expect(self, ok: bool, what: str):
        self.count += 1
        if not ok:
            self.failures.append(what)


def _run(key, claim, ref, body: Callable[[_Collector], str | None], budget: float | None = None) -> CheckResult:
    col = _Collector()
    start = time.perf_counter()
    detail = body(col) or ''
    elapsed = time.perf_counter() - start
    if budget is not None and elapsed >= budget:
        col.failures.append(f'runtime {elapsed:.1f}s exceeds {budget}s budget')
    detail = f'{col.count} assertions{", " + detail if detail else ""}'
    return CheckResult(key, claim, ref, not col.failures, detail, elapsed, col.failures)


# ---------------------------------------------------------------------------
# Braid families for the twist positive sweep


def ttk_words(k_max: int = 16, m_max: int = 4) -> Iterator[tuple[str, BraidWord]]:
    for k in range(4, k_max + 1):
        if k % 3:
            for m in range(m_max + 1):
                yield f'T(3,{k};{2 * m})', make_twisted_torus_braid(k, m)


def tlink_words(max_pairs: int = 3, max_strands: int = 5, q_max: int = 5) -> Iterator[tuple[str, BraidWord]]:
    """T-link words whose closures are twist positive knots."""
    for s in range(1, max_pairs + 1):
        for ps in itertools.combinations_with_replacement(range(2, max_strands + 1), s):
            for qs in itertools.product(range(1, q_max + 1), repeat=s):
                pairs = list(zip(ps, qs))
                b = make_tlink_braid(pairs)
                if is_knot(b) and is_twist_positive(b):
                    yield f'T-link {pairs}', b


def one_bridge_words(w_max: int = 5) -> Iterator[tuple[str, BraidWord]]:
    for w in range(3, w_max + 1):
        for bb in range(1, w - 1):
            for t in range(1, 2 * w + 2):
                b = make_one_bridge_braid(w, bb, t)
                if is_knot(b) and is_twist_positive(b):
                    yield f'1-bridge (w,b,t)=({w},{bb},{t})', b


def vafaee_lspace_params(w_max: int = 5, c_max: int = 2) -> Iterator[tuple[int, int, int, int]]:
    """
    (w, t, k, s) with t = c*w +- 1 > w and the twisted block on k+1 adjacent strands
    covering w-1 strands (any s >= 1, here s <= 2) or 2 or w-2 strands (s = 1).
    """
    for w in range(3, w_max + 1):
        for c in range(1, c_max + 1):
            for t in sorted({c * w - 1, c * w + 1}):
                if t <= w:
                    continue
                for k in range(1, w):
                    span = k + 1
                    if span == w - 1:
                        ss = (1, 2)
                    elif span in (2, w - 2):
                        ss = (1,)
                    else:
                        continue
                    for s in ss:
                        yield w, t, k, s


def vafaee_words(w_max: int = 5) -> Iterator[tuple[str, BraidWord]]:
    for w, t, k, s in vafaee_lspace_params(w_max):
        b = make_vafaee_braid(w, t, k, s)
        if is_knot(b) and is_twist_positive(b):
            yield f'Vafaee (w,t,k,s)=({w},{t},{k},{s})', b


def random_positive_knot_words(count: int, n_max: int = 4, max_len: int = 16, seed: int = 20240613) -> list[BraidWord]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, n_max)
        length = rng.randint(n - 1, max_len)
        b = BraidWord.from_ints(n, [rng.randint(1, n - 1) for _ in range(length)])
        if is_knot(b):
            out.append(b)
    return out


# ---------------------------------------------------------------------------
# The checks

_t = LaurentPoly.t


def check_burau_golden(cfg: Config) -> CheckResult:
    def body(c: _Collector):
        for k in range(1, 7):
            got = reduced_burau(BraidWord.from_ints(3, [2, 1] * (3 * k + 1)))
            want = PolyMatrix([[-_t(3 * k + 1), _t(3 * k)], [-_t(3 * k + 2), 0]])
            c.expect(got == want, f'(s2 s1)^{3 * k + 1}')
        for n in range(2, 6):
            c.expect(reduced_burau(full_twist(n)) == PolyMatrix.scalar(n - 1, _t(n)), f'full twist n={n}')
    return _run('1', 'Burau of (s2 s1)^(3k+1) and of the full twist', 'Burau matrix displays', body, 1.0)


def sweep_words(cfg: Config) -> dict[str, list[tuple[str, BraidWord]]]:
    return {
        'twisted torus': list(ttk_words(16, 4)),
        'T-link': list(tlink_words(3, cfg.n_max)),
        '1-bridge': list(one_bridge_words(5)),
        'Vafaee': list(vafaee_words(5)),
    }


def check_twist_positive_form(cfg: Config) -> CheckResult:
    def body(c: _Collector):
        families = sweep_words(cfg)
        for words in families.values():
            for label, b in words:
                a = alexander(b)
                c.expect(form_matches(a, b.strands), f'{label}: {a}')
        return ', '.join(f'{name} {len(words)}' for name, words in families.items())
    return _run('2', 'twist positive knots have Delta = 1 - t + t^n + ...',
                'twist-positive Alexander form', body, 30.0)


def check_trace_at_zero(cfg: Config) -> CheckResult:
    def body(c: _Collector):
        for b in random_positive_knot_words(500):
            c.expect(reduced_burau(b).trace().eval_at_zero() == 0, str(b))
    return _run('3', 'trace B(0) = 0 for 500 random positive knot words', 'a_1 has no constant term', body, 10.0)


GOLDEN_GFULL = [
    [11, -1, -1, -1, -1, -1, -1, -5],
    [-1, -1, 1, 0, 0, 0, 0, 1],
    [-1, 1, -1, 1, 0, 0, 0, 0],
    [-1, 0, 1, -1, 1, 0, 0, 0],
    [-1, 0, 0, 1, -1, 1, 0, 0],
    [-1, 0, 0, 0, 1, -1, 1, 0],
    [-1, 0, 0, 0, 0, 1, -1, 1],
    [-5, 1, 0, 0, 0, 0, 1, 3],
]
GOLDEN_G = [row[1:] for row in GOLDEN_GFULL[1:]]


def check_goeritz_golden(cfg: Config) -> CheckResult:
    def body(c: _Collector):
        data = goeritz_family_matrix(2, 2)
        c.expect(data.full.to_ints() == GOLDEN_GFULL, 'G\' mismatch')
        c.expect(data.reduced.to_ints() == GOLDEN_G, 'G mismatch')
        c.expect(data.mu == 11, f'mu = {data.mu}')
    return _run('4', "Goeritz G' (8x8), G (7x7), mu = 11 for (k, m) = (2, 2)", 'displayed Goeritz matrices', body)


def check_signature_theorem(cfg: Config) -> CheckResult:
    def body(c: _Collector):
        for k in range(1, cfg.k_max + 1):
            for m in range(cfg.m_max + 1):
                gl, cf = signature_gordon_litherland(k, m), signature_closed_form(k, m)
                c.expect(gl == cf, f'(k,m)=({k},{m}): Goeritz {gl}, closed form {cf}')
        # T(3,4) = (1,0); T(3,5) = T(3,4;2) = (1,1); T(3,8) = T(3,7;2) = (2,1)
        for (k, m), want, name in (((1, 0), -6, 'T(3,4)'), ((1, 1), -8, 'T(3,5)'), ((2, 1), -10, 'T(3,8)')):
            c.expect(signature_gordon_litherland(k, m) == want, f'{name} != {want}')
    return _run('5', 'Goeritz signature equals the closed form on the (k, m) grid',
                'signature of T(3,3k+1;2m)', body, 5.0)


def check_pn_recursion(cfg: Config) -> CheckResult:
    def body(c: _Collector):
        for l in range(1, 7):
            for eps in range(-3, 6):
                for kind, make in (('P', make_P), ('N', make_N)):
                    red = pn_reduce(l, eps, kind)
                    c.expect(red.inertia() == inertia(make(l, eps)), f'{kind}_{l},{eps}')
    return _run('6', 'P/N block recursion matches direct inertia', 'P/N congruence recursion', body)


def check_family_count(cfg: Config) -> CheckResult:
    def body(c: _Collector):
        for q in range(4, cfg.q_max + 1):
            if q % 3 == 0:
                continue
            fam = same_tau_family(q)
            c.expect(len(fam) - 1 == q // 3 - 1, f'q={q}: {len(fam)} members')
            ws = {writhe(make_twisted_torus_braid(kp, m)) for kp, m in fam}
            c.expect(len(ws) == 1, f'q={q}: writhes {ws}')
    return _run('7', 'floor(q/3) - 1 same-genus twisted torus knots, equal writhe',
                'count of same-tau twisted torus knots', body)


def check_distinctness(cfg: Config) -> CheckResult:
    def body(c: _Collector):
        used = 0
        for q in range(4, cfg.q_max + 1):
            if q % 3 == 0:
                continue
            try:
                rep = distinctness_report(q)
            except AssertionError as exc:
                c.expect(False, f'q={q}: {exc}')
                continue
            c.expect(rep.verdict == 'pairwise distinct', f'q={q}: {rep.verdict}')
            k = q // 3
            fm = [p for p in rep.pairs if p.verdict == 'fox-milnor-trace']
            want = 1 if (k % 2 == 1 and len(rep.members) >= 2) else 0
            c.expect(len(fm) == want, f'q={q}: {len(fm)} trace obstructions, expected {want}')
            c.expect(all((p.i, p.j) == (0, 1) for p in fm), f'q={q}: trace pair is not (K_0, K_1)')
            used += len(fm)
        return f'{used} pairs resolved by the trace obstruction'
    return _run('8', 'each same-genus class is pairwise distinct in concordance',
                'distinct concordance classes', body, 60.0)


def check_adjacent_isotopy(cfg: Config) -> CheckResult:
    def body(c: _Collector):
        for q in range(4, 17, 3):
            for m in range(1, 5):
                a, b = twisted_torus_word(q, m), twisted_torus_word(q + 1, m - 1)
                c.expect(burau_char_poly(a) == burau_char_poly(b), f'T(3,{q};{2 * m}) vs T(3,{q + 1};{2 * m - 2})')
                c.expect(writhe(a) == writhe(b), 'writhe')
    return _run('9', 'T(3,q;2m) and T(3,q+1;2m-2) have equal Burau characteristic polynomials',
                'adjacent twisted torus knots are isotopic', body)


def check_baker_kegel(cfg: Config) -> CheckResult:
    def body(c: _Collector):
        for n in (1, 2, 3):
            cert = baker_kegel_certificate(n)
            a = cert.alexander
            c.expect(a.exponents[:4] == [0, 1, 4, 5], f'n={n}: exponents {a.exponents[:4]}')
            c.expect(exponent_gaps(a)[1] == 3, f'n={n}: max gap {exponent_gaps(a)[1]}')
            c.expect(lspace_admissible(a), f'n={n}: not L-space shaped')
            c.expect(cert.bridge_index == 4 and cert.braid_index == 4, f'n={n}: br = i = 4 not concluded')
    return _run('10a', 'Baker-Kegel knots: exponents 0,1,4,5..., gap 3, L-space shape, br = i = 4',
                'Baker-Kegel bridge index', body, 5.0)


def check_baker_kegel_degree(cfg: Config) -> CheckResult:
    def body(c: _Collector):
        degs = []
        for n in (1, 2, 3):
            a = alexander_bk(n)
            degs.append(a.degree)
            c.expect(a.degree == 8 * n + 2, f'n={n}: degree {a.degree}, expected {8 * n + 2}')
        return f'computed degrees {degs}'
    return _run('10b', 'Baker-Kegel Alexander polynomial has degree 8n+2',
                'Baker-Kegel Alexander polynomial', body, 5.0)


def alexander_bk(n: int):
    from .braidcore import make_baker_kegel_braid
    return alexander(make_baker_kegel_braid(n))


def check_torus_oracle(cfg: Config) -> CheckResult:
    def body(c: _Collector):
        for p in range(2, 5):
            for q in range(p + 1, 14):
                if gcd(p, q) != 1:
                    continue
                c.expect(alexander(make_torus_braid(p, q)) == torus_alexander(p, q), f'T({p},{q})')
        for q in range(4, 14):
            if gcd(3, q) == 1:
                c.expect(exponent_gaps(torus_alexander(3, q))[1] == 2, f'T(3,{q}) max gap')
    return _run('11', 'Burau Alexander polynomial of torus braids equals the cyclotomic product',
                'torus knot Alexander polynomials', body)


def check_trace_matrices(cfg: Config) -> CheckResult:
    """The four explicit matrices of the trace obstruction argument, entrywise."""
    def body(c: _Collector):
        s1_6 = reduced_burau(BraidWord.from_ints(3, [1] * 6))
        alt6 = LaurentPoly([1, -1, 1, -1, 1, -1])
        c.expect(s1_6 == PolyMatrix([[_t(6), alt6], [0, 1]]), 'sigma_1^6')
        for k in range(2, 9):
            b1 = reduced_burau(BraidWord.from_ints(3, [2, 1] * (3 * k + 1)))
            c.expect(b1 == PolyMatrix([[-_t(3 * k + 1), _t(3 * k)], [-_t(3 * k + 2), 0]]), f'case 1 B1, k={k}')
            b2 = reduced_burau(BraidWord.from_ints(3, [2, 1] * (3 * (k - 1) + 1) + [1] * 6))
            want2 = PolyMatrix([[-_t(7), LaurentPoly([1, -1, 1, -1, 1, -1, 1])],
                                [-_t(8), LaurentPoly([0, 0, -1, 1, -1, 1, -1, 1])]]) * _t(3 * (k - 1))
            c.expect(b2 == want2, f'case 1 B2, k={k}')
            c.expect(b1.trace() != b2.trace(), f'case 1 traces equal, k={k}')
            # conjugate standard-form word has the same trace
            std = reduced_burau(make_twisted_torus_braid(3 * (k - 1) + 1, 3))
            c.expect(std.trace() == b2.trace(), f'case 1 conjugate trace, k={k}')
            b1c2 = reduced_burau(BraidWord.from_ints(3, [2, 1] * (3 * k + 2)))
            c.expect(b1c2 == PolyMatrix([[0, -_t(3 * k + 1)], [_t(3 * k + 3), -_t(3 * k + 2)]]), f'case 2 B1, k={k}')
            b2c2 = reduced_burau(BraidWord.from_ints(3, [2, 1] * (3 * (k - 1) + 1) + [1] * 8))
            c.expect(b1c2.trace() != b2c2.trace(), f'case 2 traces equal, k={k}')
    return _run('L', 'explicit Burau matrices of the trace obstruction', 'Fox-Milnor trace argument', body)


CHECKS: list[Callable[[Config], CheckResult]] = [
    check_burau_golden,
    check_twist_positive_form,
    check_trace_at_zero,
    check_goeritz_golden,
    check_signature_theorem,
    check_pn_recursion,
    check_family_count,
    check_distinctness,
    check_adjacent_isotopy,
    check_baker_kegel,
    check_baker_kegel_degree,
    check_torus_oracle,
    check_trace_matrices,
]


def run_all(cfg: Config | None = None, on_result: Callable[[CheckResult], None] | None = None) -> list[CheckResult]:
    cfg = cfg or Config()
    out = []
    for check in CHECKS:
        res = check(cfg)
        out.append(res)
        if on_result:
            on_result(res)
        if cfg.fail_fast and not res.passed:
            break
    return out
