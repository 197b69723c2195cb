"""
Same-genus families of three-strand twisted torus knots are pairwise non-concordant.

Each family shares writhe, hence genus and tau. Signatures separate every pair except one
when floor(q/3) is odd; that pair is separated by comparing Burau traces against the
square-free cyclotomic Alexander polynomial of the torus knot.
"""

from twistknot.concordance import distinctness_report, fox_milnor_trace_obstruction
from twistknot.braidcore import make_twisted_torus_braid

rep = distinctness_report(10)
for r in rep.members:
    print(f'{r.label:11} writhe={r.writhe} genus={r.genus} signature={r.signature}')
for p in rep.pairs:
    print(f'  {rep.members[p.i].label} vs {rep.members[p.j].label}: {p.verdict}')

res = fox_milnor_trace_obstruction(make_twisted_torus_braid(10, 0), make_twisted_torus_braid(7, 3))
print(f'\ntrace T(3,10) = {res.trace1}\ntrace T(3,7;6) = {res.trace2}\n{res.status}: {res.reason}\n')

trace_pairs = 0
for q in (q for q in range(4, 41) if q % 3):
    rep = distinctness_report(q)
    assert rep.verdict == 'pairwise distinct'
    trace_pairs += sum(p.verdict == 'fox-milnor-trace' for p in rep.pairs)
print(f'all genus classes up to T(3,40): pairwise distinct ({trace_pairs} pairs needed the trace argument)')
print()
print(distinctness_report(13).to_csv())
