"""
Bridge index equals braid index for twist positive L-space knots.

Assuming the L-space property (not computed here), the gap between t and t^n in the
Alexander polynomial bounds the torsion order from below, which bounds the bridge
index from below by n; the braid word itself bounds the braid index above by n.
"""

from twistknot.braidcore import make_one_bridge_braid, make_twisted_torus_braid, make_vafaee_braid
from twistknot.burau import bridge_braid_certificate

for b in (make_twisted_torus_braid(7, 0), make_twisted_torus_braid(11, 3),
          make_one_bridge_braid(4, 2, 5), make_vafaee_braid(4, 7, 2, 1)):
    cert = bridge_braid_certificate(b)
    print(f'{b}')
    print(f'  Delta = {cert.alexander}   max gap {cert.max_gap}')
    for c in cert.conclusions:
        print(f'  [{c.status:9}] {c.claim}')
    print()

print(bridge_braid_certificate(make_twisted_torus_braid(7, 1)).to_json())
