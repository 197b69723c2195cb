"""
The four-strand Baker-Kegel knots K_n, whose braid word has one negative letter.

The Alexander polynomial opens 1 - t + t^4 - t^5, a gap of 3, which (with the assumed
L-space property) forces bridge index 4. The computed top degree is 8n+4; the certificate
records where this differs from the stated shape.
"""

from twistknot.braidcore import garside_normal_form, make_baker_kegel_braid
from twistknot.burau import baker_kegel_certificate

for n in (1, 2, 3):
    b = make_baker_kegel_braid(n)
    cert = baker_kegel_certificate(n)
    print(f'K_{n} = {b}')
    print(f'  normal form {garside_normal_form(b)}')
    print(f'  Delta = {cert.alexander}')
    print(f'  degree {cert.alexander.degree}, max gap {cert.max_gap}, br = i = {cert.bridge_index}')
    for c in cert.conclusions:
        if c.status in ('fail', 'discrepancy'):
            print(f'  [{c.status}] {c.claim}')
    print()
