"""
Twist positive braids and the opening of their Alexander polynomials.

A braid word on n strands that contains a full twist has an Alexander polynomial that
starts 1 - t + t^n, with nothing in between. We check this on a few families and
show where the pattern stops once the full twist is missing.
"""

from twistknot.braidcore import (
    gen,
    garside_normal_form,
    is_twist_positive,
    make_one_bridge_braid,
    make_tlink_braid,
    make_twisted_torus_braid,
    twist_positive_cofactor,
)
from twistknot.burau import alexander, check_twist_positive_form

examples = {
    'T(3,7;4)': make_twisted_torus_braid(7, 2),
    'T-link ((2,2),(4,5))': make_tlink_braid([(2, 2), (4, 5)]),
    '1-bridge (4,2,5)': make_one_bridge_braid(4, 2, 5),
}

for name, b in examples.items():
    nf = garside_normal_form(b)
    report = check_twist_positive_form(b)
    print(f'{name}: {b}')
    print(f'  normal form   {nf}')
    print(f'  Delta^2 * ... {twist_positive_cofactor(b)}')
    print(f'  Alexander     {report.alexander}')
    print(f'  form holds    {report.ok}\n')

# Without the full twist the pattern can fail: the trefoil as sigma_1 sigma_2 sigma_1 sigma_2
# in B_3 has a t^2 term where the pattern wants zero.
b = gen(3, 1, 2, 1, 2)
print(f'{b}: twist positive = {is_twist_positive(b)}, Alexander = {alexander(b)}')
