"""
Signatures of the twisted torus knots T(3, 3k+1; 2m) from Goeritz matrices.

The reduced Goeritz matrix is diagonalized by exact congruence and corrected by mu = q + 2m.
The result is compared against the closed form over a grid, and the block recursion
shows where the one sign that matters comes from.
"""

from twistknot.goeritz import (
    goeritz_family_matrix,
    inertia,
    make_P,
    pn_reduce,
    signature_closed_form,
    signature_gordon_litherland,
)

data = goeritz_family_matrix(2, 2)
print("G' for T(3,7;4):")
print(data.full.dump())
print(f'\nsign(G) = {inertia(data.reduced).signature}, mu = {data.mu}, '
      f'signature = {signature_gordon_litherland(2, 2)}\n')

print('k\\m ' + ''.join(f'{m:5}' for m in range(9)))
for k in range(1, 9):
    row = []
    for m in range(9):
        s = signature_gordon_litherland(k, m)
        assert s == signature_closed_form(k, m)
        row.append(f'{s:5}')
    print(f'{k:3} ' + ''.join(row))

print('\nBlock recursion for G = P_{k, 2m-1}:')
for k, m in ((3, 0), (3, 1), (3, 2), (4, 0)):
    red = pn_reduce(k, 2 * m - 1, 'P')
    direct = inertia(make_P(k, 2 * m - 1))
    print(f'  k={k} m={m}: {" -> ".join(red.chain)}, {red.blocks} B blocks, tail {red.tail}, '
          f'inertia {direct.n_pos}+/{direct.n_neg}-')
