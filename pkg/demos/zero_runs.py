"""Runs of vanishing determinants for G^{2,k} with k >= 5.

In every block of k consecutive indices, H_{kq+3} .. H_{kq+k-2} vanish.
The printed sign table misses the sign of H_{kq} when k = 2 or 3 mod 4; the
sign obtained by composing the transformation steps fixes it.
"""

from fractions import Fraction

from hankelcf import G2kParams, build_g_qfe
from hankelcf import closed_forms as cf

for k in (5, 6, 7, 8):
    g = G2kParams(Fraction(3, 2), -1, Fraction(2, 3), 2, k)
    h = cf.oracle_table(build_g_qfe(g), 2 * k + 2)
    zero_mask = "".join("0" if v == 0 else "x" for v in h)
    printed = [cf.theorem3_closed_form(g, n) for n in range(2 * k + 3)]
    chain = [cf.theorem3_closed_form(g, n, "chain") for n in range(2 * k + 3)]
    bad = [n for n in range(2 * k + 3) if printed[n] != h[n]]
    print(f"k={k}  pattern {zero_mask}  printed table wrong at {bad or 'none'}  "
          f"chain table exact: {chain == h}")
