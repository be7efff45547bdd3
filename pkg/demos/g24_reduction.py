"""Two transformation steps turn G^{2,4} into the E(x) family.

The ledger records how H_n changes at each step, so H_n(G) can be read off
the E-family closed form.  The script also shows the off-by-one in the
printed formula for the special case 4ac + b2^2 = 0.
"""

from fractions import Fraction

from hankelcf import G2kParams, build_g_qfe
from hankelcf import closed_forms as cf
from hankelcf.recurrences import b_sequence

g = G2kParams(2, Fraction(1, 2), 3, -1, 4)
red = cf.g24_reduction_chain(g)
print("start :", build_g_qfe(g))
print("after :", red.g2)
print("E-family parameters:", cf.g2_params(g))

oracle = cf.oracle_table(build_g_qfe(g), 10)
closed = [cf.theorem2_closed_form(g, n) for n in range(11)]
for n in range(2, 6):
    m, factor = red.ledger.eval(n)
    print(f"H_{n}(G) = {factor} * H_{m}(E-form)   [a^n (-b2)^(n-1) = {cf.g24_reduction_factor(g, n)}]")
print("closed form agrees with brute force:", closed == oracle)

b2 = Fraction(2)
special = G2kParams(1, 1, b2, -b2 * b2 / 4, 4)
bs = b_sequence(cf.g2_params(special), 6)
print("\n4ac + b2^2 = 0 with b2 = 2")
print(f"{'n':>2} {'B_(n-1)':>8} {'B_n':>6} {'display(n)':>11}")
for n in range(6):
    print(f"{n:>2} {str(bs[n - 1]):>8} {str(bs[n]):>6} {str(cf.b_4ac_display(b2, n)):>11}")
print("the display tracks B_n, one index ahead of what the closed form needs")
