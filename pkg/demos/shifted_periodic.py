"""The shifted periodic chain behind G^{2,k}, k >= 5.

One step takes G^{2,k} to G_1^(1); every further four steps take G_1^(p) to
G_1^(p+1).  The chain never repeats exactly, but it stays inside one
parametric family, which is what makes a closed form possible.
"""

from fractions import Fraction

from hankelcf import G2kParams, run_shifts
from hankelcf import closed_forms as cf

for k in (5, 6):
    g = G2kParams(1, Fraction(1, 2), 2, 3, k)
    print(f"k = {k}")
    for p in range(1, 4):
        trace, ledger = run_shifts(cf.g1p_qfe(g, p), 4)
        n = k + 2
        m, factor = ledger.eval(n)
        printed = cf.recursion_sign(k) * (g.c * g.a) ** (2 * n - k + 1)
        print(f"  p={p}: lands on G_1^({p + 1}) {trace[-1] == cf.g1p_qfe(g, p + 1)}, "
              f"H_{n} = {factor} * H_{m}, printed factor {printed}")
    rep = cf.g2k_chain(g, 3)
    print("  failing checks:", sorted({c.name for c in rep.failures}) or "none")
