"""Chains that return to where they started.

Under m*ac + b2^2 = 0 the reduced function G_2 comes back to itself after a
fixed number of index-shifting steps (4, 6 and 10 for m = 1, 2, 3), which
makes the determinant sequence periodic up to explicit factors.
"""

from hankelcf import build_g_qfe, periodicity_detect, run_shifts
from hankelcf import closed_forms as cf

for which, m in (("ex2_ac", 1), ("ex3_2ac", 2), ("ex4_3ac", 3)):
    g = cf.example_params(which, 1, 1, 1)
    g2 = cf.g24_reduction_chain(g).g2
    trace, ledger = run_shifts(g2, 12)
    period = periodicity_detect(trace, ledger)
    h = cf.oracle_table(build_g_qfe(g), 23)
    zeros = [n for n, v in enumerate(h) if v == 0]
    print(f"{m}ac + b2^2 = 0  (c = {g.c}): G_2 recurs after {period.shifting_steps} shifting steps; "
          f"zeros of H_0..H_23 at {zeros}")

g = cf.example_params("ex3_2ac", 1, 1, 1)
h2 = cf.oracle_table(cf.g24_reduction_chain(g).g2, 14)
print("\nm = 2, ratio H_k(G_2) / H_(k-8)(G_2):")
for k in range(8, 15):
    if h2[k - 8]:
        print(f"  k={k:>2}: {h2[k] / h2[k - 8]}   printed factor {cf.example3_printed_factor(g.b2, k)}")
