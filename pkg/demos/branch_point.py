"""What happens when a_n = c_n stops the parameter recursion.

With a = c the two-step reduction breaks down, but four steps map E(x) back
to the same family with parameters (-d, b, -(a + 2d), d).  The script walks
the four intermediate equations and evaluates H_n through the composed
ledger, then compares with brute force.
"""

from fractions import Fraction

from hankelcf import EParams, build_e_qfe, run_shifts
from hankelcf import closed_forms as cf

p = EParams(2, 1, 2, Fraction(1, 3))
trace, ledger = run_shifts(build_e_qfe(p), 4)
for q, step in zip(trace[1:], ledger.steps):
    print(f"{step.case_tag:>10}  shift {step.shift}  ->  {q}")
print("lands on E-family with", cf.lemma2_next_params(p), ":",
      trace[-1] == build_e_qfe(cf.lemma2_next_params(p)))

res = cf.lemma2_chain(p, 12)
print("composed values == brute force:", res.values == cf.oracle_table(build_e_qfe(p), 12))
print("H_n:", [str(v) for v in res.values])
names = sorted({c.name for c in res.report.discrepancies})
print("printed relations / shapes that disagree:", names)
