"""Three independent routes to the same Hankel table.

E(x) = 1 / (E x^2 (x^2 - x - 1) - x^2 + x + 1) has Hankel determinants
1, 1, 2, 2, 5, 5, 13, 13, ...: every other Fibonacci number, each twice.
"""

from hankelcf import EParams, build_e_qfe, e_hankel_product, hankel_table, qfe_solve
from hankelcf.recurrences import b_sequence, theorem1_closed_form

p = EParams(1, 1, -1, 1)
N = 15

series = qfe_solve(build_e_qfe(p), 2 * N)
print("coefficients:", [str(c) for c in series.coeffs[:10]], "...")

brute = hankel_table(series, N)
product = [e_hankel_product(p, n) for n in range(N + 1)]
closed = [theorem1_closed_form(p, n) for n in range(N + 1)]

print(f"{'n':>3} {'determinant':>12} {'product':>10} {'closed':>8}")
for n in range(N + 1):
    print(f"{n:>3} {str(brute[n]):>12} {str(product[n]):>10} {str(closed[n]):>8}")

assert brute == product == closed
bs = b_sequence(p, 6)
print("B_n drives the closed form:", [str(b) for b in bs.values])
print(f"alpha = {bs.alpha}, beta = {bs.beta}")
