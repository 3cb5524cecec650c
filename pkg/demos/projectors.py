"""Diagrams, Jones-Wenzl projectors and theta nets at generic q.

Run: python demos/projectors.py
"""

from tlj import (
    basis,
    check_jw,
    compose,
    generator_u,
    jw,
    partial_trace,
    qint,
    theta_formula,
    trace,
)
from tlj.nets import evaluate_net, fusion_coefficients, theta_net

# TL_3 has five basis diagrams; the Jones relation holds exactly.
print("basis(3, 3):")
for p in basis(3, 3):
    print("  ", p)
u1, u2 = generator_u(1, 3), generator_u(2, 3)
print("U1 U2 U1 == U1:", compose(u1, compose(u2, u1)) == u1)

# The second projector, with and without diagram names.
print()
print("p_2 =", jw(2).render(names=True))
print("p_2 =", jw(2).render())

# Each projector is idempotent, killed by caps and cups, and has trace [n+1].
for n in range(6):
    rep = check_jw(jw(n))
    print(f"p_{n}: ok={rep.ok}  trace = {trace(jw(n))}")

# Closing one strand of p_4 leaves [5]/[4] p_3.
print("partial trace rule at n=4:", partial_trace(jw(4)) == jw(3).scale(qint(5) / qint(4)))

# Theta values: the closed form agrees with evaluating the drawn net.
print()
for t in [(1, 1, 2), (2, 2, 2), (3, 2, 1)]:
    print(f"theta{t} = {theta_formula(*t)}   (net: {evaluate_net(theta_net(*t)) == theta_formula(*t)})")

# p_1 x p_1 splits as p_0 and p_2 with these weights.
print()
for k, lam in fusion_coefficients(1, 1):
    print(f"  k={k}: {lam}")
