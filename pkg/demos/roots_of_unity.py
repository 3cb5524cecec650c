"""What changes at q = exp(pi i / n): truncation, negligibles and 6j symbols.

Run: python demos/roots_of_unity.py
"""

import itertools

from tlj import jw, qint, specialize, trace
from tlj.fusion import (
    is_negligible,
    negligible_vertex,
    orthogonality_check,
    sixj,
    sixj_range,
    truncated_fusion,
)
from tlj.nets import admissible, theta_formula

n = 4
print(f"root parameter n = {n}, simple labels 0..{n - 2}")
print("[n] specializes to", specialize(qint(n), n))
print("[2] specializes to", specialize(qint(2), n))

# p_{n-1} still exists but has zero trace, so it is negligible.
p = jw(n - 1, n)
print(f"trace(p_{n - 1}) = {trace(p)}, negligible: {is_negligible(p)}")

# Theta vanishes exactly on the negligible triples.
for t in itertools.product(range(n - 1), repeat=3):
    if admissible(*t):
        print(f"  theta{t} = {specialize(theta_formula(*t), n)}   negligible: {negligible_vertex(*t, n)}")

print()
print("truncated fusion tables:")
for a, b in itertools.product(range(n - 1), repeat=2):
    terms = ", ".join(f"{k}: {lam}" for k, lam in truncated_fusion(a, b, n))
    print(f"  {a} x {b} -> {terms}")

# The recoupling matrix for corners (1, 1, 1, 1) is its own inverse up to the
# index swap, which is the orthogonality relation.
print()
js = sixj_range(1, 1, 1, 1, n)
for j in js:
    row = [sixj(1, 1, i, 1, 1, j, n) for i in js]
    print(f"  j={j}:", "  ".join(str(x) for x in row))
print("orthogonal:", all(orthogonality_check(1, 1, 1, 1, j, k, n) for j in js for k in js))
