"""
Building permutations of a given complexity
===========================================

Start from w0 s_i, whose opposite Rothe diagram is one box, then glue a
smaller permutation beta into the south-west corner.  Each noninversion
of beta lowers the complexity by one.
"""

from msv_complexity import analyze, opposite_rothe, parse_permutation
from msv_complexity.constructions import (
    achievable_complexities,
    compose_antidiagonal,
    w0_si,
    witness,
)

n = 7
for i in range(1, n):
    w, predicted = w0_si(n, i)
    print(f"w0 s_{i} = {w}  D° = {opposite_rothe(w).cells()}  d = {analyze(w).complexity} (predicted {predicted})")

# gluing: alpha = 54312 has its single box in the north-east 2x2 block
alpha = parse_permutation("54312")
for beta_text in ("321", "231", "132", "123"):
    beta = parse_permutation(beta_text)
    w = compose_antidiagonal(alpha, beta, 2)
    print(f"beta={beta}  |D°(beta)|={len(opposite_rothe(beta))}  w={w}  d={analyze(w).complexity}")

# one witness per achievable value
for d in achievable_complexities(n):
    print(f"d={d:>2}: {witness(n, d)}")
