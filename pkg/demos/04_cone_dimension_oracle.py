"""
Cone dimension two ways
=======================

The weight cone of Y_w is spanned by e_i - f_j for the cells of L(w).
Its dimension is the number of graph vertices minus components; here it
is compared with the exact integer rank of the generator matrix on random
permutations of size up to 30.
"""

from msv_complexity import bundle, cone_dim_by_formula, cone_dim_by_rank, graph_of, weight_generators
from msv_complexity.survey import SplitMix64, random_permutation

rng = SplitMix64(1)
for _ in range(10):
    n = 8 + rng.below(23)
    w = random_permutation(n, rng)
    L = bundle(w).l_diagram
    gens = weight_generators(L, n)
    by_rank = cone_dim_by_rank(gens)
    by_graph = cone_dim_by_formula(graph_of(L))
    print(f"n={n:>2} |L|={len(L):>4} generators {gens.shape}  rank={by_rank:>2}  |V|-|comp|={by_graph:>2}")
