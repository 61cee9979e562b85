"""
Diagrams and complexity of a single permutation
===============================================

Walk through the pipeline for 3412 and 54132: the opposite Rothe
diagram, its essential set, the south-west and L-diagrams, the bipartite
graph, and finally the complexity.
"""

from msv_complexity import analyze, bundle, graph_of, parse_permutation
from msv_complexity.ideal_desc import minor_generators, rank_conditions
from msv_complexity.render import RenderSpec, render

w = parse_permutation("3412")

# dots, lasers and the boxes no laser hits
print(render(w, RenderSpec(show=("dots", "lasers", "opposite_rothe"))))

b = bundle(w)
print("D°     ", b.opposite_rothe.cells())
print("ess    ", b.essential.cells())
print("dom    ", b.dominant.cells())
print("sw     ", b.southwest.cells())
print("L      ", b.l_diagram.cells())
print("L'     ", b.l_prime.cells())

# the rank conditions, and the single equation left on Y_w
for cond in rank_conditions(w):
    print("rank condition", cond)
for g in minor_generators(w, for_y=True):
    print("Y_w:", g)

g = graph_of(b.l_diagram)
print("G(3412) vertices:", g.num_vertices, "edges:", len(g.edges))

r = analyze(w, check_rank=True)
print(f"d_3412 = |L'| - |V| + |comp| = {r.card_l_prime} - {r.vertex_count} + {r.component_count} = {r.complexity}")

# a second example, through the expanded formula
r = analyze(parse_permutation("54132"))
print(
    f"d_54132 = {r.card_l} + {r.card_dominant} - {r.card_opposite_rothe}"
    f" - {r.vertex_count} + {r.component_count} = {r.complexity}"
)
