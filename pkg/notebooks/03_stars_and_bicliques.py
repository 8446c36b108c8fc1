"""
Stars, nested neighbourhoods and bicliques
==========================================

A star instance is a bipartite graph in disguise: leaves on one side, center
labels on the other.  Nested Neighborhoods (NN) sits between the maximum
edge biclique (EBCS) and the harmonic bound.
"""

# %%
from commonprefix import (
    evaluate, extract_prefix_biclique, harmonic, nn_to_star, ratio_experiment, solve_ebcs_exact,
    solve_exact, solve_nn_exact, star_to_nn, tight_family, translate_nn_to_cp,
)

G = tight_family(6)
print([sorted(a) for a in G.adjacency])
star = nn_to_star(G)
nn = solve_nn_exact(G)
print("NN:", nn.cost, "CP on star:", solve_exact(star).value, "EBCS:", solve_ebcs_exact(G).edge_count)

# %%
# An NN solution translates into an assignment on the star of at least the same value.
assignment = translate_nn_to_cp(nn, star)
print(evaluate(star, assignment).total)

# %%
# The best prefix biclique of a nested chain keeps at least a 1/H_k share.
B = extract_prefix_biclique(nn, G)
print(B.edge_count, ">=", nn.cost / harmonic(len(nn.chain)))

# %%
# Exact ratio reports on the tight family.
for n in (4, 8, 12):
    rep = ratio_experiment(tight_family(n))
    print(n, rep.ebcs, rep.nn, rep.ratio, float(rep.h_bound), rep.sandwich_ok)

# %%
# CP on a star can beat NN.  Here the leaf {a, c} matches just the 'a' of the
# center prefix a b c, which NN cannot express with one restriction set V'.
from commonprefix import CPInstance

star = CPInstance.from_lists([(0, 1), (0, 2), (0, 3)], [set("abc"), set("abc"), set("ac"), set("ab")])
print("CP:", solve_exact(star).value, "NN:", solve_nn_exact(star_to_nn(star, 0)).cost)
