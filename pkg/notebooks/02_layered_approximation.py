"""
Layered approximation on binary trees
=====================================

Cut a rooted binary tree into L classes of short pieces, solve every piece
exactly, keep the best class.  The best class is worth at least (1 - 1/L)
of the optimum.
"""

# %%
from commonprefix import choose_block_height, decompose, solve_approx, solve_exact
from commonprefix.generators import gen_binary_tree

tree = gen_binary_tree(14, 4, 1, 3, seed=7)
dec = decompose(tree, root=0, L=3)
for c, (pieces, cut) in enumerate(zip(dec.classes, dec.deleted_edges)):
    print(f"class {c}: deletes {len(cut)} edges, pieces {pieces}")

# %%
# Every edge is deleted by exactly one class.
print(sorted(e for cut in dec.deleted_edges for e in cut) == list(tree.edges))

# %%
exact = solve_exact(tree).value
for L in (2, 3, 4):
    res = solve_approx(tree, 0, L, exact_value=exact)
    print(f"L={L} classes={res.class_values} best={res.layer_value} "
          f"stitched={res.realized_value} exact={exact} guarantee={res.guarantee_holds}")

# %%
# Block height from an accuracy target, or the default floor(log2 log2 n).
print(choose_block_height(1000, epsilon=0.25), choose_block_height(2**16))

# %%
# Large trees are out of reach for the exact solver but fine piecewise.
big = gen_binary_tree(1000, 6, 1, 4, seed=1)
res = solve_approx(big, 0, choose_block_height(big.n))
print(res.L, res.layer_value, res.realized_value)
