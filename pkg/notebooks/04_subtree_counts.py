"""
Counting connected subtrees
===========================

The exact solver touches every connected subtree once, so their number is
its cost.  For binary trees of height h it never exceeds 2**(2**(h+1)).
"""

# %%
from commonprefix import CPInstance, count_subtrees


def complete(h):
    n = 2 ** (h + 1) - 1
    return CPInstance(n, tuple(((i - 1) // 2, i) for i in range(1, n)), (frozenset(),) * n)


for h in range(6):
    rep = count_subtrees(complete(h), 0)
    print(f"h={h} n={2 ** (h + 1) - 1} subtrees={rep.total} bound={rep.bound}")

# %%
# Per-vertex counts follow f(v) = prod(1 + f(child)).
rep = count_subtrees(complete(2), 0)
print(rep.per_vertex_rooted)
