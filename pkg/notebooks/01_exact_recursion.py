"""
Exact Common Prefix on a tree
=============================

Solve small instances with the memoized edge-deletion recursion and compare
against exhaustive enumeration of every assignment.
"""

# %%
# A three-vertex path.  Vertex 1 shares {1, 2} with vertex 0 and {2, 3} with
# vertex 2; only label 2 is common to all three.
from commonprefix import CPInstance, evaluate, oracle_solve, parse_cp, serialize_solution, solve_exact

path = parse_cp("""
cp 3
edge 0 1
edge 1 2
labels 0 1 2
labels 1 1 2 3
labels 2 2 3
""")
res = solve_exact(path)
print("optimum:", res.value, " brute force:", oracle_solve(path))
print(serialize_solution(res.assignment, res.value))

# %%
# The cut trace records, for each component, how many labels all of its
# vertices share and which edge was cut next.


def show(node, indent=0):
    cut = f"cut {node.edge}" if node.edge else "leaf"
    print("  " * indent + f"{node.vertices} common={node.common} value={node.value} {cut}")
    for child in node.children:
        show(child, indent + 1)


show(res.cut_trace)

# %%
# Per-edge benefits of the reconstructed assignment add up to the optimum.
print(evaluate(path, res.assignment).per_edge)

# %%
# On a path the memo holds exactly the contiguous subpaths: n(n+1)/2 entries.
n = 30
long_path = CPInstance(n, tuple((i, i + 1) for i in range(n - 1)), ({"a", "b"},) * n)
print(solve_exact(long_path).memo_entries, n * (n + 1) // 2)
