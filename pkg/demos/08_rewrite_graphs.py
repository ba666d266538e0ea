"""The one-step rewrite graph on strict trees of a fixed value.

Vertices are all strict trees evaluating to n; edges apply one local rule
(commutativity, associativity, or a distribution law) at one node, with
the result required to stay strict, keep value n, and fit in 2n - 1 nodes.
The graph is disconnected in general: some encodings, like the pure power
tower for n = 4, have no legal single-step rewrite at all.
"""

from formula_forge import build_graph, count_ame, evaluate, neighbors, to_prefix

print("= the smallest interesting graphs =")
for n in (3, 4, 5):
    g = build_graph(n)
    print(f"G_{n}: {g.stats()}")
print()

g4 = build_graph(4)
isolated = [v for v in g4.vertices if not g4.adjacency[v]]
print("isolated vertices of G_4:", sorted(to_prefix(v) for v in isolated))
print()

print("= a vertex and its neighborhood =")
seed = ("+", 1, ("+", 1, ("+", 1, 1)))
for t, rule in sorted(neighbors(seed), key=lambda p: to_prefix(p[0])):
    print(f"{to_prefix(seed)} --{rule.value}--> {to_prefix(t)}")
print()

print("= component census =")
print(" n  vertices  edges  components  largest")
for n in range(3, 10):
    g = build_graph(n)
    comps = g.components()
    largest = max(len(c) for c in comps)
    assert len(g.vertices) == count_ame(n)
    assert all(evaluate(v) == n for v in g.vertices)
    print(f"{n:>2}  {len(g.vertices):>8}  {g.edge_count:>5}  {len(comps):>10}  {largest:>7}")
print()

print("= DOT output (pipe to graphviz) =")
print(build_graph(3).to_dot())
