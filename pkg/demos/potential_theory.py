#!/usr/bin/env python3
"""Exact potential theory on a metric graph: Poisson problems, reduced
divisors by Dhar burning, and minimum loci of tropical functions.
"""

import skelgraph as sk
from skelgraph import GraphDivisor as D, GraphPoint as P

g = sk.fixtures.theta_graph()
print("Theta graph: two vertices, three parallel unit edges, genus",
      sk.graph_genus(g))

# Poisson: find f with laplacian(f) = (u) - (v).  Current splits 1/3
# per edge, so f climbs with slope 1/3 on each: exact fractions, no
# rounding anywhere.
t = D({P.at_vertex("u"): 1, P.at_vertex("v"): -1})
f = sk.solve_poisson(g, t, anchor="u")
print("\nPoisson solution for (u) - (v), anchored at u:")
print("  f(v) =", f.evaluate(g, "v"))
print("  slopes on e0:", [str(s) for s in f.slopes_on_edge(g, "e0")])
assert sk.laplacian(g, f) == t

# Reduced divisors: chips on the graph, reduced toward a base point.
chips = D({P.at_vertex("v"): 3})
reduced, moves = sk.reduce_divisor(g, chips, "u")
print("\n3 chips at v, reduced at u:", reduced)
assert reduced == chips - sk.laplacian(g, moves)
print("  equivalence witnessed by a tropical function with slopes",
      sorted({str(s) for e in g.edges for s in moves.slopes_on_edge(g, e.id)}))

# The canonical divisor of the theta graph is (u) + (v); a divisor
# equivalent to K with a point in the middle of e2 forces the minimum
# locus of the connecting function to be the cycle through e0 and e1.
bundle = sk.witness_cycle(g, "e1", tree=["e0"])
print("\nCycle witness for e1 with tree {e0}:")
print("  divisor:", bundle.divisor)
print("  minimum locus:", bundle.locus)
assert bundle.locus == sk.fundamental_cycle(g, ["e0"], "e1")

# Bridges and bridge chains on a dumbbell.
db = sk.fixtures.dumbbell(2)
print("\nDumbbell with a 2-edge bridge path:")
print("  bridges:", sorted(sk.bridges(db)))
chain = sk.maximal_bridge_chains(db)[0]
print("  maximal chain:", chain.edges, "endpoints", chain.endpoints)
wb = sk.witness_bridge_chain(db, chain)
print("  2-canonical witness pins the minimum locus to the chain:",
      wb.locus == chain.as_locus(db))
