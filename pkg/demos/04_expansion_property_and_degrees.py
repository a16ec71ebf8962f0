"""The expansion property and Ramsey degree bounds.

For the disjoint union of an edge and a point, find the smallest graph B
such that every ordering of B contains all three ordered versions of it.
Then bound the Ramsey degree of the 3-vertex path.
"""

# %%
from relramsey import expansion_property_check, graph, pair_from_string, ramsey_degree_bounds, verify_certificate
from relramsey.structures import Structure

pair = pair_from_string("graphs:ordered_graphs")

# %%
cert = expansion_property_check(pair, graph(3, [(0, 1)]), n_max=8)
print(cert.report)
B = Structure.from_dict(cert.detail["B"])
print("witness edges:", sorted(e for e in B.rel("E") if e[0] < e[1]))
print("graphs rejected on the way:", len(cert.replay["rejected"]))
print(verify_certificate(cert).message)

# %%
P3 = graph(3, [(0, 1), (1, 2)])
db = ramsey_degree_bounds(pair, P3, k=2, n_max=4)
print(db.report)
print("upper", db.upper, "lower", db.lower, "evidence certificates:", len(db.evidence))
