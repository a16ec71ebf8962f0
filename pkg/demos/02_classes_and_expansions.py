"""Classes of finite structures and their order expansions.

Enumerate a few builtin classes up to isomorphism, run the bounded Fraisse
sanity checks, and count how many ways a graph can be linearly ordered.
"""

# %%
from relramsey import (
    builtin_class,
    check_ap,
    check_hp,
    check_jep,
    enumerate_expansions,
    graph,
    load_user_class,
    pair_from_string,
    precompactness_count,
)
from relramsey.structures import automorphisms

# %% counts by size
for name in ("graphs", "posets", "ordered_graphs", "ultrametric{S=[1,2]}", "ordered_ultrametric{S=[1,2]}"):
    K = builtin_class(name)
    print(f"{K.name:32s}", [len(K.members(n)) for n in range(1, 5)])

# %% a user class: triangle-free graphs, given by a forbidden substructure
tri = graph(3, [(0, 1), (1, 2), (0, 2)])
tf = load_user_class({
    "name": "triangle_free",
    "signature": [{"name": "E", "arity": 2}],
    "axioms": ["symmetric(E)", "irreflexive(E)", "forbidden-substructures"],
    "forbidden": [tri.to_dict()],
})
print("triangle-free:", [len(tf.members(n)) for n in range(1, 6)])

# %% hereditary, joint embedding and amalgamation up to size 3
G = builtin_class("graphs")
for rep in (check_hp(G, 3), check_jep(G, 3), check_ap(G, 3)):
    print(rep.property, rep.holds, "-", rep.message)

# %% ordered expansions are rigid, so a graph G has n!/|Aut(G)| of them up to isomorphism
pair = pair_from_string("graphs:ordered_graphs")
examples = {
    "edge + point": graph(3, [(0, 1)]),
    "path P3": graph(3, [(0, 1), (1, 2)]),
    "triangle": graph(3, [(0, 1), (1, 2), (0, 2)]),
    "two disjoint edges": graph(4, [(0, 1), (2, 3)]),
}
for label, H in examples.items():
    ex = enumerate_expansions(pair, H)
    print(f"{label:20s} {len(ex.based):3d} on the fixed universe, {len(ex.up_to_iso)} up to iso; |Aut| = {len(automorphisms(H))}")

# %% precompactness table: maximum number of expansions per size
print(precompactness_count(pair, 4))
print(precompactness_count(pair_from_string("linear_orders:ordered_ultrametric{S=[1,2]}"), 4))
