"""Relative Ramsey checks for an expansion pair.

Here the base structures are pure sets and the expansion adds a linear order.
Colour the ordered pairs of a set; a copy b of the 3-set should make each
equivalence class (increasing pairs, decreasing pairs) monochromatic.
"""

# %%
from relramsey import (
    classwise_mono_check,
    equivalence_classes_emb,
    graph,
    linear_order,
    pure_set,
    rel_arrow_emb_check,
    rel_arrow_emb_strong_check,
    rel_arrow_struct_check,
    verify_certificate,
)
from relramsey.structures import EMPTY_SIG, ordered_graph

# %% the two classes of embeddings of a 2-set into the 3-chain
for cls in equivalence_classes_emb(linear_order(3), EMPTY_SIG, pure_set(2)):
    print([e.map for e in cls])

# %% small hosts carry bad colourings of ordered pairs
for n in range(3, 7):
    cert = rel_arrow_emb_check(pure_set(n), linear_order(3), pure_set(2), k=2)
    print(n, cert.verdict, verify_certificate(cert).ok)

# %% for copies the order type of a 2-subset is always the same, so this is plain Ramsey for pairs
for n in range(3, 7):
    print(n, rel_arrow_struct_check(pure_set(n), linear_order(3), pure_set(2), k=2).verdict)

# %% strengthened form: the host now carries its own order C*
print(rel_arrow_emb_strong_check(linear_order(6), linear_order(3), pure_set(2), k=2).report)

# %% classwise consequence with graphs and ordered graphs
C = graph(4, [(0, 1), (1, 2), (2, 3)])
Bstar = ordered_graph(3, [(0, 1), (1, 2)], order=[1, 0, 2])
Astar = ordered_graph(2, [(0, 1)])
print(classwise_mono_check(C, Bstar, Astar, k=2).report)
