"""Ordered ultrametric spaces with distances {1, 2}.

With an arbitrary order, a 3-point space whose closest pair is split by the
order cannot be forced monochromatic by 2-colouring points, at least for
every host up to 6 points. The scan reports this as bounded evidence.
"""

# %%
from relramsey import builtin_class, find_ramsey_witness, rigidity_scan, verify_certificate
from relramsey.structures import ORDER, Structure

K = builtin_class("ordered_ultrametric{S=[1,2]}")
d1, d2 = K.signature.names[:2]

# %% B: points 0 < 1 < 2, d(0,2) = 1, point 1 at distance 2 from both
B = Structure.build(K.signature, 3, {
    d1: [(0, 2), (2, 0)],
    d2: [(0, 1), (1, 0), (1, 2), (2, 1)],
    ORDER: [(0, 1), (0, 2), (1, 2)],
})
A = Structure.build(K.signature, 1, {})
assert B in K

# %%
cert = find_ramsey_witness(K, B, A, k=2, l=1, n_max=6)
print(cert.verdict)
print(cert.report)
print(verify_certificate(cert).message)

# %% every order expansion here is rigid
print(rigidity_scan(K, 4).report)
