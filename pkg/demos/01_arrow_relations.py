"""Partition arrows between finite linear orders.

Colour the pairs of a 5-element chain red/blue so that no 3-element subchain
has all its pairs the same colour; then see that a 6-element chain admits no
such colouring. Along the way: certificates, independent replay and DIMACS.
"""

# %%
import tempfile
from pathlib import Path

from relramsey import arrow_check, linear_order, verify_certificate
from relramsey.checks import arrow_instance
from relramsey.cnf import write_dimacs

LO = linear_order

# %% LO_5 does not arrow (LO_3)^{LO_2}_2: a bad colouring exists
cert5 = arrow_check(LO(5), LO(3), LO(2), k=2)
print(cert5.report)
col = cert5.coloring
for pair, c in zip(col.domain, col.assignment):
    print(f"  pair {pair}: colour {c}")

# %% the colouring replays through the brute-force checker
print(verify_certificate(cert5).message)

# %% LO_6 does arrow; the "holds" verdict is re-derived by exhausting 2^15 colourings
cert6 = arrow_check(LO(6), LO(3), LO(2), k=2)
print(cert6.report)
print(verify_certificate(cert6).message)

# %% threads change nothing in the certificate text
assert arrow_check(LO(6), LO(3), LO(2), k=2, threads=8).to_json() == cert6.to_json()

# %% l > 1: three colours, but two allowed on each copy of B
for n in range(3, 8):
    print(n, arrow_check(LO(n), LO(4), LO(2), k=3, l=2).verdict)

# %% DIMACS export: satisfiable exactly when the arrow fails
with tempfile.TemporaryDirectory() as d:
    path = Path(d) / "lo5.cnf"
    cnf = write_dimacs(arrow_instance(LO(5), LO(3), LO(2), 2).problem, path)
    print("\n".join(path.read_text().splitlines()[:5]))
    print(f"{cnf.n_vars} variables, {len(cnf.clauses)} clauses")
