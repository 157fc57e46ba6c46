"""
Smallest equal-degree pairs for exceptional types, A2 and B2
============================================================

Enumerate every dominant weight up to a degree bound, identify weights that
differ by a diagram automorphism, and report the degrees that still occur
twice.
"""

from weyldeg import SearchConfig, find_coincidences, verify_prop2
from weyldeg.search import PROP2_TABLE, e6_graph_remark

#%%
# In A2 with automorphisms ignored, dual pairs like (1,0) and (0,1) collide.
# With them identified, the first real coincidence is at degree 15.

for g in find_coincidences("A2", SearchConfig(15, modulo_automorphisms=False)):
    print("raw", g.degree, g.weights)
for g in find_coincidences("A2", SearchConfig(15)):
    print("mod automorphisms", g.degree, g.weights)

#%%
# The full table, with a scan showing nothing smaller exists. The E7 and E8
# rows are gated behind ``extended``.

for row in PROP2_TABLE:
    rep = verify_prop2(row, bounded=True, extended=True)
    print(f"{row.type:3} {row.degree:>12}  ok={rep.ok}  group={rep.group_at_degree.weights}")

#%%
# E6 has a graph automorphism, so 2*omega_6 and omega_5 give the same degree.

print("E6 remark problems:", e6_graph_remark())
