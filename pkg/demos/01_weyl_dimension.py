"""
Degrees from the Weyl dimension formula
=======================================

Build a root datum, look at its positive coroots and evaluate degrees of
irreducible representations exactly.
"""

from weyldeg import build_datum, positive_coroots, scaled_weight, weyl_dim

#%%
# The positive coroots of C3 in the basis of simple coroots, sorted by height.

for b in positive_coroots("C3"):
    print(sum(b), b)

#%%
# Degrees of a few representations. Weights are coordinates in the basis of
# fundamental weights, in Bourbaki node order.

for t, w in [("A2", (1, 1)), ("G2", (0, 1)), ("E6", (1, 0, 0, 0, 0, 0)), ("E8", (0,) * 7 + (1,))]:
    print(t, w, weyl_dim(t, w))

#%%
# Products of simple groups: two copies of SL2 already have two weights of
# degree 6 that no automorphism relates.

pair = build_datum("A1+A1")
print(weyl_dim(pair, (5, 0)), weyl_dim(pair, (1, 2)))

#%%
# Scaling: the weight k(lambda + rho) - rho has degree d * k**N.

d = build_datum("A2")
for k in (1, 2, 3):
    w = scaled_weight((1, 2), k)
    print(k, w, weyl_dim(d, w), 15 * k**d.N)
