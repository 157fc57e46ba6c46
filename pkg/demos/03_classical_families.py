"""
Equal-degree pairs in the classical families
============================================

Types A, B and D have explicit pairs of the form a*omega_1 + b*omega_2 with
a in {0, 1}; closed-form degrees are checked against the Weyl formula.
"""

from weyldeg import build_datum, family_A, family_B, family_D, weyl_dim

#%%

for maker, ranks in ((family_A, range(3, 8)), (family_B, range(3, 8)), (family_D, range(4, 9))):
    for l in ranks:
        w = maker(l)
        d = build_datum([w.type])
        print(
            f"{str(w.type):4} lambda={w.lam[:2]} mu={w.mu[:2]} "
            f"closed={w.degree} weyl={weyl_dim(d, w.lam)}/{weyl_dim(d, w.mu)}"
        )
