"""
Type C: equal degrees from a Pell equation
==========================================

In C_l, V(a w1 + b w2) and V((a-2) w1 + (b+1) w2) have the same degree exactly
when c^2 - (4l-5) a^2 = (2l-3)^2 has a solution. Pell solutions scaled by
2l-3 give infinitely many; brute force finds extra sporadic ones.
"""

from weyldeg import (
    brute_force_star,
    cf_sqrt,
    degree_C,
    digit_count,
    family_C,
    fundamental_pell,
    ratio_C,
    star_solutions,
)

#%%
# Small rank: l = 3, d = 7.

print(cf_sqrt(7), fundamental_pell(7))
for s in star_solutions(3, 3):
    print(s, ratio_C(s.a, s.b, 3), degree_C(s.a, s.b, 3))

#%%
# Brute force also sees (a, b) = (4, 1), which is not a scaled Pell solution.

print([(s.a, s.b) for s in brute_force_star(3, 200)])

#%%
# l = 159: long period, huge first scaled solution, small sporadic one.

print("period", cf_sqrt(631).r)
(w,) = family_C(159, 1)
print("a, b =", w.lam[:2])
print("degree digits:", digit_count(w.degree))
print("sporadic:", [(s.a, s.b) for s in brute_force_star(159, 1000)])
