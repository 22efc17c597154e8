"""Codes on unions of additive cosets with every hull dimension, over GF(81) and e = 1."""
# %%
from galois_hulls import dimension_bound, field_create, generator_matrix, hull, is_mds, recover_h
from galois_hulls import theorem_c_code, theorem_c_points

F = field_create(3, 4)
ps = theorem_c_points(F, m=1, z=1, w=3, t=2)
print(f"n = {ps.n} points, epsilon = {F.serialize_element(ps.epsilon)}")

top = dimension_bound(3, 1, ps.n, 0)
print("largest k:", top)

# %%
for extended in (False, True):
    for k in range(1, top + 1):
        for l in range(0, k if extended else k + 1):
            C = generator_matrix(theorem_c_code(ps, 1, k, l, extended))
            print(f"[{C.n},{k}] l={l}: hull {hull(C, 1).dim}, {is_mds(C)}")

# %% the l = k code is self-orthogonal with the constant witness
seed = theorem_c_code(ps, 1, top, top)
w = recover_h(seed, 1)
print("h =", w.h_poly, " lambda == epsilon:", w.lam == ps.epsilon)
