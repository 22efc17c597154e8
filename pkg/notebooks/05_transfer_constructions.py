"""Moving a self-orthogonal seed to other Galois exponents e'."""
# %%
from galois_hulls import (
    dimension_bound,
    field_create,
    find_self_orthogonal_seed,
    generator_matrix,
    hull,
    is_mds,
    recover_h,
    theorem_a_construct,
    theorem_b_construct,
    theorem_c_code,
    theorem_c_points,
)
from galois_hulls.constructions import theorem_a_plan

F = field_create(3, 4)

# %% e = gcd(e', h) = 1 with h / e = 4 even: seeds at e = 1 feed e' = 1 and e' = 3
seed = theorem_c_code(theorem_c_points(F, 1, 2, 1, 2), 1, 2, 2)
for ep in (1, 3):
    for k in range(1, dimension_bound(3, ep, seed.n, 0) + 1):
        for l in range(k + 1):
            C = generator_matrix(theorem_a_construct(seed, ep, k, l))
            print(f"e'={ep} k={k} l={l}: hull {hull(C, ep).dim}, {is_mds(C)}")
plan, _ = theorem_a_plan(seed, 3, 1, 0)
print("twist plan for e'=3:", plan)

# %% h / gcd(e', h) odd: a Hermitian seed feeds e' = 0
herm, w = find_self_orthogonal_seed(F, (0, 1, 2, 3), 1, 2)
print("Hermitian seed witness: deg h =", recover_h(herm, 2).deg_h)
for l in (0, 1):
    C = generator_matrix(theorem_b_construct(herm, 0, 1, l))
    print(f"e'=0 l={l}: hull {hull(C, 0).dim}, {is_mds(C)}")
