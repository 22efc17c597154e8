"""GRS codes, dual-membership witnesses and the (h, lambda) certificate of self-orthogonality."""
# %%
from galois_hulls import (
    GrsSpec,
    check_self_orthogonal,
    compute_u,
    dual_membership_witness,
    field_create,
    find_self_orthogonal_seed,
    generator_matrix,
    recover_h,
)

G5 = field_create(5, 1)
spec = GrsSpec(G5, (0, 1, 2), (1, 1, 1), 2)
print("u for a = (0, 1, 2):", compute_u(G5, spec.a))
print(generator_matrix(spec).gen)
print("extended:", generator_matrix(GrsSpec(G5, (0, 1, 2), (1, 1, 1), 2, True)).gen.tolist())

# %% a codeword is in the dual exactly when the interpolated g has low degree
G3 = field_create(3, 1)
bad = GrsSpec(G3, (0, 1), (1, 1), 1)
print("witness for (1, 1) over GF(3):", dual_membership_witness(bad, [1], 0))

# %% search a Hermitian self-orthogonal seed over GF(81) and recover its certificate
F = field_create(3, 4)
seed, w = find_self_orthogonal_seed(F, (0, 1, 2, 3), 1, 2)
print("multipliers:", seed.v, "self-orthogonal:", check_self_orthogonal(seed, 2))
rec = recover_h(seed, 2)
print("h =", rec.h_poly, "lambda =", rec.lam, "deg h =", rec.deg_h)
