"""Galois duals, hulls and MDS checks for small codes."""
# %%
import numpy as np

from galois_hulls import LinearCode, field_create, galois_dual, hull, hull_dim_bruteforce, is_mds

F = field_create(3, 2)  # modulus x^2 + 1
alpha = 3               # the class of x, alpha^2 = -1

C = LinearCode(F, [[1, alpha]])
D = galois_dual(C, 1)
print("1-Galois dual of span{(1, alpha)}:", D.gen.tolist())
print("hull dimension:", hull(C, 1).dim)

# %% the double dual with the complementary exponent gives the code back
rng = np.random.default_rng(0)
C = LinearCode(F, rng.integers(0, 9, size=(3, 6)))
for e in range(F.h):
    D = galois_dual(C, e)
    back = galois_dual(D, (F.h - e) % F.h)
    print(f"e={e}: dim C + dim dual = {C.k + D.k}, double dual equal: {back.same_space(C)}")

# %% linear algebra and exhaustive counting agree on the hull
for e in range(F.h):
    print(f"e={e}: hull {hull(C, e).dim} vs exhaustive {hull_dim_bruteforce(C, e)}")
print("MDS verdict:", is_mds(C))
