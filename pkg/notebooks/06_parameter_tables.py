"""Dimension bounds of the worked examples and the admissible parameter families."""
# %%
from galois_hulls import bound_comparison, dimension_bound, hermitian_bound
from galois_hulls import tables

for name in ("example1", "example5", "example5-part2"):
    print(name, [(r["e_prime"], r["k_max"]) for r in tables.example_rows(name)])
print("thresholds:", tables.remark_thresholds())

# %% the larger range versus the Hermitian one
p, h, n, d = 3, 6, 520, 7
for ep in range(h // 2):
    print(f"e'={ep}: k <= {dimension_bound(p, ep, n, d)} vs {hermitian_bound(p, h, n)}, "
          f"condition met: {bound_comparison(p, h, ep, d, n)}")

# %% parameter families
print("gcd families:", tables.table3(8))
print("odd-quotient families:", tables.table4(10))
print("coset families up to 7^8:", tables.table5(7**8))
rows = list(tables.enumerate_class(5, 100, h_filter=4))
print(len(rows), "coset rows over GF(81); first:", rows[0])
