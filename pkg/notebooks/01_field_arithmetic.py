"""Working in GF(81): canonical modulus, generator, Frobenius and roots."""
# %%
from galois_hulls import field_create, frobenius, in_subfield, nth_root

F = field_create(3, 4)
print(F)
print("generator digits (highest power first):", F.element_digits(F.generator))

# %% Frobenius powers cycle with period h
g = F.gen
orbit = [frobenius(g, e) for e in range(F.h + 1)]
print("g^(3^e) for e = 0..4:", [F.serialize_element(x.value) for x in orbit])
assert orbit[0] == orbit[-1]

# %% the prime field and GF(9) sit inside GF(81) as Frobenius fixed points
print("GF(3) inside:", F.subfield(1))
print("GF(9) inside:", F.subfield(2))
print("g^10 in GF(9)?", in_subfield(g**10, 2), "  g in GF(9)?", in_subfield(g, 2))

# %% 4th roots of subfield elements always exist when 4 | h/m
for c in (1, 2):
    v = nth_root(F(c), 4)
    print(f"4th root of {c}: {v}  check {v ** 4}")
