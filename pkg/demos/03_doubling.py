# %% [markdown]
# # Doubling a half
# A half is a quadrangulation with one marked edge whose other vertices all
# have degree at least 3. Gluing it to a half-turned copy and doubling the
# marked edge gives an irreducible quadrangulation with a parallel pair.

# %%
from muqgen import automorphism_count, double_half, emit_rotsys, extract_half, halves_of
from muqgen.fixtures import CUBE

cube = CUBE()
(half,) = halves_of(cube)       # the cube is edge-transitive
print("marked", half.v, half.w, "degree sum", half.degree_sum())

# %%
p, x, y, pair = double_half(half, side=0, return_marks=True)
print(p)
print("degrees of glued vertices:", p.degree(x), p.degree(y))
print("region sizes:", [c.region_sizes() for c in p.parallel_classes()])
print("irreducible:", p.is_irreducible(), " automorphisms:", automorphism_count(p))

# %% Cutting one region back out returns the cube with its marked edge
back = extract_half(p)
print(back.code() == half.code())

# %%
print(emit_rotsys([p]))
