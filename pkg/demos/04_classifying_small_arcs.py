# %% [markdown]
# # Classifying arcs in small planes
#
# Arcs are grown from the standard frame one point at a time, keeping one
# representative per projective class (the least image over all frame-fixing
# projectivities).  Pruning drops arcs with too few extension points.

# %%
from planar_arcs import canonical_form, classify, conic_fit, extensions, field_of_order, kestenband

for q, size in [(7, 6), (9, 8), (11, 10), (11, 9)]:
    res = classify(field_of_order(q), size, complete_only=True)
    print(f"q={q:2d} complete arcs of size {size}: {res.count}   classes per level {res.level_counts}")

# %% every (q+1)-arc in these planes is a conic
for q in (5, 7, 9, 11):
    F = field_of_order(q)
    res = classify(F, q + 1, complete_only=False)
    print(q, [conic_fit(F, A.points).to_str() for A in res.representatives])

# %% the two complete 6-arcs of PG(2,7) in canonical form
for A in classify(field_of_order(7), 6).representatives:
    print(canonical_form(A).points)

# %% [markdown]
# ## Kestenband arcs
#
# For an odd square q, two Hermitian curves can meet in a complete arc of
# q - sqrt(q) + 1 points.

# %%
for q in (9, 25):
    A = kestenband(field_of_order(q))
    print(q, len(A), "complete:", not extensions(A))
