# %% [markdown]
# # Tangents of an arc and the curve they lie on
#
# An arc in PG(2,q) is a set of points with no three on a line.  Through each
# arc point pass exactly t = q + 2 - |A| tangents.  Multiplying the tangent
# linear forms gives a degree-t form f_a, and with a common scaling these forms
# satisfy f_x(y) = (-1)^(t+1) f_y(x).

# %%
from planar_arcs import (GF, build_dual_curve, build_tangent_system, check_lemma_of_tangents,
                         tangent_lines, verify_dual)
from planar_arcs import fixtures as fx

A = fx.arc12()                 # 12 points of PG(2,13), t = 3
print(len(A), "points, deficiency", A.t)
print("tangents at (1,1,1):", tangent_lines(A, (1, 1, 1)))

# %% the scaled tangent forms
S = build_tangent_system(A)
for a in A.points[:3]:
    print(a, "f_a =", S[a].to_str())

# %% t is odd, so the forms are symmetric: f_x(y) = f_y(x)
x, y = A.points[2], A.points[7]
print(S[x](y), S[y](x))
print(check_lemma_of_tangents(S))

# %% breaking one form is caught with a witness pair
broken = S.with_form(x, S[x].scale(2))
print(check_lemma_of_tangents(broken))

# %% [markdown]
# ## The dual curve
#
# For q odd the tangents, viewed as points of the dual plane, lie on a curve
# phi of degree 2t.  It is interpolated from 2t + 2 arc points and satisfies
# phi(X x a) = f_a(X)^2 for every arc point a.

# %%
D = build_dual_curve(S)
print("degree", D.degree, "terms", len(D.phi.terms))
print(verify_dual(S, D))

# %% a conic in PG(2,5): the tangent lines form the dual conic
C = fx.conic_arc(GF(5))
SC = build_tangent_system(C)
print(build_dual_curve(SC).phi.to_str("z"))
