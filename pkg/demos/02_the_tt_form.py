# %% [markdown]
# # The (t,t)-form of an arc
#
# A (t,t)-form F(X,Y) is homogeneous of degree t in X and in Y.  For the
# 12-arc of PG(2,13) there is one with F(X,a) = f_a(X) for all arc points;
# it is found as the kernel of a linear system on its 100 coefficients.

# %%
from planar_arcs import build_F, build_tangent_system, select_S, verify_F, vanishing_space
from planar_arcs import fixtures as fx
from planar_arcs.serialize import ttform_to_json

A = fx.arc12()
S = build_tangent_system(A)
S0, Sx = select_S(A)
print("socle", len(S0), "points; interpolation set", len(Sx), "points")

G = build_F(A, S, S0, Sx)
print(G, verify_F(A, S, G, Sx))

# %% normalised on x1^3 y1^3 the coefficients are small and symmetric
Gn = G.normalized_on((3, 0, 0), (3, 0, 0))
for term in ttform_to_json(Gn)["terms"]:
    print(term["c"], "x^%s y^%s" % (term["ex"], term["ey"]))

# %% the matrix of coefficients (rows: X monomials, columns: Y monomials)
M = Gn.matrix()
print(M.shape, "symmetric:", (M == M.T).all())

# %% [markdown]
# ## From F to curves through the arc
#
# The coefficients rho_w(Y) of X^w in F(X+Y,Y) - F(X,Y), for |w| = t - 1, are
# quartics vanishing on the arc.  No cubic contains the arc, so they live in
# the 3-dimensional space of quartics through it.

# %%
from planar_arcs import compute_bounds, rho_system

R = rho_system(G, compute_bounds(13, 13, A.t))
V3, V4 = vanishing_space(A.field, A.points, 3), vanishing_space(A.field, A.points, 4)
print("dim of cubics / quartics through the arc:", V3.dim, V4.dim)
for w, r in R.rhos.items():
    print(w, r.to_str(), "in quartic space:", r in V4)

# %% two coprime quartics certify the arc lies on a 0-dimensional intersection
from planar_arcs import coprime_certificate

cert = coprime_certificate(A)
print([c.to_str() for c in cert.curves], "common zeros:", cert.common_zero_count)
