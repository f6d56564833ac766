# %% [markdown]
# # An arc on the Klein quartic over GF(29)
#
# The curve x1^3 x2 + x2^3 x3 + x3^3 x1 = 0 has 24 points over GF(29), and no
# three of them are collinear.  The arc has deficiency 7, and the septics
# through it include the 10-dimensional space of multiples of the quartic.

# %%
import numpy as np

from planar_arcs import GF, all_points, coprime_combination, trivariate_gcd, validate_arc, vanishing_space
from planar_arcs import fixtures as fx
from planar_arcs.bounds import compute_bounds
from planar_arcs.linalg import rank
from planar_arcs.poly import HomPoly, monomials

F = GF(29)
h = fx.quartic24()
A = validate_arc(F, [x for x in all_points(F) if h(x) == 0])
print(len(A), "points, t =", A.t)

# %% an arc on a quartic has at most 25 points
print(compute_bounds(29, 29, curve_degree=4).to_json())

# %% septics through the arc
V = vanishing_space(F, A.points, 7)
multiples = np.array([(h * HomPoly.monomial(F, e)).vector() for e in monomials(3)])
print("dim", V.dim, "of which multiples of h:", rank(F, multiples))

# %% a septic through the arc sharing no component with h
basis = V.basis
f, g = next((f, g) for i, f in enumerate(basis) for g in basis[i + 1:] if trivariate_gcd(f, g).degree == 0)
c = coprime_combination(f, g, h)
print(c.to_str())
print("gcd with h:", trivariate_gcd(c, h).to_str())
