"""Linearize R(l) = (l^3 + 1)/l and read its poles and zeros off the system matrix."""
from rosenlin import RatMatrix, RatFunc, UniPoly, LAMBDA, check_rosenbrock_theorem, system_eig, transfer_function
from rosenlin.constructors import Realization, assemble_rational, build_frobenius, realization_minimal, split_poly_sp
from rosenlin.polymat import pm_det

R = RatMatrix([[RatFunc(UniPoly((1, 0, 0, 1)), LAMBDA)]])
P, Rsp = split_poly_sp(R)
print("polynomial part:", P, " strictly proper part:", Rsp)

real = Realization([[0]], [[1]], [[1]])
print("realization minimal:", realization_minimal(real))
L = assemble_rational(real, build_frobenius(P))
print("L(l) =")
print(L.S)
print("det L =", pm_det(L.S))
print("transfer =", transfer_function(L).G)

rep = check_rosenbrock_theorem(L, [0, -1])
for row in rep.points:
    print(row)

print("finite eigenvalues:", system_eig(L).eigenvalues)
