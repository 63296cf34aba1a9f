"""Build the Frobenius pencil of a 2x2 quadratic, certify it, and compute its spectrum."""
from rosenlin import PolyMatrix, build_frobenius, system_eig, transfer_function, verify_linearization
from rosenlin.constructors import build_frobenius_rev
from rosenlin.numeig import recover_and_check
from rosenlin.polymat import pm_det
from rosenlin.rosenbrock import unimodular_witnesses
from rosenlin.verify import verify_strong_direct

# P(l) = l^2 I + l [[0,1],[1,0]] + diag(-2, -3)
P = PolyMatrix.from_coeffs([[[-2, 0], [0, -3]], [[0, 1], [1, 0]], [[1, 0], [0, 1]]])
sm = build_frobenius(P)
print("system matrix S(l):")
print(sm.S)
print("state block det:", pm_det(sm.A))
print("transfer function:", transfer_function(sm).G)

U, V = unimodular_witnesses(sm)
print("U S V =")
print(U @ sm.S @ V)

print(verify_linearization(sm, P).summary())
print(verify_strong_direct(build_frobenius_rev(P), P, 2).summary())

eig = system_eig(sm)
print("eigenvalues:", [complex(round(z.real, 10), round(z.imag, 10)) for z in eig.eigenvalues])
print("det P(l) =", pm_det(P))
rep = recover_and_check(sm, eig, P)
print(f"max recovered residual {max(rep.max_right, rep.max_left):.2e}")
