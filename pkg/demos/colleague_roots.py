"""Roots of a Chebyshev series through the colleague pencil and through a Chebyshev CORK pencil."""
import numpy as np

from rosenlin import PolyMatrix, RecurrenceBasis, UniPoly, build_comrade, build_cork, system_eig
from rosenlin.constructors import expand_in_basis, recurrence_cork_spec

roots = [1, 2, 3, 4, 5]
P = PolyMatrix([[UniPoly.from_roots(roots)]], rows=1, cols=1)
cheb = RecurrenceBasis.chebyshev(len(roots) + 1)
coeffs = expand_in_basis(P, cheb)
print("Chebyshev coefficients:", [str(c[0][0]) for c in coeffs])

for name, sm in (("colleague", build_comrade(coeffs, cheb)),
                 ("CORK", build_cork(recurrence_cork_spec(coeffs, cheb)))):
    ev = np.sort(np.real(system_eig(sm).eigenvalues))
    print(f"{name:<10} eigenvalues {np.round(ev, 12)}  max error {np.max(np.abs(ev - roots)):.1e}")
