"""Exact construction and verification of linearizations through polynomial system matrices."""
from .exactalg import LAMBDA, RatFunc, UniPoly
from .polymat import Pencil, PolyMatrix, RatMatrix
from .canon import gcd_minors_oracle, local_orders_at, smith_form, smith_mcmillan
from .rosenbrock import SystemMatrix, check_rosenbrock_theorem, is_minimal, transfer_function
from .constructors import (BlockKroneckerSpec, CorkSpec, PreconditionError, Realization, RecurrenceBasis,
                           assemble_rational, build_block_kronecker, build_comrade, build_cork, build_extended_bk,
                           build_frobenius)
from .verify import verify_linearization, verify_strong_direct, verify_strong_local
from .numeig import pencil_eig, system_eig

__version__ = "0.1.0"
