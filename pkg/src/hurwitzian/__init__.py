"""Boolean cubic forms, twisted group algebras over F_2^n and Hurwitz square identities."""
from .algebra import (AlgebraElement, basis_sign, lemma_condition, norm_mult_check,
                      norm_sq, product)
from .gf2n import (CubicForm, alpha_O_closed, basis, eval_cubic, make_alpha_O, omega,
                   wt)
from .hadamard import HadamardMatrix, hadamard_paley, hadamard_sylvester
from .identities import (Identity, build_identity, hurwitz_radon_identity,
                         render_text, verify_symbolic)
from .polarization import (TruthTable, TwistFn, beta, check_properties, delta_f,
                           is_degree_le3, second_polarization, twist_from_cubic)
from .quadruples import (QuadrupleReport, count_proper_quadruples, hypothesis_check,
                         quadruple_report)
from .sets import (VecSet, best_construction, conjecture_check_n4, construct_mod0,
                   construct_mod3, construct_mod12, hurwitzian_from_hadamard,
                   is_hurwitzian, max_hurwitzian, rho)

__version__ = "0.1.0"
