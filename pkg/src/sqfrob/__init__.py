"""Square and k-power Frobenius numbers of numerical semigroups."""

from .arith import (ApSemigroup, DTooSmall, LambdaProfile, MuJ, ap_contains,
                    ap_frobenius, bound_B, bound_edge, decompose,
                    lambda_profile, mu_j, square_in_ap)
from .closedform import (BadResidue, ClosedFormAnswer, EvenInput,
                         floor_half_sqrt2, floor_sqrt2, floor_sqrt3,
                         sq_frob_d1, sq_frob_d2, sq_frob_d3, sq_frob_d4,
                         sq_frob_d5, square_frobenius_closed, u,
                         u_index_set_member)
from .core import (AperyTable, EmptyGenerators, FullSemigroup, NegativeInput,
                   NonCoprime, NotAGenerator, NumericalSemigroup,
                   SemigroupError, ZeroGenerator, apery_set, contains,
                   frobenius, gaps, genus, make_semigroup)
from .power import (PowerFrobResult, isqrt, kth_root_floor,
                    power_frobenius_oracle, power_min_oracle)
from .verify import (ExceptionRecord, ExceptionReport, SweepReport,
                     compare_table1, exception_set, load_table1, load_table2,
                     reproduce_table2, verify_bound_equality,
                     verify_conjectures, verify_min_power_theorem,
                     verify_theorem_bound)

__version__ = "0.1.0"
