"""Exact computation of pushforward decompositions of line bundles under
finite toric endomorphisms, with Cox-ring machinery and independent
verification oracles."""

from .cox import (CoxEndomorphism, CoxRing, ShiftList, contracting_exponent,
                  cox_ring, graded_dimension, induced_cox_endo, module_shifts,
                  pic_coset_decomposition, rank_bookkeeping)
from .divisors import (PicLattice, Positivity, class_group, h0, h0_class,
                       positivity)
from .endos import (ToricEndomorphism, build_endo, compose, degree,
                    fixed_classes, is_int_amplified, multiplication_endo,
                    pullback_divisor, pullback_matrix)
from .errors import (EndoError, FanError, InputError, LatticeError,
                     ToricError, VerificationError)
from .fans import (Fan, FanReport, hirzebruch, product_fan, projective_space,
                   standard_fan, validate_fan)
from .lattice import (IntMatrix, SnfResult, cone_is_smooth, coset_reduce,
                      coset_representatives, smith_normal_form)
from .pushforward import (Decomposition, VerificationReport,
                          decompose_pushforward, iterate_coherence,
                          verify_decomposition)

__version__ = "0.1.0"

__all__ = [
    "CoxEndomorphism", "CoxRing", "Decomposition", "EndoError", "Fan",
    "FanError", "FanReport", "InputError", "IntMatrix", "LatticeError",
    "PicLattice", "Positivity", "ShiftList", "SnfResult", "ToricEndomorphism",
    "ToricError", "VerificationError", "VerificationReport", "build_endo",
    "class_group", "compose", "cone_is_smooth", "contracting_exponent",
    "coset_reduce", "coset_representatives", "cox_ring",
    "decompose_pushforward", "degree", "fixed_classes", "graded_dimension",
    "h0", "h0_class", "hirzebruch", "induced_cox_endo", "is_int_amplified",
    "iterate_coherence", "module_shifts", "multiplication_endo",
    "pic_coset_decomposition", "positivity", "product_fan",
    "projective_space", "pullback_divisor", "pullback_matrix",
    "rank_bookkeeping", "smith_normal_form", "standard_fan", "validate_fan",
    "verify_decomposition",
]
