"""Exact Kronecker coefficients, their bounds, and q-binomial unimodality checks."""

from ._backend import BACKEND
from .bounds import (BoundReport, check_manivel, full_report, lower_character,
                     lr_coefficient, lr_upper_bound, upper_binomial_product,
                     upper_contingency, upper_dimension, upper_min, upper_schur)
from .characters import (CharacterStore, character, class_size, dimension,
                         gl_dimension)
from .errors import ConsistencyError, DomainError, ResourceLimitError
from .kronecker import (ContingencySpec, count_contingency, kronecker,
                        kronecker_alternating, symmetry_check)
from .partitions import Partition, conjugate, enumerate_partitions
from .qbinomial import (IntPolynomial, almkvist_recurrence_check, delta,
                        distinct_odd_poly, effective_gap_bound, gaussian_binomial,
                        is_symmetric_unimodal, stanley_difference)
from .stability import (ReductionOutcome, StabilitySequence, kstab_condition,
                        reduce, stability_sequence, stable_kronecker, tail_bound_u)

__version__ = "0.1.0"
