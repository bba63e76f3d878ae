try:
    from ea2hg.version import __version__ as __version__
except ImportError:
    __version__ = "unknown"

from ea2hg.classify import (AutDescriptor, ClosedDescriptor, IsoClassStat,
                            aut_descriptor, aut_groups_isomorphic,
                            count_closed, count_closed_of_size,
                            count_strongly_normal,
                            count_strongly_normal_of_size, dimension,
                            enumerate_closed, find_basis, frattini_fast,
                            is_isomorphic, is_nilpotent_fast,
                            is_residually_thin_fast, iso_class_stats,
                            isomorphism_witness, materialize,
                            num_iso_classes_within, recognize)
from ea2hg.ea2_core import Signature, multiply, plus_minus, s_of, to_table
from ea2hg.errors import (Ea2hgError, GuardError, NotClosedError,
                          ValidationError)
from ea2hg.gf2_linalg import (Gf2Subspace, enumerate_subspaces,
                              gaussian_binomial, gl2_order, span)
from ea2hg.hg_kernel import TableHypergroup, validate_axioms

__all__ = [
    "AutDescriptor",
    "ClosedDescriptor",
    "Ea2hgError",
    "Gf2Subspace",
    "GuardError",
    "IsoClassStat",
    "NotClosedError",
    "Signature",
    "TableHypergroup",
    "ValidationError",
    "aut_descriptor",
    "aut_groups_isomorphic",
    "count_closed",
    "count_closed_of_size",
    "count_strongly_normal",
    "count_strongly_normal_of_size",
    "dimension",
    "enumerate_closed",
    "enumerate_subspaces",
    "find_basis",
    "frattini_fast",
    "gaussian_binomial",
    "gl2_order",
    "is_isomorphic",
    "is_nilpotent_fast",
    "is_residually_thin_fast",
    "iso_class_stats",
    "isomorphism_witness",
    "materialize",
    "multiply",
    "num_iso_classes_within",
    "plus_minus",
    "recognize",
    "s_of",
    "span",
    "to_table",
    "validate_axioms",
]
