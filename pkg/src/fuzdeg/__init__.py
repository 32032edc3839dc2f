"""Distinct fuzzy subgroups of small finite groups: counting and commutativity degree."""

from .classes import ClassCensus, FuzzyClass, classes_with_support, classify, count_classes, enumerate_classes
from .config import RunConfig
from .degree import (
    DegreeReport,
    class_mutually_permutes,
    class_permutes,
    commutativity_degree,
    commuting_set,
    normal_and_quasinormal_counts,
)
from .errors import (
    CapacityError,
    FuzdegError,
    GroupValidationError,
    InsufficientDepthError,
    InternalConsistencyError,
    InvalidFuzzySubgroupError,
    SpecError,
)
from .groups import (
    Group,
    direct_product,
    from_cayley_table,
    make_cyclic,
    make_dihedral,
    make_klein,
    make_symmetric,
    parse_group_spec,
)
from .lattice import Subgroup, SubgroupLattice, enumerate_subgroups

__version__ = "0.1.0"
