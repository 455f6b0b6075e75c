"""Cylindric plane partitions, arm-leg cylindric diagrams and the growth-diagram bijection between them."""

from .bijection import WeightError, check_strong_weight, phi, psi, strong_weight_defects
from .diagram import (
    ALCD,
    CylCoord,
    add_inside_corner,
    alcd_weight,
    boxes_up_to_hook,
    check_coord,
    cohook_weight,
    depth,
    diag_weight,
    diag_weights,
    hook,
    iter_alcds,
    reflect_alcd,
    remove_inside_corner,
    rotate_alcd,
)
from .growth import GrowthDiagram, StabilizationError, from_cpp, from_pair, read_cpp, read_pair, validate
from .local_rule import LocalRuleError, burge_down, burge_up
from .partitions import (
    CPP,
    Profile,
    conjugate,
    constant_cpp,
    cpp_refined_weight,
    cpp_weight,
    is_horizontal_strip,
    iter_cpps,
    parse_profile,
    partition,
    partition_to_profile,
    profile_to_partition,
    reflect_cpp,
    rotate_cpp,
    rotate_profile,
)
from .series import (
    TruncatedSeries,
    borodin_rhs_series,
    enumerate_cpp_series,
    enumerate_pairs_series,
    enumerate_rpp_series,
    stanley_rhs_series,
)
from .verify import verify_profile

__version__ = "0.1.0"
