"""Exact measures on partitions with Jack parameters 1/2 and 2, realized
as Pfaffian L-ensembles on the half-integer lattice."""

from .exact import AlgebraicScalar, BaseMismatchError, GaussianRational, quarter_power
from .partitions import FrobeniusCoords, Partition, partitions_of, partitions_up_to
from .measures import (
    JackParams,
    Prefactor,
    SeriesClass,
    SingularParameterError,
    TaggedValue,
    classify_parameters,
    mixed_z_measure,
    plancherel_n,
    poisson_plancherel,
    z_measure_n,
)
from .lattice import HalfInt, SplitConfig, embed_theta2, embed_theta_half, is_confL
from .ensemble import HKind, HSpec, pf_closed_form, pfaffian, prob_L

__all__ = [
    "AlgebraicScalar",
    "BaseMismatchError",
    "FrobeniusCoords",
    "GaussianRational",
    "HKind",
    "HSpec",
    "HalfInt",
    "JackParams",
    "Partition",
    "Prefactor",
    "SeriesClass",
    "SingularParameterError",
    "SplitConfig",
    "TaggedValue",
    "classify_parameters",
    "embed_theta2",
    "embed_theta_half",
    "is_confL",
    "mixed_z_measure",
    "partitions_of",
    "partitions_up_to",
    "pf_closed_form",
    "pfaffian",
    "plancherel_n",
    "poisson_plancherel",
    "prob_L",
    "quarter_power",
    "z_measure_n",
]

__version__ = "0.1.0"
