"""Predictive PAC learning under exchangeable inputs, on finite grids."""

from .bounds import BoundSpec, corollary_bound, invert_bound, predictive_transform, vidyasagar_bound
from .concepts import (
    ConceptClass,
    Interval,
    Threshold,
    UnionOfIntervals,
    empirical_risk,
    evaluate,
    risk,
    shatter_check,
    vc_dimension_bruteforce,
)
from .domain import DomainGrid, FiniteMixture, Pmf, pmf_cdf, pmf_expectation, sample_point
from .errors import (
    ConfigError,
    DomainError,
    EmptyRecords,
    EmptySample,
    ImpossiblePrefix,
    PredPacError,
    SizeGuard,
    Unreachable,
    UnsupportedProcess,
)
from .experiments import (
    ExperimentConfig,
    TrialRecord,
    estimate_failure_probability,
    run_experiment,
    run_gc_curve,
    run_negative_example,
    run_posterior_concentration,
    run_predictive_pac,
)
from .gc_stats import DeviationCurve, empirical_cdf, sup_deviation_classical, sup_deviation_predictive
from .learners import LabeledSample, LearningRule, epsilon_n, erm, is_consistent, restrict
from .processes import (
    IID,
    BetaBernoulli,
    Diagonal,
    FiniteDeFinetti,
    PathPrefix,
    brute_force_conditional,
    conditional_expectation,
    posterior_weights,
    predictive_pmf,
    prefix_probability,
    sample_path,
)

__version__ = "0.1.0"
