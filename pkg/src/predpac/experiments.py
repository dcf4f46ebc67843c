"""Seeded Monte Carlo harness.

Every trial draws one sample path of length ``max(n_grid)`` from its own
random stream and is evaluated on the nested prefixes ``n in n_grid``.  The
stream of trial ``i`` is a PCG64 generator seeded with the ``(i+1)``-th
output of a SplitMix64 sequence started at ``master_seed``, so a trial's
result depends only on ``(master_seed, i)``.  Trials may run in worker
processes; results are re-sorted by trial index before anything is written.
"""

from __future__ import annotations

import csv
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Any, Callable, Optional, Sequence, Union

import numpy as np
from scipy.stats import beta as beta_dist

from .bounds import corollary_bound, predictive_transform, vidyasagar_bound
from .concepts import Concept, ConceptClass, concept_labels, family_of
from .errors import ConfigError, EmptyRecords
from .gc_stats import DeviationCurve, sup_deviation_from_counts
from .learners import LearningRule, erm_from_counts
from .processes import (
    BetaBernoulli,
    Diagonal,
    FiniteDeFinetti,
    ProcessSpec,
    as_mixture,
    marginal_pmf,
    posterior_from_counts,
    predictive_from_counts,
    process_grid,
    sample_path,
)

KINDS = ("predictive_pac", "gc_curve", "posterior_concentration", "negative_example")
MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
PILOT_STREAM = 0x5049_4C4F_5453_5452  # separates pilot trials from the main run
WORST_CASE_MAX_CANDIDATES = 512
MARGINAL_SPREAD_TOL = 0.02
CONFIDENCE = 0.95


# -- seeding -----------------------------------------------------------------

def splitmix64(state: int) -> int:
    """SplitMix64 output for ``state`` (the 64-bit avalanche finalizer)."""
    z = (state + GOLDEN_GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def trial_seed(master_seed: int, trial_index: int) -> int:
    return splitmix64((master_seed + trial_index * GOLDEN_GAMMA) & MASK64)


def trial_rng(master_seed: int, trial_index: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(trial_seed(master_seed, trial_index)))


# -- configuration and records ----------------------------------------------

@dataclass(frozen=True)
class ExperimentConfig:
    kind: str
    process: ProcessSpec
    n_grid: tuple[int, ...]
    trials: int
    epsilon: float
    delta: float
    master_seed: int
    concept_class: Optional[ConceptClass] = None
    rule: Optional[LearningRule] = None
    target: Union[Concept, str, None] = None
    output: Optional[str] = None
    pilot_trials: int = 50

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ConfigError(f"unknown experiment kind {self.kind!r}")
        n_grid = tuple(int(n) for n in self.n_grid)
        if not n_grid or n_grid[0] < 1 or any(b <= a for a, b in zip(n_grid, n_grid[1:])):
            raise ConfigError(f"n_grid must be nonempty, positive and increasing: {n_grid}")
        object.__setattr__(self, "n_grid", n_grid)
        if self.trials < 1:
            raise ConfigError("trials must be at least 1")
        for name in ("epsilon", "delta"):
            v = getattr(self, name)
            if not 0.0 < v < 1.0:
                raise ConfigError(f"{name} must lie in (0, 1), got {v!r}")
        if not 0 <= self.master_seed <= MASK64:
            raise ConfigError("master_seed must be an unsigned 64-bit integer")
        if self.pilot_trials < 1:
            raise ConfigError("pilot_trials must be at least 1")
        if self.kind in ("predictive_pac", "negative_example"):
            self._check_learning_setup()
        if self.kind == "posterior_concentration":
            if not isinstance(self.process, FiniteDeFinetti) or len(self.process.mixture.weights) < 2:
                raise ConfigError("posterior concentration needs a finite mixture with >= 2 components")
        if self.kind == "negative_example":
            if not isinstance(self.process, Diagonal):
                raise ConfigError("the negative example runs on a diagonal process")
            atoms = {c.support[0] for c, w in zip(self.process.atoms.components, self.process.atoms.weights) if w > 0}
            if len(atoms) < 2:
                raise ConfigError("diagonal atoms all coincide")

    def _check_learning_setup(self) -> None:
        if isinstance(self.process, BetaBernoulli):
            raise ConfigError(f"{self.kind} needs a finite-support process")
        if self.concept_class is None:
            raise ConfigError(f"{self.kind} needs a concept class")
        if self.concept_class.grid != process_grid(self.process):
            raise ConfigError("concept class must live on the process grid")
        if self.concept_class.distinct_labelings() < 2:
            raise ConfigError("concept class is trivial on this grid")
        if self.rule is None:
            object.__setattr__(self, "rule", LearningRule(self.concept_class))
        if self.target is None:
            raise ConfigError(f"{self.kind} needs a target concept or 'worst_case'")
        if isinstance(self.target, str):
            if self.target != "worst_case":
                raise ConfigError(f"unknown target {self.target!r}")
            return
        if family_of(self.target) != self.concept_class.family:
            raise ConfigError("target concept is not from the configured family")
        row = concept_labels(self.target, self.concept_class.grid.array)
        if not np.any(np.all(self.concept_class.label_matrix() == row, axis=1)):
            raise ConfigError("target concept is not realizable by the class on this grid")

    @property
    def max_n(self) -> int:
        return self.n_grid[-1]


@dataclass(frozen=True)
class TrialRecord:
    trial: int
    n: int
    realized_component: Union[int, float]
    params: tuple[float, ...]
    empirical_risk: float
    conditional_error: float
    marginal_risk: float
    dev_predictive: Optional[float] = None
    dev_classical: Optional[float] = None

    def __post_init__(self):
        for name in ("conditional_error", "marginal_risk"):
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise ValueError(f"{name} outside [0, 1]: {getattr(self, name)!r}")


@dataclass(frozen=True)
class ConcentrationRecord:
    trial: int
    n: int
    realized_component: int
    posterior_realized: float
    argmax_correct: bool


@dataclass(frozen=True)
class FailureEstimate:
    failures: int
    trials: int
    fraction: float
    ci_low: float
    ci_high: float


@dataclass
class SummaryReport:
    kind: str
    per_n: list[dict[str, Any]]
    verdicts: list[dict[str, Any]] = field(default_factory=list)
    info: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(v["passed"] for v in self.verdicts)

    def add_verdict(self, name: str, passed: bool, detail: str = "") -> None:
        self.verdicts.append({"name": name, "passed": bool(passed), "detail": detail})

    def to_dict(self) -> dict[str, Any]:
        return _round_floats({"kind": self.kind, "passed": self.passed, "info": self.info,
                              "per_n": self.per_n, "verdicts": self.verdicts})


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    records: list
    summary: SummaryReport
    curves: list[DeviationCurve] = field(default_factory=list)
    median_curve: Optional[DeviationCurve] = None

    def csv_rows(self) -> tuple[list[str], list[list[str]]]:
        if self.config.kind == "gc_curve":
            header = ["n", "trial", "dev_predictive", "dev_classical"]
            rows = [[fmt(n), fmt(c.trial), fmt(p), fmt(q)]
                    for c in self.curves
                    for n, p, q in zip(c.n_values, c.predictive_dev, c.classical_dev)]
            return header, rows
        if self.config.kind == "posterior_concentration":
            header = ["trial", "n", "realized_component", "posterior_realized", "argmax_correct"]
            rows = [[fmt(r.trial), fmt(r.n), fmt(r.realized_component),
                     fmt(r.posterior_realized), fmt(int(r.argmax_correct))] for r in self.records]
            return header, rows
        header = ["trial", "n", "realized_component", "params", "empirical_risk",
                  "conditional_error", "marginal_risk", "dev_predictive", "dev_classical"]
        rows = [[fmt(r.trial), fmt(r.n), fmt(r.realized_component), fmt(r.params),
                 fmt(r.empirical_risk), fmt(r.conditional_error), fmt(r.marginal_risk),
                 fmt(r.dev_predictive), fmt(r.dev_classical)] for r in self.records]
        return header, rows


def fmt(value) -> str:
    """Fixed 15-significant-digit rendering used in every output file."""
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return str(int(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, tuple):
        return ";".join(fmt(v) for v in value)
    return format(float(value), ".15g")


def _round_floats(obj):
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        return float(format(x, ".15g")) if math.isfinite(x) else str(x)
    return obj


# -- estimators ----------------------------------------------------------------

def clopper_pearson(failures: int, trials: int, confidence: float = CONFIDENCE) -> tuple[float, float]:
    """Exact two-sided binomial interval from Beta quantiles."""
    alpha = 1.0 - confidence
    lo = 0.0 if failures == 0 else float(beta_dist.ppf(alpha / 2, failures, trials - failures + 1))
    hi = 1.0 if failures == trials else float(beta_dist.ppf(1 - alpha / 2, failures + 1, trials - failures))
    return lo, hi


def estimate_failure_probability(records: Sequence, epsilon: float, attr: str = "conditional_error") -> FailureEstimate:
    """Fraction of records with ``attr > epsilon`` and its 95% Clopper-Pearson interval."""
    if len(records) == 0:
        raise EmptyRecords("no records to estimate from")
    k = sum(1 for r in records if getattr(r, attr) > epsilon)
    m = len(records)
    lo, hi = clopper_pearson(k, m)
    return FailureEstimate(k, m, k / m, lo, hi)


# -- parallel map ----------------------------------------------------------------

def _run_chunk(fn: Callable[[int], list], indices: range) -> list:
    return [fn(i) for i in indices]


def map_trials(fn: Callable[[int], list], trials: int, workers: int = 1) -> list:
    """``[fn(0), ..., fn(trials-1)]``, optionally spread over worker processes."""
    if workers <= 1 or trials < 2:
        return [fn(i) for i in range(trials)]
    size = max(1, math.ceil(trials / (4 * workers)))
    chunks = [range(s, min(s + size, trials)) for s in range(0, trials, size)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(partial(_run_chunk, fn), chunks))
    return [r for part in parts for r in part]


# -- trial bodies -----------------------------------------------------------------

def _clip01(x: float) -> float:
    return min(1.0, max(0.0, float(x)))


def _learning_trial(cfg: ExperimentConfig, target: Concept, trial: int, stream: int = 0,
                    n_values: Optional[Sequence[int]] = None) -> list[TrialRecord]:
    cls = cfg.concept_class
    process = cfg.process
    grid = cls.grid
    n_values = cfg.n_grid if n_values is None else tuple(n_values)
    rng = trial_rng(cfg.master_seed ^ stream, trial)
    path = sample_path(process, n_values[-1], rng)
    idx = grid.index_of(path.values)
    f_grid = concept_labels(target, grid.array).astype(np.int64)
    marginal = marginal_pmf(process).array
    labels = cls.label_matrix()
    out = []
    for n in n_values:
        counts = np.bincount(idx[:n], minlength=len(grid)).astype(np.int64)
        ones = counts * f_grid
        j = erm_from_counts(cls, ones, counts - ones, cfg.rule.tie_break)
        diff = np.abs(labels[j].astype(np.int64) - f_grid)
        predictive = predictive_from_counts(process, counts)
        out.append(TrialRecord(
            trial=trial,
            n=n,
            realized_component=path.realized_component,
            params=cls.parameter_grid[j].params,
            empirical_risk=float(diff @ counts) / n,
            conditional_error=_clip01(predictive @ diff),
            marginal_risk=_clip01(marginal @ diff),
            dev_predictive=sup_deviation_from_counts(counts, predictive),
            dev_classical=sup_deviation_from_counts(counts, marginal),
        ))
    return out


def _gc_trial(cfg: ExperimentConfig, trial: int) -> DeviationCurve:
    process = cfg.process
    grid = process_grid(process)
    path = sample_path(process, cfg.max_n, trial_rng(cfg.master_seed, trial))
    idx = grid.index_of(path.values)
    marginal = marginal_pmf(process).array
    pred, classical = [], []
    for n in cfg.n_grid:
        counts = np.bincount(idx[:n], minlength=len(grid))
        pred.append(sup_deviation_from_counts(counts, predictive_from_counts(process, counts)))
        classical.append(sup_deviation_from_counts(counts, marginal))
    return DeviationCurve(cfg.n_grid, tuple(pred), tuple(classical), trial=trial)


def _concentration_trial(cfg: ExperimentConfig, trial: int) -> list[ConcentrationRecord]:
    process = cfg.process
    grid = process_grid(process)
    path = sample_path(process, cfg.max_n, trial_rng(cfg.master_seed, trial))
    idx = grid.index_of(path.values)
    k = int(path.realized_component)
    out = []
    for n in cfg.n_grid:
        post = posterior_from_counts(process, np.bincount(idx[:n], minlength=len(grid)))
        out.append(ConcentrationRecord(trial, n, k, float(post[k]), int(np.argmax(post)) == k))
    return out


# -- target selection ---------------------------------------------------------------

def _distinct_candidates(cls: ConceptClass) -> list[int]:
    _, first = np.unique(cls.label_matrix(), axis=0, return_index=True)
    return sorted(first.tolist())


def diagonal_expected_risks(cfg: ExperimentConfig) -> dict[int, float]:
    """Exact mean marginal risk of the learner for each candidate target.

    On a diagonal path the sample is one atom repeated, and ERM on ``n``
    copies of a point returns the same hypothesis for every ``n``; the
    expectation is a finite sum over atoms.
    """
    cls = cfg.concept_class
    mix = as_mixture(cfg.process)
    grid = cls.grid
    marginal = mix.marginal().array
    labels = cls.label_matrix().astype(np.int64)
    atom_idx = [int(grid.index_of([c.support[0]])[0]) for c in mix.components]
    out = {}
    for j in _distinct_candidates(cls):
        f_grid = labels[j]
        total = 0.0
        for w, a in zip(mix.weights, atom_idx):
            counts = np.zeros(len(grid), dtype=np.int64)
            counts[a] = 1
            ones = counts * f_grid
            h = erm_from_counts(cls, ones, counts - ones, cfg.rule.tie_break)
            total += w * float(marginal @ np.abs(labels[h] - f_grid))
        out[j] = total
    return out


def _worst_case_target(cfg: ExperimentConfig) -> tuple[Concept, dict[str, Any]]:
    cls = cfg.concept_class
    if isinstance(cfg.process, Diagonal):
        risks = diagonal_expected_risks(cfg)
        j = max(risks, key=lambda i: (risks[i], -i))
        return cls.parameter_grid[j], {"worst_case_method": "exact", "worst_case_expected_marginal_risk": risks[j]}
    candidates = _distinct_candidates(cls)
    if len(candidates) > WORST_CASE_MAX_CANDIDATES:
        raise ConfigError(
            f"worst_case search over {len(candidates)} targets exceeds {WORST_CASE_MAX_CANDIDATES}; name a target"
        )
    best_j, best_score = candidates[0], -1.0
    for j in candidates:
        target = cls.parameter_grid[j]
        recs = [r for t in range(cfg.pilot_trials)
                for r in _learning_trial(cfg, target, t, PILOT_STREAM, cfg.n_grid[:1])]
        score = float(np.mean([r.conditional_error for r in recs]))
        if score > best_score:
            best_j, best_score = j, score
    return cls.parameter_grid[best_j], {"worst_case_method": "pilot",
                                        "worst_case_pilot_mean_conditional_error": best_score}


def _resolve_target(cfg: ExperimentConfig) -> tuple[Concept, dict[str, Any]]:
    if isinstance(cfg.target, str):
        return _worst_case_target(cfg)
    return cfg.target, {}


# -- experiments ---------------------------------------------------------------------

def _by_n(records: Sequence, n: int) -> list:
    return [r for r in records if r.n == n]


def run_predictive_pac(cfg: ExperimentConfig, workers: int = 1) -> ExperimentResult:
    """Learn a fixed target by ERM and measure the exact conditional error.

    The summary reports, per ``n``, the fraction of trials whose conditional
    error exceeds ``epsilon`` with its Clopper-Pearson interval.  At every
    ``n`` at or above the exchangeable-input sample size the upper limit must
    not exceed ``delta``.
    """
    if cfg.kind != "predictive_pac":
        raise ConfigError(f"expected a predictive_pac config, got {cfg.kind!r}")
    target, info = _resolve_target(cfg)
    records = _collect(partial(_learning_trial, cfg, target), cfg.trials, workers)
    d = cfg.concept_class.declared_vc
    n_req = predictive_transform(partial(vidyasagar_bound, d), cfg.delta, cfg.epsilon)
    info.update({
        "target": list(target.params),
        "vc_dimension": d,
        "n_required_predictive": n_req,
        "n_required_pac": vidyasagar_bound(d, cfg.delta, cfg.epsilon),
        "corollary_bound": corollary_bound(d, cfg.delta, cfg.epsilon),
    })
    summary = SummaryReport(cfg.kind, [], info=info)
    for n in cfg.n_grid:
        rows = _by_n(records, n)
        cond = estimate_failure_probability(rows, cfg.epsilon)
        marg = estimate_failure_probability(rows, cfg.epsilon, "marginal_risk")
        summary.per_n.append({
            "n": n,
            "trials": cond.trials,
            "failures": cond.failures,
            "failure_fraction": cond.fraction,
            "ci_low": cond.ci_low,
            "ci_high": cond.ci_high,
            "marginal_failures": marg.failures,
            "marginal_failure_fraction": marg.fraction,
            "mean_conditional_error": float(np.mean([r.conditional_error for r in rows])),
            "mean_marginal_risk": float(np.mean([r.marginal_risk for r in rows])),
            "at_or_above_bound": n >= n_req,
        })
        if n >= n_req:
            summary.add_verdict(f"cp_upper_le_delta_at_n={n}", cond.ci_high <= cfg.delta,
                                f"upper={cond.ci_high:.6g} delta={cfg.delta}")
    if not any(n >= n_req for n in cfg.n_grid):
        info["note"] = f"no n in n_grid reaches the bound {n_req}; nothing asserted"
    return ExperimentResult(cfg, records, summary)


def run_negative_example(cfg: ExperimentConfig, workers: int = 1) -> ExperimentResult:
    """ERM on constant paths: zero conditional error, marginal risk flat in ``n``."""
    if cfg.kind != "negative_example":
        raise ConfigError(f"expected a negative_example config, got {cfg.kind!r}")
    target, info = _resolve_target(cfg)
    records = _collect(partial(_learning_trial, cfg, target), cfg.trials, workers)
    info["target"] = list(target.params)
    summary = SummaryReport(cfg.kind, [], info=info)
    means = []
    for n in cfg.n_grid:
        rows = _by_n(records, n)
        risks = np.array([r.marginal_risk for r in rows])
        zero = sum(1 for r in rows if r.conditional_error == 0.0)
        means.append(float(risks.mean()))
        summary.per_n.append({
            "n": n,
            "trials": len(rows),
            "zero_conditional_error_fraction": zero / len(rows),
            "mean_marginal_risk": means[-1],
            "stderr_marginal_risk": float(risks.std(ddof=1) / math.sqrt(len(rows))) if len(rows) > 1 else 0.0,
            "marginal_failure_fraction": float(np.mean(risks > cfg.epsilon)),
        })
    summary.add_verdict("conditional_error_zero_everywhere",
                        all(r.conditional_error == 0.0 for r in records))
    spread = max(means) - min(means)
    summary.add_verdict("marginal_risk_flat_in_n", spread <= MARGINAL_SPREAD_TOL,
                        f"spread={spread:.6g} tol={MARGINAL_SPREAD_TOL}")
    summary.add_verdict("marginal_risk_at_least_epsilon", min(means) >= cfg.epsilon,
                        f"min mean={min(means):.6g} epsilon={cfg.epsilon}")
    return ExperimentResult(cfg, records, summary)


def run_gc_curve(cfg: ExperimentConfig, workers: int = 1) -> ExperimentResult:
    """Predictive and classical sup-deviations along each sample path.

    Verdicts: the median predictive deviation decreases strictly along
    ``n_grid`` and ends below ``epsilon``.
    """
    if cfg.kind != "gc_curve":
        raise ConfigError(f"expected a gc_curve config, got {cfg.kind!r}")
    curves = _collect_flat(partial(_gc_trial, cfg), cfg.trials, workers)
    pred = np.array([c.predictive_dev for c in curves])
    classical = np.array([c.classical_dev for c in curves])
    med_pred = np.median(pred, axis=0)
    med_classical = np.median(classical, axis=0)
    median_curve = DeviationCurve(cfg.n_grid, tuple(med_pred.tolist()), tuple(med_classical.tolist()),
                                  aggregated=True)
    summary = SummaryReport(cfg.kind, [
        {"n": n, "trials": len(curves), "median_dev_predictive": p, "median_dev_classical": q}
        for n, p, q in zip(cfg.n_grid, median_curve.predictive_dev, median_curve.classical_dev)
    ])
    summary.add_verdict("median_predictive_strictly_decreasing", bool(np.all(np.diff(med_pred) < 0)))
    summary.add_verdict("final_median_predictive_below_epsilon", med_pred[-1] < cfg.epsilon,
                        f"median={med_pred[-1]:.6g} epsilon={cfg.epsilon}")
    return ExperimentResult(cfg, [], summary, curves, median_curve)


def run_posterior_concentration(cfg: ExperimentConfig, workers: int = 1) -> ExperimentResult:
    """Track the posterior weight of the component that generated each path."""
    if cfg.kind != "posterior_concentration":
        raise ConfigError(f"expected a posterior_concentration config, got {cfg.kind!r}")
    records = _collect(partial(_concentration_trial, cfg), cfg.trials, workers)
    summary = SummaryReport(cfg.kind, [])
    for n in cfg.n_grid:
        rows = _by_n(records, n)
        summary.per_n.append({
            "n": n,
            "trials": len(rows),
            "argmax_accuracy": sum(r.argmax_correct for r in rows) / len(rows),
            "mean_posterior_realized": float(np.mean([r.posterior_realized for r in rows])),
        })
    acc = summary.per_n[-1]["argmax_accuracy"]
    summary.add_verdict("argmax_accuracy_at_max_n", acc >= 1.0 - cfg.delta,
                        f"accuracy={acc:.6g} required={1.0 - cfg.delta:.6g}")
    return ExperimentResult(cfg, records, summary)


def _collect(fn: Callable[[int], list], trials: int, workers: int) -> list:
    parts = map_trials(fn, trials, workers)
    records = [r for part in parts for r in part]
    records.sort(key=lambda r: (r.trial, r.n))
    return records


def _collect_flat(fn: Callable[[int], Any], trials: int, workers: int) -> list:
    items = map_trials(fn, trials, workers)
    items.sort(key=lambda c: c.trial)
    return items


RUNNERS = {
    "predictive_pac": run_predictive_pac,
    "negative_example": run_negative_example,
    "gc_curve": run_gc_curve,
    "posterior_concentration": run_posterior_concentration,
}


def run_experiment(cfg: ExperimentConfig, workers: int = 1) -> ExperimentResult:
    return RUNNERS[cfg.kind](cfg, workers)


def write_outputs(result: ExperimentResult, out_dir: str, stem: str = "records") -> tuple[str, str]:
    """Write ``<stem>.csv`` and ``<stem>.summary.json`` under ``out_dir``."""
    os.makedirs(out_dir, exist_ok=True)
    csv_path = os.path.join(out_dir, f"{stem}.csv")
    json_path = os.path.join(out_dir, f"{stem}.summary.json")
    header, rows = result.csv_rows()
    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    with open(json_path, "w") as fh:
        json.dump(result.summary.to_dict(), fh, indent=2, sort_keys=True)
        fh.write("\n")
    return csv_path, json_path
