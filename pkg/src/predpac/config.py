"""JSON experiment configuration: parsing and validation.

See ``configs/`` for one annotated example per experiment kind.  Keys
starting with an underscore, and ``description``, are ignored.
"""

from __future__ import annotations

import json
from typing import Any, Mapping

from .concepts import ConceptClass, Interval, Threshold, UnionOfIntervals
from .domain import DomainGrid, FiniteMixture, Pmf
from .errors import ConfigError
from .experiments import ExperimentConfig
from .learners import LearningRule
from .processes import IID, BetaBernoulli, Diagonal, FiniteDeFinetti, process_grid

TOP_LEVEL_KEYS = {
    "kind", "process", "class", "learner", "target", "n_grid", "trials",
    "epsilon", "delta", "master_seed", "output", "pilot_trials",
}


def _require(obj: Mapping[str, Any], key: str, where: str):
    if key not in obj:
        raise ConfigError(f"{where}: missing key {key!r}")
    return obj[key]


def _check_keys(obj: Mapping[str, Any], allowed: set[str], where: str) -> None:
    extra = {k for k in obj if not k.startswith("_") and k != "description"} - allowed
    if extra:
        raise ConfigError(f"{where}: unknown keys {sorted(extra)}")


def parse_pmf(obj: Mapping[str, Any], default_points=None) -> Pmf:
    if not isinstance(obj, Mapping):
        raise ConfigError("a pmf must be an object with 'points' and 'probs'")
    _check_keys(obj, {"points", "probs"}, "pmf")
    points = obj.get("points", default_points)
    if points is None:
        raise ConfigError("pmf: missing key 'points'")
    return Pmf(DomainGrid(tuple(points)), tuple(_require(obj, "probs", "pmf")))


def parse_mixture(obj: Mapping[str, Any]) -> FiniteMixture:
    points = obj.get("points")
    comps = tuple(parse_pmf(c, points) for c in _require(obj, "components", "mixture"))
    return FiniteMixture(comps, tuple(_require(obj, "weights", "mixture")))


def parse_process(obj: Mapping[str, Any]):
    kind = _require(obj, "type", "process")
    if kind == "iid":
        _check_keys(obj, {"type", "pmf", "points", "probs"}, "iid process")
        pmf = obj.get("pmf") or {"points": obj.get("points"), "probs": obj.get("probs")}
        return IID(parse_pmf(pmf))
    if kind == "finite_definetti":
        _check_keys(obj, {"type", "points", "weights", "components"}, "finite_definetti process")
        return FiniteDeFinetti(parse_mixture(obj))
    if kind == "beta_bernoulli":
        _check_keys(obj, {"type", "a", "b"}, "beta_bernoulli process")
        return BetaBernoulli(float(_require(obj, "a", "process")), float(_require(obj, "b", "process")))
    if kind == "diagonal":
        _check_keys(obj, {"type", "points", "atoms", "weights", "components"}, "diagonal process")
        if "components" in obj:
            return Diagonal(parse_mixture(obj))
        grid = DomainGrid(tuple(_require(obj, "points", "diagonal process")))
        atoms = obj.get("atoms", list(grid.points))
        return Diagonal.over(grid, atoms, obj.get("weights"))
    raise ConfigError(f"unknown process type {kind!r}")


def parse_class(obj, grid: DomainGrid) -> ConceptClass:
    if isinstance(obj, str):
        obj = {"class": obj}
    _check_keys(obj, {"class", "k", "declared_vc"}, "class")
    return ConceptClass(
        _require(obj, "class", "class"), grid, int(obj.get("k", 1)), int(obj.get("declared_vc", 0))
    )


def parse_target(obj):
    if obj == "worst_case":
        return obj
    if not isinstance(obj, Mapping):
        raise ConfigError(f"target must be 'worst_case' or an object, got {obj!r}")
    kind = _require(obj, "type", "target")
    if kind == "threshold":
        return Threshold(float(_require(obj, "t", "target")))
    if kind == "interval":
        return Interval(float(_require(obj, "a", "target")), float(_require(obj, "b", "target")))
    if kind == "union_intervals":
        return UnionOfIntervals(tuple(tuple(iv) for iv in _require(obj, "intervals", "target")))
    raise ConfigError(f"unknown target type {kind!r}")


def parse_config(obj: Mapping[str, Any]) -> ExperimentConfig:
    """Build a validated :class:`ExperimentConfig` from decoded JSON."""
    if not isinstance(obj, Mapping):
        raise ConfigError("config must be a JSON object")
    _check_keys(obj, TOP_LEVEL_KEYS, "config")
    try:
        kind = _require(obj, "kind", "config")
        process = parse_process(_require(obj, "process", "config"))
        cls = rule = target = None
        if kind in ("predictive_pac", "negative_example"):
            cls = parse_class(_require(obj, "class", "config"), process_grid(process))
            learner = obj.get("learner", {"rule": "erm", "tie_break": "lex_min"})
            _check_keys(learner, {"rule", "tie_break"}, "learner")
            rule = LearningRule(cls, learner.get("tie_break", "lex_min"), learner.get("rule", "erm"))
            default_target = "worst_case" if kind == "negative_example" else None
            target = parse_target(obj.get("target", default_target))
        return ExperimentConfig(
            kind=kind,
            process=process,
            n_grid=tuple(_require(obj, "n_grid", "config")),
            trials=int(_require(obj, "trials", "config")),
            epsilon=float(_require(obj, "epsilon", "config")),
            delta=float(_require(obj, "delta", "config")),
            master_seed=int(_require(obj, "master_seed", "config")),
            concept_class=cls,
            rule=rule,
            target=target,
            output=obj.get("output"),
            pilot_trials=int(obj.get("pilot_trials", 50)),
        )
    except ConfigError:
        raise
    except (ValueError, TypeError, KeyError) as exc:
        raise ConfigError(str(exc)) from exc


def load_config(path: str) -> ExperimentConfig:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"malformed JSON in {path!r}: {exc}") from exc
    return parse_config(obj)
