"""Exception hierarchy shared by every module in the package."""


class PredPacError(Exception):
    """Base class for all package errors."""


class DomainError(PredPacError, ValueError):
    """A numeric argument lies outside the domain of a formula."""


class ImpossiblePrefix(PredPacError, ValueError):
    """The observed prefix has zero probability under the process."""


class SizeGuard(PredPacError, ValueError):
    """An exhaustive computation was requested beyond its size limit."""


class EmptySample(PredPacError, ValueError):
    """An operation that needs at least one observation got none."""


class EmptyRecords(PredPacError, ValueError):
    """An estimator was handed no trial records."""


class Unreachable(PredPacError, ValueError):
    """A bound inversion target cannot be met anywhere on (0, 1)."""


class UnsupportedProcess(PredPacError, TypeError):
    """The process variant does not support the requested oracle."""


class ConfigError(PredPacError, ValueError):
    """An experiment configuration is malformed or inconsistent."""
