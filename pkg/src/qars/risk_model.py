"""Quantum-adjusted risk scoring core.

Turns the binary migration-deadline inequality (combined migration time plus
data shelf-life exceeding the collapse horizon) into a continuous score: the
urgency ratio is squashed through a steep sigmoid and blended with data
sensitivity and attack exploitability into a single weighted score in [0, 1].

All functions here are pure and thread-safe; randomness and policy horizons
live elsewhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import total_ordering

from . import _kernels
from .errors import DomainError

__all__ = [
    "RiskInputs",
    "UrgencyParams",
    "WeightProfile",
    "SensitivityLevel",
    "QarsBreakdown",
    "RiskBand",
    "DEFAULT_ALPHA",
    "DEFAULT_WEIGHTS",
    "urgency_ratio",
    "temporal_urgency",
    "sensitivity_value",
    "qars_score",
    "mosca_violation",
    "assess",
    "risk_band",
    "risk_landscape_grid",
]

DEFAULT_ALPHA = 10.0

WEIGHT_SUM_TOLERANCE = 1e-9


def _require_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class RiskInputs:
    """Per-asset time quantities, all in (possibly fractional) years."""

    migration_years: float
    shelf_life_years: float
    collapse_years: float

    def __post_init__(self) -> None:
        x = _require_finite("migration_years", self.migration_years)
        y = _require_finite("shelf_life_years", self.shelf_life_years)
        z = _require_finite("collapse_years", self.collapse_years)
        if x < 0:
            raise DomainError(f"migration_years must be >= 0, got {x}")
        if y < 0:
            raise DomainError(f"shelf_life_years must be >= 0, got {y}")
        if z <= 0:
            raise DomainError(f"collapse_years must be > 0, got {z}")
        object.__setattr__(self, "migration_years", x)
        object.__setattr__(self, "shelf_life_years", y)
        object.__setattr__(self, "collapse_years", z)


@dataclass(frozen=True)
class UrgencyParams:
    """Sigmoid steepness; higher alpha sharpens the cliff at ratio 1."""

    alpha: float = DEFAULT_ALPHA

    def __post_init__(self) -> None:
        a = _require_finite("alpha", self.alpha)
        if a <= 0:
            raise DomainError(f"alpha must be > 0, got {a}")
        object.__setattr__(self, "alpha", a)


@dataclass(frozen=True)
class WeightProfile:
    """Convex weights over urgency, sensitivity and exploitability.

    Off-sum profiles are rejected, not renormalized: silent rescaling would
    hide configuration mistakes.
    """

    w_temporal: float = 0.5
    w_sensitivity: float = 0.3
    w_exploitability: float = 0.2

    def __post_init__(self) -> None:
        weights = {
            "w_temporal": _require_finite("w_temporal", self.w_temporal),
            "w_sensitivity": _require_finite("w_sensitivity", self.w_sensitivity),
            "w_exploitability": _require_finite("w_exploitability", self.w_exploitability),
        }
        for name, w in weights.items():
            if not 0.0 <= w <= 1.0:
                raise DomainError(f"{name} must be in [0, 1], got {w}")
            object.__setattr__(self, name, w)
        total = weights["w_temporal"] + weights["w_sensitivity"] + weights["w_exploitability"]
        if abs(total - 1.0) > WEIGHT_SUM_TOLERANCE:
            raise DomainError(f"weights must sum to 1 within {WEIGHT_SUM_TOLERANCE}, got {total}")


DEFAULT_WEIGHTS = WeightProfile()


@total_ordering
class SensitivityLevel(Enum):
    """Data classification with its fixed numeric sensitivity constant."""

    PUBLIC = 0.0
    INTERNAL = 0.3
    CONFIDENTIAL = 0.7
    TOP_SECRET = 1.0

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, SensitivityLevel):
            return NotImplemented
        return self.value < other.value

    @property
    def token(self) -> str:
        return _LEVEL_TOKENS[self]

    @classmethod
    def from_token(cls, token: str) -> "SensitivityLevel":
        key = token.strip().lower().replace(" ", "").replace("_", "").replace("-", "")
        try:
            return _TOKEN_LEVELS[key]
        except KeyError:
            raise DomainError(f"unknown classification: {token!r}") from None


_LEVEL_TOKENS = {
    SensitivityLevel.PUBLIC: "Public",
    SensitivityLevel.INTERNAL: "Internal",
    SensitivityLevel.CONFIDENTIAL: "Confidential",
    SensitivityLevel.TOP_SECRET: "TopSecret",
}
_TOKEN_LEVELS = {
    "public": SensitivityLevel.PUBLIC,
    "internal": SensitivityLevel.INTERNAL,
    "confidential": SensitivityLevel.CONFIDENTIAL,
    "topsecret": SensitivityLevel.TOP_SECRET,
}


class RiskBand(Enum):
    LOW = "Low"
    MEDIUM = "Medium"
    HIGH = "High"
    CRITICAL = "Critical"


@dataclass(frozen=True)
class QarsBreakdown:
    """Every intermediate quantity behind one composite score."""

    urgency_ratio: float
    temporal_urgency: float
    sensitivity: float
    exploitability: float
    score: float
    mosca_violation: bool
    band: RiskBand


def urgency_ratio(inputs: RiskInputs) -> float:
    """Combined exposure window divided by the collapse horizon."""
    return (inputs.migration_years + inputs.shelf_life_years) / inputs.collapse_years


def temporal_urgency(r: float, params: UrgencyParams = UrgencyParams()) -> float:
    """Sigmoid-mapped urgency; 0.5 at ratio 1, saturating on either side.

    Stable for arbitrarily large alpha*(r-1): the kernel evaluates the
    overflow-free branch, so extreme ratios degrade to exactly 0.0 or 1.0
    instead of raising.
    """
    r = float(r)
    if not math.isfinite(r):
        raise DomainError(f"urgency ratio must be finite, got {r!r}")
    if r < 0:
        raise DomainError(f"urgency ratio must be >= 0, got {r}")
    return _kernels.logistic(params.alpha * (r - 1.0))


def sensitivity_value(level: SensitivityLevel) -> float:
    """Fixed numeric constant for a classification level."""
    return level.value


def _check_unit_interval(name: str, value: float) -> float:
    value = _require_finite(name, value)
    if not 0.0 <= value <= 1.0:
        raise DomainError(f"{name} must be in [0, 1], got {value}")
    return value


def qars_score(
    temporal: float,
    sensitivity: float,
    exploitability: float,
    weights: WeightProfile = DEFAULT_WEIGHTS,
) -> float:
    """Weighted blend of the three factors, clamped to [0, 1].

    The clamp absorbs the <=1e-9 excursion a tolerance-valid weight profile
    can produce at the extremes.
    """
    t = _check_unit_interval("temporal urgency", temporal)
    s = _check_unit_interval("sensitivity", sensitivity)
    e = _check_unit_interval("exploitability", exploitability)
    score = weights.w_temporal * t + weights.w_sensitivity * s + weights.w_exploitability * e
    return min(max(score, 0.0), 1.0)


def mosca_violation(inputs: RiskInputs) -> bool:
    """True when migration plus shelf-life strictly exceeds the horizon."""
    return inputs.migration_years + inputs.shelf_life_years > inputs.collapse_years


def risk_band(score: float) -> RiskBand:
    """Band thresholds 0.4/0.6/0.8, lower bounds inclusive."""
    score = _check_unit_interval("score", score)
    if score >= 0.8:
        return RiskBand.CRITICAL
    if score >= 0.6:
        return RiskBand.HIGH
    if score >= 0.4:
        return RiskBand.MEDIUM
    return RiskBand.LOW


def assess(
    inputs: RiskInputs,
    level: SensitivityLevel,
    exploitability: float,
    params: UrgencyParams = UrgencyParams(),
    weights: WeightProfile = DEFAULT_WEIGHTS,
) -> QarsBreakdown:
    """Full per-asset evaluation; deterministic in its arguments."""
    r = urgency_ratio(inputs)
    t = temporal_urgency(r, params)
    s = sensitivity_value(level)
    e = _check_unit_interval("exploitability", exploitability)
    score = qars_score(t, s, e, weights)
    return QarsBreakdown(
        urgency_ratio=r,
        temporal_urgency=t,
        sensitivity=s,
        exploitability=e,
        score=score,
        mosca_violation=mosca_violation(inputs),
        band=risk_band(score),
    )


@dataclass(frozen=True)
class GridRange:
    """Inclusive [start, stop] range walked in fixed steps."""

    start: float
    stop: float
    step: float

    def __post_init__(self) -> None:
        start = _require_finite("start", self.start)
        stop = _require_finite("stop", self.stop)
        step = _require_finite("step", self.step)
        if step <= 0:
            raise DomainError(f"step must be > 0, got {step}")
        if stop < start:
            raise DomainError(f"empty range: stop {stop} < start {start}")
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "stop", stop)
        object.__setattr__(self, "step", step)

    @property
    def count(self) -> int:
        # Small slack so stop itself survives float stepping.
        return int(math.floor((self.stop - self.start) / self.step + 1e-9)) + 1

    def values(self) -> list[float]:
        return [self.start + i * self.step for i in range(self.count)]


def risk_landscape_grid(
    x_plus_y_range: GridRange,
    z_range: GridRange,
    params: UrgencyParams = UrgencyParams(),
) -> list[tuple[float, float, float, float]]:
    """Row-major (x_plus_y, z, r, T) tuples over the cartesian grid."""
    if z_range.start <= 0:
        raise DomainError(f"z values must be > 0, got start {z_range.start}")
    return _kernels.landscape_rows(
        x_plus_y_range.start,
        x_plus_y_range.count,
        x_plus_y_range.step,
        z_range.start,
        z_range.count,
        z_range.step,
        params.alpha,
    )
