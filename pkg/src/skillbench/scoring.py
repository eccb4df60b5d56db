"""Brier and Alpha scoring in real-valued and basis-point arithmetic.

Brier score: mean of (p_i - x_i)^2 over resolved binary markets; lower is
better. Alpha score: baseline (market) Brier minus agent Brier on the same
resolved markets; positive means the agent beat the consensus price.

The real-valued path uses binary64 with plain left-to-right summation
(documented tolerance 1e-12 at n <= 10^4). The basis-point path mirrors
on-chain integer arithmetic: probabilities are integers in 0..10000, the
squared-error sum is exact, and the mean is emitted as an integer count of
1e-8 Brier units with round-half-up. Per-term squares are at most 10^8, so
a 64-bit accumulator would hold n <= 9.2e10 terms; Python integers remove
the concern entirely.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

BP_SCALE = 10_000        # basis points per unit probability
SCORE_SCALE = 10 ** 8    # fixed-point units per unit of Brier/Alpha score


class NoResolvedMarkets(ValueError):
    """No resolved markets to score: the round produces no score at all."""


def validate_bp(value: int, name: str = "probability") -> int:
    """Check that ``value`` is an integer in basis points (0..10000)."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an int in basis points, got {type(value).__name__}")
    if not 0 <= value <= BP_SCALE:
        raise ValueError(f"{name} must be in 0..{BP_SCALE}, got {value}")
    return value


def bp_to_real(value: int) -> float:
    """Convert basis points to a probability in [0, 1].

    The conversion round-trips: real_to_bp(bp_to_real(v)) == v for every
    v in 0..10000.
    """
    return validate_bp(value) / BP_SCALE


def real_to_bp(p: float) -> int:
    """Convert a probability to basis points, rounding half up."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability must be in [0, 1], got {p}")
    return int(p * BP_SCALE + 0.5)


def score_to_real(units: int) -> float:
    """Convert a fixed-point score (1e-8 units) to a real value."""
    return units / SCORE_SCALE


@dataclass(frozen=True)
class Outcome:
    """Resolution state of a binary market: unresolved, or resolved to 0/1.

    Immutable; a resolved outcome can never revert to unresolved.
    """

    value: Optional[int] = None

    def __post_init__(self) -> None:
        if self.value is not None and self.value not in (0, 1):
            raise ValueError(f"resolved outcome must be 0 or 1, got {self.value}")

    @classmethod
    def unresolved(cls) -> "Outcome":
        return cls(None)

    @classmethod
    def resolved(cls, x: int) -> "Outcome":
        return cls(x)

    @property
    def is_resolved(self) -> bool:
        return self.value is not None


@dataclass(frozen=True)
class MarketScoreInput:
    """One market's scoring triple: prediction, benchmark (both bp), outcome.

    Unresolved entries are filtered out before scoring, never defaulted.
    """

    prediction: int
    benchmark: int
    outcome: Outcome = field(default_factory=Outcome.unresolved)

    def __post_init__(self) -> None:
        validate_bp(self.prediction, "prediction")
        validate_bp(self.benchmark, "benchmark")


def resolved_inputs(
    inputs: Sequence[MarketScoreInput],
) -> tuple[list[int], list[int], list[int]]:
    """Split resolved entries into (predictions_bp, benchmarks_bp, outcomes)."""
    preds, bases, xs = [], [], []
    for entry in inputs:
        if entry.outcome.is_resolved:
            preds.append(entry.prediction)
            bases.append(entry.benchmark)
            xs.append(entry.outcome.value)
    return preds, bases, xs


def _check_vectors(predictions: Sequence[float], outcomes: Sequence[int]) -> None:
    if len(predictions) != len(outcomes):
        raise ValueError(
            f"length mismatch: {len(predictions)} predictions vs {len(outcomes)} outcomes"
        )
    if not predictions:
        raise NoResolvedMarkets("cannot score an empty set of resolved markets")
    for p in predictions:
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"prediction out of [0, 1]: {p}")
    for x in outcomes:
        if x not in (0, 1):
            raise ValueError(f"outcome must be 0 or 1, got {x}")


def brier_score(predictions: Sequence[float], outcomes: Sequence[int]) -> float:
    """Mean squared error of probabilistic forecasts against binary outcomes."""
    _check_vectors(predictions, outcomes)
    total = 0.0
    for p, x in zip(predictions, outcomes):
        total += (p - x) ** 2
    return total / len(predictions)


def alpha_score(
    benchmarks: Sequence[float],
    predictions: Sequence[float],
    outcomes: Sequence[int],
) -> float:
    """Baseline Brier minus agent Brier over a shared resolved market set.

    Positive values mean the agent beat the market consensus; echoing the
    benchmarks yields exactly zero.
    """
    if len(benchmarks) != len(predictions):
        raise ValueError(
            f"length mismatch: {len(benchmarks)} benchmarks vs {len(predictions)} predictions"
        )
    return brier_score(benchmarks, outcomes) - brier_score(predictions, outcomes)


def per_market_delta(benchmark: float, prediction: float, outcome: int) -> float:
    """Single-market alpha contribution: (b - x)^2 - (p - x)^2.

    The mean of these deltas over a market set equals alpha_score on it.
    """
    if not 0.0 <= benchmark <= 1.0:
        raise ValueError(f"benchmark out of [0, 1]: {benchmark}")
    if not 0.0 <= prediction <= 1.0:
        raise ValueError(f"prediction out of [0, 1]: {prediction}")
    if outcome not in (0, 1):
        raise ValueError(f"outcome must be 0 or 1, got {outcome}")
    return (benchmark - outcome) ** 2 - (prediction - outcome) ** 2


def _div_round_half_up(numerator: int, denominator: int) -> int:
    # Round-half-up for non-negative integer division.
    return (2 * numerator + denominator) // (2 * denominator)


def brier_score_bp(predictions_bp: Sequence[int], outcomes: Sequence[int]) -> int:
    """Brier score over bp predictions, as an integer count of 1e-8 units.

    Each squared error (p_bp - x*10000)^2 is already in 1e-8 Brier units,
    so the only rounding is the final division by n (round half up).
    Agrees with the real-valued brier_score within 1e-8.
    """
    if len(predictions_bp) != len(outcomes):
        raise ValueError(
            f"length mismatch: {len(predictions_bp)} predictions vs {len(outcomes)} outcomes"
        )
    if not predictions_bp:
        raise NoResolvedMarkets("cannot score an empty set of resolved markets")
    total = 0
    for p, x in zip(predictions_bp, outcomes):
        validate_bp(p, "prediction")
        if x not in (0, 1):
            raise ValueError(f"outcome must be 0 or 1, got {x}")
        err = p - x * BP_SCALE
        total += err * err
    return _div_round_half_up(total, len(predictions_bp))


def alpha_score_bp(
    benchmarks_bp: Sequence[int],
    predictions_bp: Sequence[int],
    outcomes: Sequence[int],
) -> int:
    """Alpha in 1e-8 units: difference of the two rounded bp Brier scores.

    Identical prediction and benchmark vectors give exactly zero.
    """
    if len(benchmarks_bp) != len(predictions_bp):
        raise ValueError(
            f"length mismatch: {len(benchmarks_bp)} benchmarks vs {len(predictions_bp)} predictions"
        )
    return brier_score_bp(benchmarks_bp, outcomes) - brier_score_bp(predictions_bp, outcomes)


def cumulative_score(per_round_scores: Sequence[float]) -> float:
    """Arithmetic mean of per-round scores across a campaign."""
    if not per_round_scores:
        raise ValueError("cumulative score requires at least one round")
    return sum(per_round_scores) / len(per_round_scores)
