"""Calibration decomposition of the Brier score, and the anatomy of Alpha.

Splits a forecaster's Brier score into three interpretable parts:

    B  =  UNC + REL - RES   (up to a binning residual)

where UNC = o_bar*(1 - o_bar) is the irreducible outcome uncertainty,
REL is the binned squared gap between stated probability and realized
frequency (calibration error, lower is better), and RES is the binned
squared gap between bin frequency and the base rate (discriminative
power, higher is better).

The identity is exact when every prediction sits at its bin's mean; with
real data it carries a small residual driven by within-bin prediction
variation, which is why the decomposition reports the directly computed
Brier alongside the components instead of forcing the identity.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Optional, Sequence

from .scoring import brier_score

DEFAULT_BIN_COUNT = 10


@dataclass(frozen=True)
class BinningSpec:
    """Partition of [0, 1] into forecast bins.

    Membership is half-open [edge_k, edge_{k+1}) with the final bin closed
    at 1.0, so p = 1.0 is always well-defined.
    """

    edges: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.edges) < 3:
            raise ValueError("need at least 2 bins (3 edges)")
        if self.edges[0] != 0.0 or self.edges[-1] != 1.0:
            raise ValueError("edges must span [0, 1] exactly")
        for lo, hi in zip(self.edges, self.edges[1:]):
            if not lo < hi:
                raise ValueError("edges must be strictly increasing")

    @classmethod
    def equal_width(cls, k: int = DEFAULT_BIN_COUNT) -> "BinningSpec":
        """K equally spaced bins on [0, 1]."""
        if k < 2:
            raise ValueError(f"bin count must be >= 2, got {k}")
        return cls(tuple(i / k for i in range(k)) + (1.0,))

    @property
    def k(self) -> int:
        return len(self.edges) - 1

    def bin_index(self, p: float) -> int:
        idx = bisect_right(self.edges, p) - 1
        return self.k - 1 if idx >= self.k else idx


@dataclass(frozen=True)
class BinStat:
    """Occupied-bin summary: count, mean prediction, mean outcome."""

    count: int
    mean_prediction: float
    mean_outcome: float


@dataclass(frozen=True)
class MurphyComponents:
    """Decomposition result plus the directly computed Brier for comparison."""

    unc: float
    rel: float
    res: float
    brier_direct: float
    base_rate: float
    n: int
    bin_stats: tuple[BinStat, ...] = ()

    @property
    def identity_value(self) -> float:
        """UNC + REL - RES, the component-implied Brier."""
        return self.unc + self.rel - self.res

    @property
    def residual(self) -> float:
        """Gap between the direct Brier and the component identity."""
        return self.brier_direct - self.identity_value


def murphy_decompose(
    predictions: Sequence[float],
    outcomes: Sequence[int],
    binning: Optional[BinningSpec] = None,
) -> MurphyComponents:
    """Decompose forecasts into (UNC, REL, RES); empty bins are excluded.

    All-identical outcomes are legal (UNC = 0). Raises on empty input.
    """
    if binning is None:
        binning = BinningSpec.equal_width()
    direct = brier_score(predictions, outcomes)  # also validates inputs

    n = len(predictions)
    base_rate = sum(outcomes) / n
    unc = base_rate * (1.0 - base_rate)

    counts = [0] * binning.k
    pred_sums = [0.0] * binning.k
    outcome_sums = [0] * binning.k
    for p, x in zip(predictions, outcomes):
        idx = binning.bin_index(p)
        counts[idx] += 1
        pred_sums[idx] += p
        outcome_sums[idx] += x

    rel = 0.0
    res = 0.0
    stats = []
    for n_k, p_sum, o_sum in zip(counts, pred_sums, outcome_sums):
        if n_k == 0:
            continue
        p_bar = p_sum / n_k
        o_bar = o_sum / n_k
        rel += n_k * (p_bar - o_bar) ** 2
        res += n_k * (o_bar - base_rate) ** 2
        stats.append(BinStat(n_k, p_bar, o_bar))

    return MurphyComponents(
        unc=unc,
        rel=rel / n,
        res=res / n,
        brier_direct=direct,
        base_rate=base_rate,
        n=n,
        bin_stats=tuple(stats),
    )


def alpha_anatomy(
    agent: MurphyComponents, baseline: MurphyComponents
) -> tuple[float, float]:
    """Split alpha into (resolution_gain, reliability_gap).

    resolution_gain = RES_agent - RES_baseline;
    reliability_gap = REL_baseline - REL_agent. Their sum approximates
    alpha with error bounded by the two binning residuals. Requires both
    decompositions over the same outcome vector, hence identical base
    rates (and UNC); anything else is rejected.
    """
    if agent.base_rate != baseline.base_rate:
        raise ValueError(
            "agent and baseline must share the same outcome set: "
            f"base rates {agent.base_rate} vs {baseline.base_rate}"
        )
    return agent.res - baseline.res, baseline.rel - agent.rel
