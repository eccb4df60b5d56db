"""Sampling theory for the Alpha score: variance, standard errors, t-tests,
and sample-size planning.

The per-market alpha delta = (b - X)^2 - (p - X)^2 is linear in the
Bernoulli outcome X, so its variance has the closed form
4*q*(1-q)*(b-p)^2: bolder deviations from the market carry more signal
but also more noise, and echoing the market (b = p) is deterministic.

Two SE scales coexist and are reported separately: the per-market SE of
mean alpha under homogeneity (se_alpha_homogeneous), and the empirical
per-round SE used by the one-sample t-test over per-round alphas
(alpha_t_test). The sample-size planner is one-sided, as power designs
usually are; the reported test is two-sided.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

# Acklam's rational approximation for the inverse normal CDF (relative
# error < 1.15e-9), refined below with one Halley step to full precision.
_A = (-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
      1.383577518672690e+02, -3.066479806614716e+01, 2.506628277459239e+00)
_B = (-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
      6.680131188771972e+01, -1.328068155288572e+01)
_C = (-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
      -2.549732539343734e+00, 4.374664141464968e+00, 2.938163982698783e+00)
_D = (7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
      3.754408661907416e+00)
_P_LOW = 0.02425


def inverse_normal_cdf(p: float) -> float:
    """Quantile function of the standard normal distribution.

    Accurate to better than 1e-9 (in practice near machine precision
    after the Halley refinement step).
    """
    if not 0.0 < p < 1.0:
        raise ValueError(f"quantile argument must be in (0, 1), got {p}")

    if p < _P_LOW:
        q = math.sqrt(-2.0 * math.log(p))
        x = ((((((_C[0] * q + _C[1]) * q + _C[2]) * q + _C[3]) * q + _C[4]) * q + _C[5])
             / ((((_D[0] * q + _D[1]) * q + _D[2]) * q + _D[3]) * q + 1.0))
    elif p <= 1.0 - _P_LOW:
        q = p - 0.5
        r = q * q
        x = ((((((_A[0] * r + _A[1]) * r + _A[2]) * r + _A[3]) * r + _A[4]) * r + _A[5]) * q
             / (((((_B[0] * r + _B[1]) * r + _B[2]) * r + _B[3]) * r + _B[4]) * r + 1.0))
    else:
        q = math.sqrt(-2.0 * math.log(1.0 - p))
        x = -((((((_C[0] * q + _C[1]) * q + _C[2]) * q + _C[3]) * q + _C[4]) * q + _C[5])
              / ((((_D[0] * q + _D[1]) * q + _D[2]) * q + _D[3]) * q + 1.0))

    # One Halley step against the exact CDF via erfc.
    err = 0.5 * math.erfc(-x / math.sqrt(2.0)) - p
    u = err * math.sqrt(2.0 * math.pi) * math.exp(x * x / 2.0)
    return x - u / (1.0 + x * u / 2.0)


@dataclass(frozen=True)
class PowerSpec:
    """Design parameters for detecting a true edge alpha_star > 0.

    kappa is the one-sided significance level, power the target
    probability of detection, q_bar the mean outcome probability, and
    boldness the mean absolute deviation |b - p| from the market.
    """

    alpha_star: float
    kappa: float = 0.05
    power: float = 0.80
    q_bar: float = 0.5
    boldness: float = 0.15

    def __post_init__(self) -> None:
        if self.alpha_star <= 0:
            raise ValueError(f"alpha_star must be > 0, got {self.alpha_star}")
        if not 0.0 < self.kappa < 1.0:
            raise ValueError(f"kappa must be in (0, 1), got {self.kappa}")
        if not 0.0 < self.power < 1.0:
            raise ValueError(f"power must be in (0, 1), got {self.power}")
        if not 0.0 <= self.q_bar <= 1.0:
            raise ValueError(f"q_bar must be in [0, 1], got {self.q_bar}")
        if not 0.0 <= self.boldness <= 1.0:
            raise ValueError(f"boldness must be in [0, 1], got {self.boldness}")


@dataclass(frozen=True)
class AlphaTestResult:
    """One-sample t-test of per-round alphas against zero (two-sided p)."""

    mean_alpha: float
    std_error: float
    t_stat: float
    p_value: float
    n_rounds: int


def var_per_market_delta(benchmark: float, prediction: float, q: float) -> float:
    """Variance of the per-market alpha delta: 4*q*(1-q)*(b-p)^2."""
    for name, v in (("benchmark", benchmark), ("prediction", prediction), ("q", q)):
        if not 0.0 <= v <= 1.0:
            raise ValueError(f"{name} must be in [0, 1], got {v}")
    return 4.0 * q * (1.0 - q) * (benchmark - prediction) ** 2


def se_alpha_homogeneous(n: int, boldness: float, q_bar: float) -> float:
    """Per-market-scale SE of mean alpha under homogeneous markets.

    2 * boldness * sqrt(q_bar*(1-q_bar)) / sqrt(n).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0.0 <= boldness <= 1.0:
        raise ValueError(f"boldness must be in [0, 1], got {boldness}")
    if not 0.0 <= q_bar <= 1.0:
        raise ValueError(f"q_bar must be in [0, 1], got {q_bar}")
    return 2.0 * boldness * math.sqrt(q_bar * (1.0 - q_bar)) / math.sqrt(n)


def required_sample_size(spec: PowerSpec, markets_per_round: int = 7) -> tuple[int, int]:
    """Markets and rounds needed to detect spec.alpha_star at the given design.

    n = ceil( ((z_{1-kappa} + z_power) / alpha_star)^2 * 4*q(1-q)*boldness^2 ),
    rounds = ceil(n / markets_per_round).

    The z quantiles are rounded to three decimals before use (1.645 and
    0.842 at the defaults), matching the convention of worked power
    calculations; full-precision quantiles would shift the most extreme
    row of the standard table by a couple of markets.
    """
    if markets_per_round < 1:
        raise ValueError(f"markets_per_round must be >= 1, got {markets_per_round}")
    z_sig = round(inverse_normal_cdf(1.0 - spec.kappa), 3)
    z_pow = round(inverse_normal_cdf(spec.power), 3)
    bound = ((z_sig + z_pow) / spec.alpha_star) ** 2 \
        * 4.0 * spec.q_bar * (1.0 - spec.q_bar) * spec.boldness ** 2
    n = math.ceil(bound)
    return n, math.ceil(n / markets_per_round)


DEFAULT_ALPHA_STAR_GRID = (0.005, 0.010, 0.020, 0.030, 0.050, 0.100)


def power_table(
    alpha_stars: Sequence[float] = DEFAULT_ALPHA_STAR_GRID,
    kappa: float = 0.05,
    power: float = 0.80,
    q_bar: float = 0.5,
    boldness: float = 0.15,
    markets_per_round: int = 7,
) -> list[tuple[float, int, int]]:
    """Tabulate (alpha_star, n, rounds) over a grid of effect sizes."""
    rows = []
    for a in alpha_stars:
        spec = PowerSpec(alpha_star=a, kappa=kappa, power=power,
                         q_bar=q_bar, boldness=boldness)
        n, rounds = required_sample_size(spec, markets_per_round)
        rows.append((a, n, rounds))
    return rows


def alpha_t_test(per_round_alphas: Sequence[float]) -> AlphaTestResult:
    """One-sample t-test of mean per-round alpha against zero.

    Uses the sample SD with R-1 denominator and a two-sided p-value from
    the t distribution with R-1 degrees of freedom. A zero-SD series is
    reported with a +/-infinity t sentinel and p = 0.
    """
    r = len(per_round_alphas)
    if r < 2:
        raise ValueError(f"t-test requires at least 2 rounds, got {r}")
    mean = sum(per_round_alphas) / r
    ss = sum((a - mean) ** 2 for a in per_round_alphas)
    sd = math.sqrt(ss / (r - 1))
    se = sd / math.sqrt(r)
    if se == 0.0:
        return AlphaTestResult(mean, 0.0, math.copysign(math.inf, mean), 0.0, r)
    t = mean / se
    from scipy import stats  # deferred: keeps CLI startup light

    p = 2.0 * float(stats.t.sf(abs(t), r - 1))
    return AlphaTestResult(mean, se, t, p, r)


def beat_fraction(per_round_alphas: Sequence[float]) -> float:
    """Fraction of rounds with strictly positive alpha; zeros do not count."""
    if not per_round_alphas:
        raise ValueError("beat fraction requires at least one round")
    return sum(1 for a in per_round_alphas if a > 0.0) / len(per_round_alphas)
