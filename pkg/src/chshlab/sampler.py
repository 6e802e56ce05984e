"""Seeded Monte Carlo Bell runs: Born-rule outcomes per setting pair.

Reproducibility contract: every random draw comes from the counter-based
generator in `rng`, so identical configurations give bit-identical results
on any platform.  The master seed spawns one child stream per setting pair
in the fixed order a1b1, a1b2, a2b1, a2b2 (pair index 0..3), and each shot
maps one uniform to an outcome cell by inverse CDF over the fixed cell
order (+,+), (+,-), (-,+), (-,-).

When calling `sample_pair` directly with many seeds, derive them through
`rng.child_seed` rather than using consecutive integers: splitmix64 streams
from sequential raw seeds carry a faint correlation that the extra mixing
step removes (run_experiment already does this).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import rng
from .chsh import Scenario
from .quantum import DensityMatrix, Observable, joint_distribution

PAIR_LABELS = ("a1b1", "a1b2", "a2b1", "a2b2")


@dataclass(frozen=True)
class PairCounts:
    """2x2 outcome counts for one setting pair."""

    pp: int
    pm: int
    mp: int
    mm: int

    @property
    def total(self) -> int:
        return self.pp + self.pm + self.mp + self.mm

    def correlation_estimate(self) -> float:
        return (self.pp + self.mm - self.pm - self.mp) / self.total


@dataclass
class RunConfig:
    scenario: Scenario
    shots_per_pair: int
    seed: int

    def __post_init__(self):
        if self.shots_per_pair < 1:
            raise ValueError("shots_per_pair >= 1 required")
        if not (0 <= self.seed <= rng.MASK64):
            raise ValueError("seed must be an unsigned 64-bit integer")


@dataclass
class RunResult:
    """Counts and estimates of one full four-pair run.

    e_hat follows PAIR_LABELS order; s_hat = e11 + e12 + e21 - e22 and
    s_stderr = sqrt(sum_ij (1 - e_ij^2) / shots), each variance clamped
    at zero.
    """

    counts: list[PairCounts]
    e_hat: list[float]
    s_hat: float
    s_stderr: float
    seed: int
    shots_per_pair: int


def sample_pair(
    rho: DensityMatrix, a: Observable, b: Observable, shots: int, seed: int
) -> PairCounts:
    """Draw i.i.d. joint outcomes for one setting pair from stream `seed`.

    The four cell probabilities are renormalized by their float sum before
    the inverse-CDF lookup; cells with exact probability zero can then never
    be hit, because their CDF interval is empty and the final CDF value is
    exactly 1.0 > u for every uniform u < 1.
    """
    if shots < 1:
        raise ValueError("shots >= 1 required")
    dist = joint_distribution(rho, a, b)
    probs = np.maximum(dist.as_array(), 0.0)
    cdf = np.cumsum(probs)
    cdf /= cdf[-1]
    u = rng.uniforms(seed, shots)
    cells = np.searchsorted(cdf, u, side="right")
    n = np.bincount(cells, minlength=4)
    return PairCounts(pp=int(n[0]), pm=int(n[1]), mp=int(n[2]), mm=int(n[3]))


def run_experiment(cfg: RunConfig) -> RunResult:
    """Sample all four setting pairs and assemble estimates."""
    sc = cfg.scenario
    if sc.state is None:
        raise ValueError("scenario has no state; a Bell run needs one")
    pairs = ((sc.a1, sc.b1), (sc.a1, sc.b2), (sc.a2, sc.b1), (sc.a2, sc.b2))
    counts = [
        sample_pair(sc.state, a, b, cfg.shots_per_pair, rng.child_seed(cfg.seed, i))
        for i, (a, b) in enumerate(pairs)
    ]
    e_hat = [c.correlation_estimate() for c in counts]
    s_hat = e_hat[0] + e_hat[1] + e_hat[2] - e_hat[3]
    var = sum(max(0.0, 1.0 - e * e) / cfg.shots_per_pair for e in e_hat)
    return RunResult(
        counts=counts,
        e_hat=e_hat,
        s_hat=s_hat,
        s_stderr=float(np.sqrt(var)),
        seed=cfg.seed,
        shots_per_pair=cfg.shots_per_pair,
    )
