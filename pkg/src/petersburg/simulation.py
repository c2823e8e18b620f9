"""Seeded Monte Carlo checks of the doubling game.

Games here follow the single-game event order: decide to play, pay the
buy-in, then toss until heads. The bounded variant tosses at most max_tosses
times and pays 0 when every toss is tails (the fold value), which gives the
truncated game the exact mean max_tosses / 2; a variant paying the top prize
on all-tails would change that, so the zero-payoff convention is part of
this module's contract.

Determinism: every trial draws from its own counter-derived stream keyed by
(seed, trial index), and trials reduce through a histogram of stopping
positions, which is order-independent. Statistics are then computed from the
histogram in exact integer and rational arithmetic before a single rounding
to float, so reports are bit-identical across runs, trial orderings, and
kernel backends.

Backend: the compiled kernel (petersburg._mc_core) is preferred when built;
otherwise the interpreted kernel is used. Set PETERSBURG_BACKEND=pure or
=compiled before import to force a choice.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction

from petersburg import _mc_pure
from petersburg.game import minimum_win

MAX_SEED = 2**64 - 1


def _select_kernel():
    choice = os.environ.get("PETERSBURG_BACKEND", "auto").strip().lower() or "auto"
    if choice == "pure":
        return _mc_pure, "pure"
    if choice == "compiled":
        from petersburg import _mc_core

        return _mc_core, "compiled"
    if choice != "auto":
        raise ImportError(f"PETERSBURG_BACKEND must be 'pure' or 'compiled', got {choice!r}")
    try:
        from petersburg import _mc_core

        return _mc_core, "compiled"
    except ImportError:
        return _mc_pure, "pure"


_KERNEL, _BACKEND = _select_kernel()


def backend() -> str:
    """Name of the active trial kernel, 'compiled' or 'pure'."""
    return _BACKEND


class FairCoin:
    """Deterministic fair coin; per-trial flip streams keyed by (seed, trial)."""

    def __init__(self, seed: int):
        _check_seed(seed)
        self.seed = seed

    def flips(self, trial: int):
        state = _mc_pure.trial_state(self.seed, trial)
        draw = 0
        while True:
            word = _mc_pure.stream_word(state, draw)
            for _ in range(64):
                yield bool(word & 1)
                word >>= 1
            draw += 1


class ConstantCoin:
    """Degenerate coin for tests: always heads or always tails."""

    def __init__(self, heads: bool = True):
        self.heads = bool(heads)

    def flips(self, trial: int):
        while True:
            yield self.heads


@dataclass(frozen=True)
class SimulationReport:
    """Empirical statistics of a batch of bounded games.

    std_error is sqrt(empirical_variance / trials) and the 95% interval is
    the mean plus/minus 1.96 standard errors, so ci95_low <= empirical_mean
    <= ci95_high always holds.
    """

    trials: int
    empirical_mean: float
    empirical_variance: float
    std_error: float
    ci95_low: float
    ci95_high: float
    seed: int
    max_tosses: int


def _check_seed(seed):
    if not isinstance(seed, int) or isinstance(seed, bool):
        raise ValueError(f"seed must be an integer, got {seed!r}")
    if not 0 <= seed <= MAX_SEED:
        raise ValueError("seed must fit in 64 unsigned bits")


def _check_positive(value, what):
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise ValueError(f"{what} must be a positive integer, got {value!r}")


def stopping_histogram(max_tosses, trials, seed, coin=None, first_trial=0):
    """Counts of games ending at each toss (index 0: no heads within bound).

    With `coin` given, trials run through the injected coin source on the
    interpreted path; otherwise the active kernel plays the fair game.
    """
    _check_positive(max_tosses, "max_tosses")
    _check_positive(trials, "trials")
    _check_seed(seed)
    if not isinstance(first_trial, int) or isinstance(first_trial, bool) or first_trial < 0:
        raise ValueError(f"first_trial must be a non-negative integer, got {first_trial!r}")
    if coin is not None:
        return _mc_pure.stop_histogram_from_coin(coin, trials, max_tosses, first_trial)
    return _KERNEL.stop_histogram(seed, trials, max_tosses, first_trial)


def simulate_truncated_game(max_tosses, trials, seed, coin=None) -> SimulationReport:
    """Play `trials` bounded games and report empirical statistics.

    Payoffs accumulate as exact integers via the stopping histogram, so the
    report is a pure function of (seed, trials, max_tosses) regardless of
    backend or trial scheduling.
    """
    counts = stopping_histogram(max_tosses, trials, seed, coin=coin)
    total = 0
    total_sq = 0
    for k in range(1, len(counts)):
        if counts[k]:
            prize = 1 << (k - 1)
            total += counts[k] * prize
            total_sq += counts[k] * prize * prize
    mean = Fraction(total, trials)
    if trials > 1:
        variance = Fraction(trials * total_sq - total * total, trials * (trials - 1))
    else:
        variance = Fraction(0)
    mean_f = float(mean)
    std_error = math.sqrt(variance / trials)
    return SimulationReport(
        trials=trials,
        empirical_mean=mean_f,
        empirical_variance=float(variance),
        std_error=std_error,
        ci95_low=mean_f - 1.96 * std_error,
        ci95_high=mean_f + 1.96 * std_error,
        seed=seed,
        max_tosses=max_tosses,
    )


def simulate_position_frequency(k, trials, seed, coin=None) -> float:
    """Fraction of games whose first heads lands exactly on toss k.

    Converges to 2**-k. Only the first k tosses of each trial matter, so the
    bounded histogram decides the event exactly.
    """
    _check_positive(k, "position index")
    counts = stopping_histogram(k, trials, seed, coin=coin)
    return float(Fraction(counts[k], trials))


def divergence_profile(max_n: int) -> list[tuple[int, Fraction]]:
    """Truncated expectations (n, n/2) for n = 1..max_n.

    Each bound adds another half ducat, growing without limit; the profile
    is the desk-scale witness that the unbounded game has no fair price.
    """
    _check_positive(max_n, "profile length")
    return [(n, Fraction(n, 2)) for n in range(1, max_n + 1)]


def report_to_dict(report: SimulationReport) -> dict:
    """JSON-ready mapping of a report, with the minimum win shown alongside."""
    return {
        "trials": report.trials,
        "empirical_mean": report.empirical_mean,
        "empirical_variance": report.empirical_variance,
        "std_error": report.std_error,
        "ci95_low": report.ci95_low,
        "ci95_high": report.ci95_high,
        "seed": report.seed,
        "max_tosses": report.max_tosses,
        "min_win": minimum_win(),
    }
