"""Exact model of the St. Petersburg doubling game.

A fair coin is tossed until it lands heads. Heads on toss k pays 2**(k-1)
ducats and has probability 2**-k, so every row of the payoff table carries
an expected payoff of exactly half a ducat, and the full table sums without
bound. Position k = 0 stands for Fold, the decision not to buy in at all,
with prize and expected payoff 0.

Probabilities and payoffs are `fractions.Fraction` values throughout so that
table equalities are exact rather than approximate. Utility transforms (log,
square root, or any user-supplied bounded map) are the one place floats
appear, since their values are irrational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from petersburg._rationals import format_rational, parse_rational

# Prizes are arbitrary-precision integers; 2**1023 already dwarfs any budget,
# so table and series generation stop here to bound memory.
TABLE_CAP = 1024

FOLD = 0

TABLE_HEADER = "k\tprobability\tprize\texpected_payoff"


@dataclass(frozen=True)
class GamePosition:
    """One row of the payoff table.

    k is the toss on which heads first appears; k = 0 encodes Fold, whose
    probability is absent (None). Constructing a row with values that break
    the game's arithmetic raises ValueError.
    """

    k: int
    probability: Fraction | None
    prize: int
    expected_payoff: Fraction

    def __post_init__(self):
        if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 0:
            raise ValueError(f"toss count must be a non-negative integer, got {self.k!r}")
        if self.k == 0:
            if self.probability is not None:
                raise ValueError("fold position has no probability")
            if self.prize != 0 or self.expected_payoff != 0:
                raise ValueError("fold position has prize 0 and expected payoff 0")
            return
        if self.probability != Fraction(1, 2**self.k):
            raise ValueError(f"position {self.k} must have probability 1/2^{self.k}")
        if self.prize != 2 ** (self.k - 1):
            raise ValueError(f"position {self.k} must have prize 2^{self.k - 1}")
        if self.expected_payoff != self.probability * self.prize:
            raise ValueError("expected payoff must equal probability * prize")

    @property
    def is_fold(self) -> bool:
        return self.k == 0


@dataclass(frozen=True)
class GameSpec:
    """Terms of one game: buy-in cost, player budget, toss duration, horizon.

    The player must be able to afford the game (cost <= budget); the horizon
    caps how many positions an evaluation will ever consider.
    """

    buy_in_cost: Fraction = Fraction(0)
    budget: Fraction = Fraction(0)
    toss_duration: Fraction = Fraction(1)
    horizon: int = TABLE_CAP

    def __post_init__(self):
        object.__setattr__(self, "buy_in_cost", parse_rational(self.buy_in_cost))
        object.__setattr__(self, "budget", parse_rational(self.budget))
        object.__setattr__(self, "toss_duration", parse_rational(self.toss_duration))
        if self.buy_in_cost < 0:
            raise ValueError("buy-in cost must be non-negative")
        if self.budget < 0:
            raise ValueError("budget must be non-negative")
        if self.buy_in_cost > self.budget:
            raise ValueError("player cannot afford the game: cost exceeds budget")
        if self.toss_duration <= 0:
            raise ValueError("toss duration must be positive")
        if not isinstance(self.horizon, int) or isinstance(self.horizon, bool) or self.horizon < 1:
            raise ValueError("horizon must be a positive integer")


def position(k: int) -> GamePosition:
    """The game position for toss count k; k = 0 yields Fold."""
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise ValueError(f"toss count must be a non-negative integer, got {k!r}")
    if k == 0:
        return GamePosition(0, None, 0, Fraction(0))
    return GamePosition(k, Fraction(1, 2**k), 2 ** (k - 1), Fraction(1, 2))


def payoff_table(n: int, include_fold: bool = False) -> list[GamePosition]:
    """Rows k = 1..n of the payoff table, optionally prefixed by the Fold row."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"table length must be a positive integer, got {n!r}")
    if n > TABLE_CAP:
        raise ValueError(f"table length capped at {TABLE_CAP}, got {n}")
    rows = [position(k) for k in range(1, n + 1)]
    if include_fold:
        rows.insert(0, position(FOLD))
    return rows


def minimum_win() -> int:
    """Smallest prize a participating player can win (heads on the first toss).

    Worth noting next to the expected payoff of 1/2: whoever buys in and wins
    never wins less than a full ducat.
    """
    return position(1).prize


def is_break_even(costs: Iterable[Fraction], values: Iterable[Fraction]) -> bool:
    """True when accumulated value equals accumulated cost, exactly.

    Doing nothing (both lists empty) is break-even by definition.
    """
    total_cost = sum(costs, Fraction(0))
    total_value = sum(values, Fraction(0))
    return total_value == total_cost


@dataclass(frozen=True)
class UtilityTransform:
    """Monotone non-decreasing map from prize to perceived utility.

    The classic concave choices (natural log, square root) model diminishing
    marginal utility; `identity` leaves prizes untouched. Custom maps are
    accepted and trusted to be monotone over non-negative prizes.
    """

    kind: str
    fn: Callable[[int], float]

    @classmethod
    def identity(cls) -> "UtilityTransform":
        return cls("identity", float)

    @classmethod
    def natural_log(cls) -> "UtilityTransform":
        return cls("log", math.log)

    @classmethod
    def square_root(cls) -> "UtilityTransform":
        return cls("sqrt", math.sqrt)

    @classmethod
    def from_callable(cls, fn: Callable[[int], float], kind: str = "user") -> "UtilityTransform":
        return cls(kind, fn)


def named_transform(kind: str) -> UtilityTransform:
    """Look up one of the built-in transforms by name."""
    table = {
        "identity": UtilityTransform.identity,
        "log": UtilityTransform.natural_log,
        "sqrt": UtilityTransform.square_root,
    }
    if kind not in table:
        raise ValueError(f"unknown transform {kind!r}; expected one of {sorted(table)}")
    return table[kind]()


def transformed_expected_utility(t: UtilityTransform, n_terms: int) -> float:
    """Partial sum over k = 1..n_terms of 2**-k * t(prize(k)).

    Returned as a float since log and sqrt values are irrational. Terms are
    combined with math.fsum and each term is scaled with ldexp, so the only
    rounding is in the transform itself and one final rounding of the sum.
    """
    if not isinstance(n_terms, int) or isinstance(n_terms, bool) or n_terms < 1:
        raise ValueError(f"term count must be a positive integer, got {n_terms!r}")
    if n_terms > TABLE_CAP:
        raise ValueError(f"term count capped at {TABLE_CAP}, got {n_terms}")
    terms = []
    for k in range(1, n_terms + 1):
        prize = 2 ** (k - 1)
        terms.append(math.ldexp(t.fn(prize), -k))
    return math.fsum(terms)


def format_payoff_table(rows: Iterable[GamePosition]) -> str:
    """Tab-separated table text: header plus one row per position.

    Rationals print as `p/q`, integers as plain decimals, and the Fold row's
    absent probability as `-`.
    """
    lines = [TABLE_HEADER]
    for row in rows:
        prob = "-" if row.probability is None else format_rational(row.probability)
        lines.append(
            f"{row.k}\t{prob}\t{row.prize}\t{format_rational(row.expected_payoff)}"
        )
    return "\n".join(lines) + "\n"


def parse_payoff_table(text: str) -> list[GamePosition]:
    """Parse `format_payoff_table` output back into validated positions."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines or lines[0] != TABLE_HEADER:
        raise ValueError("payoff table text must start with the standard header")
    rows = []
    for line in lines[1:]:
        parts = line.split("\t")
        if len(parts) != 4:
            raise ValueError(f"payoff table row must have 4 fields, got {line!r}")
        k = int(parts[0])
        probability = None if parts[1] == "-" else parse_rational(parts[1])
        prize = int(parts[2])
        expected = parse_rational(parts[3])
        rows.append(GamePosition(k, probability, prize, expected))
    return rows
