"""Reference-point evaluation of game positions.

The net utility of standing at position p relative to a reference r is
u(p) - u(r), the net change in expected payoff. Measured against Fold every
playing position of the canonical game looks equally attractive (1/2), so
the incremental loop here walks positions upward, keeps the best net change
seen so far, and moves the reference only on strict improvement. Strictness
matters: among utility-equal positions it pins the reference to the smallest
one, which is the resource-preserving choice, and `break_tie` applies the
same idea to arbitrary alternatives with explicit resource vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from petersburg._rationals import format_rational, parse_rational
from petersburg.game import GamePosition, GameSpec, position

TRACE_HEADER = "step\tcurr_pos\tnuc\tnuc_star\tref_pos"

TERMINATION_KINDS = ("horizon", "patience", "budget")


@dataclass(frozen=True)
class ReferencePoint:
    """A position adopted as the baseline that net changes are measured from."""

    position: GamePosition
    utility: Fraction

    def __post_init__(self):
        if self.utility != self.position.expected_payoff:
            raise ValueError("reference utility must equal the position's expected payoff")

    @classmethod
    def at(cls, p: GamePosition) -> "ReferencePoint":
        return cls(p, p.expected_payoff)

    @classmethod
    def fold(cls) -> "ReferencePoint":
        return cls.at(position(0))


def net_utility_vs_reference(p: GamePosition, ref: ReferencePoint) -> Fraction:
    """Net change in expected payoff when moving from the reference to p."""
    return p.expected_payoff - ref.utility


def relative_net_utility_table(n: int) -> list[tuple[int, Fraction, Fraction]]:
    """Rows (k, net utility vs Fold, net utility vs best reference so far).

    Scanning k = 1..n with a dynamic reference: k = 1 improves on Fold by 1/2
    and becomes the reference, after which every further position shows a
    relative change of 0.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"table length must be a positive integer, got {n!r}")
    fold = ReferencePoint.fold()
    ref = fold
    best = Fraction(0)
    rows = []
    for k in range(1, n + 1):
        p = position(k)
        net = net_utility_vs_reference(p, fold)
        relative = net_utility_vs_reference(p, ref)
        if relative > best:
            best = relative
            ref = ReferencePoint.at(p)
        rows.append((k, net, relative))
    return rows


@dataclass(frozen=True)
class TerminationCriterion:
    """Stopping rule for the incremental loop.

    horizon  stop once the given position index has been evaluated
    patience stop after that many consecutive non-improving steps
    budget   stop once cumulative evaluation cost (positions visited times
             the toss duration) reaches the cap

    The loop itself is otherwise unbounded, so a rule is mandatory.
    """

    kind: str
    threshold: int | Fraction

    def __post_init__(self):
        if self.kind not in TERMINATION_KINDS:
            raise ValueError(f"unknown termination kind {self.kind!r}")
        if self.kind in ("horizon", "patience"):
            if not isinstance(self.threshold, int) or isinstance(self.threshold, bool):
                raise ValueError(f"{self.kind} threshold must be an integer")
            if self.threshold < 1:
                raise ValueError(f"{self.kind} threshold must be positive")
        else:
            object.__setattr__(self, "threshold", parse_rational(self.threshold))
            if self.threshold <= 0:
                raise ValueError("budget threshold must be positive")

    @classmethod
    def horizon(cls, n: int) -> "TerminationCriterion":
        return cls("horizon", n)

    @classmethod
    def patience(cls, n: int) -> "TerminationCriterion":
        return cls("patience", n)

    @classmethod
    def budget(cls, cap) -> "TerminationCriterion":
        return cls("budget", cap)


@dataclass(frozen=True)
class EvaluationTrace:
    """Full state of one incremental evaluation run.

    steps records (position, net utility change) per loop iteration. The
    recorded best never drops below 0 because staying at Fold is always
    available, and ref_pos is the smallest position achieving it.
    """

    ref_pos: int
    curr_pos: int
    nuc: Fraction
    nuc_star: Fraction
    steps: tuple[tuple[int, Fraction], ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple((int(k), q) for k, q in self.steps))
        nucs = [q for _, q in self.steps]
        expected_star = max([Fraction(0), *nucs])
        if self.nuc_star != expected_star:
            raise ValueError("best net utility change must be the max of 0 and all recorded changes")
        if expected_star > 0:
            expected_ref = next(k for k, q in self.steps if q == expected_star)
        else:
            expected_ref = 0
        if self.ref_pos != expected_ref:
            raise ValueError("reference must be the smallest position achieving the best change")
        if self.steps:
            last_pos, last_nuc = self.steps[-1]
            if self.curr_pos != last_pos or self.nuc != last_nuc:
                raise ValueError("current position and change must match the last recorded step")
        elif self.curr_pos != 0 or self.nuc != 0:
            raise ValueError("empty trace must sit at Fold with no change")


def canonical_expected_utility(k: int) -> Fraction:
    """Expected payoff of position k in the doubling game: 1/2 for any k >= 1."""
    if k < 0:
        raise ValueError("position index must be non-negative")
    return Fraction(0) if k == 0 else Fraction(1, 2)


def incremental_evaluate(
    spec: GameSpec,
    term: TerminationCriterion,
    eu: Callable[[int], Fraction] | None = None,
    net_of_cost: bool = False,
) -> tuple[Fraction, int, EvaluationTrace]:
    """Run the incremental net-utility loop with a dynamic reference point.

    Starting from Fold, each step advances to the next position, measures the
    net utility change against the current reference, and adopts the position
    as the new reference only on strict improvement. Stops per `term`, always
    capped by spec.horizon. Returns (best change, reference position, trace).

    `eu` may supply the expected utility of any position so variant games
    reuse the loop; it defaults to the canonical game's exact curve. With
    `net_of_cost` the buy-in cost is charged to every playing position, so a
    cost above the expected payoff keeps the reference at Fold. By default
    the evaluation is gross of cost, matching the plain payoff table.
    """
    if eu is None:
        eu = canonical_expected_utility
    base = eu
    if net_of_cost:
        cost = spec.buy_in_cost

        def eu(k: int) -> Fraction:
            value = Fraction(base(k))
            return value - cost if k >= 1 else value

    ref_pos = 0
    curr_pos = 0
    nuc = Fraction(0)
    nuc_star = Fraction(0)
    steps: list[tuple[int, Fraction]] = []
    misses = 0

    while curr_pos < spec.horizon:
        curr_pos += 1
        nuc = Fraction(eu(curr_pos)) - Fraction(eu(ref_pos))
        steps.append((curr_pos, nuc))
        if nuc > nuc_star:
            nuc_star = nuc
            ref_pos = curr_pos
            misses = 0
        else:
            misses += 1
        if _terminated(term, spec, curr_pos, misses):
            break

    trace = EvaluationTrace(ref_pos, curr_pos, nuc, nuc_star, tuple(steps))
    return nuc_star, ref_pos, trace


def _terminated(term: TerminationCriterion, spec: GameSpec, curr_pos: int, misses: int) -> bool:
    if term.kind == "horizon":
        return curr_pos >= term.threshold
    if term.kind == "patience":
        return misses >= term.threshold
    return curr_pos * spec.toss_duration >= term.threshold


def format_trace(trace: EvaluationTrace) -> str:
    """Tab-separated trace rows, replaying the running best and reference."""
    lines = [TRACE_HEADER]
    best = Fraction(0)
    ref = 0
    for step, (pos, nuc) in enumerate(trace.steps, start=1):
        if nuc > best:
            best = nuc
            ref = pos
        lines.append(
            f"{step}\t{pos}\t{format_rational(nuc)}\t{format_rational(best)}\t{ref}"
        )
    return "\n".join(lines) + "\n"


def break_tie(alternatives: Sequence[tuple[Fraction, Sequence[Fraction]]]) -> int:
    """Index of the best alternative: max utility, then least resource use.

    Resources compare lexicographically in their declared order (time first
    by convention), so no exchange rate between resources is assumed. Any
    tie left after all criteria resolves to the lowest index.
    """
    if not alternatives:
        raise ValueError("no alternatives to choose from")
    width = len(alternatives[0][1])
    for utility, resources in alternatives:
        if len(resources) != width:
            raise ValueError("resource vectors must all have the same length")
    best_index = 0
    best_key = (-Fraction(alternatives[0][0]), tuple(alternatives[0][1]))
    for i, (utility, resources) in enumerate(alternatives[1:], start=1):
        key = (-Fraction(utility), tuple(resources))
        if key < best_key:
            best_key = key
            best_index = i
    return best_index
