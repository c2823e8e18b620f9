"""Additive-utility action sequences and value-rational truncation.

Each action declares, per variable, the utility before (`pre`) and after
(`eff`) its application; the action's net utility is the summed difference.
Variables an action does not mention keep their utility and therefore cancel
out of every net-change computation. State utility is the sum of the
per-variable values, which makes plan utility additive: applying a sequence
of actions shifts the initial utility by the sum of the actions' nets.

`truncate` drops the worthless tail of a plan. Any plan that improves on the
initial state has a prefix at least as valuable that ends on a strictly
net-positive action; the shortest utility-maximal prefix satisfies that and
is also the cheapest among the maximal ones. When not even the best prefix
beats doing nothing, the empty prefix is returned.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Mapping, Sequence

from petersburg._rationals import parse_rational, rational_json_value

ORACLE_LENGTH_CAP = 20


class Preference(Enum):
    FIRST = "first"
    SECOND = "second"
    INDIFFERENT = "indifferent"


def polarity(q) -> int:
    """Sign of a net utility change: -1, 0, or +1."""
    return (q > 0) - (q < 0)


@dataclass(frozen=True)
class StateUtility:
    """Per-variable utility values; total state utility is their sum."""

    values: Mapping[str, Fraction]

    def __post_init__(self):
        object.__setattr__(
            self, "values", {str(v): parse_rational(q) for v, q in self.values.items()}
        )

    def total(self) -> Fraction:
        return sum(self.values.values(), Fraction(0))


@dataclass(frozen=True)
class PlanAction:
    """A named action with pre/eff utilities over the same variables.

    cost and duration are resources the action consumes; they never enter
    utility and only feed truncation accounting and tie-breaking.
    """

    name: str
    pre: Mapping[str, Fraction]
    eff: Mapping[str, Fraction]
    cost: Fraction = Fraction(0)
    duration: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "pre", {str(v): parse_rational(q) for v, q in self.pre.items()})
        object.__setattr__(self, "eff", {str(v): parse_rational(q) for v, q in self.eff.items()})
        object.__setattr__(self, "cost", parse_rational(self.cost))
        object.__setattr__(self, "duration", parse_rational(self.duration))
        if set(self.pre) != set(self.eff):
            raise ValueError(f"action {self.name!r} must declare pre and eff over the same variables")
        if self.cost < 0:
            raise ValueError(f"action {self.name!r} has negative cost")
        if self.duration < 0:
            raise ValueError(f"action {self.name!r} has negative duration")


def net_utility_of_action(a: PlanAction) -> Fraction:
    """Summed per-variable difference eff[v] - pre[v]."""
    return sum((a.eff[v] - a.pre[v] for v in a.eff), Fraction(0))


@dataclass(frozen=True)
class Plan:
    """An ordered action sequence applied to an initial state."""

    actions: tuple[PlanAction, ...]
    initial: StateUtility

    def __post_init__(self):
        object.__setattr__(self, "actions", tuple(self.actions))
        known = set(self.initial.values)
        for a in self.actions:
            missing = set(a.pre) - known
            if missing:
                raise ValueError(
                    f"action {a.name!r} touches variables absent from the initial state: {sorted(missing)}"
                )

    def total_cost(self) -> Fraction:
        return sum((a.cost for a in self.actions), Fraction(0))

    def total_duration(self) -> Fraction:
        return sum((a.duration for a in self.actions), Fraction(0))


@dataclass(frozen=True)
class TruncationResult:
    """Chosen prefix plus accounting, all net of the initial state.

    prefix_utility and full_utility are cumulative net utility changes, so a
    kept prefix always satisfies prefix_utility >= full_utility and an empty
    prefix reports 0, the value of doing nothing.
    """

    prefix_length: int
    prefix_utility: Fraction
    full_utility: Fraction
    prefix_cost: Fraction
    prefix_duration: Fraction


def prefer_by_outcome(a1_outcome, a2_outcome) -> Preference:
    """Preference by raw outcome utility alone; higher outcome wins."""
    a1_outcome = Fraction(a1_outcome)
    a2_outcome = Fraction(a2_outcome)
    if a1_outcome > a2_outcome:
        return Preference.FIRST
    if a2_outcome > a1_outcome:
        return Preference.SECOND
    return Preference.INDIFFERENT


def prefer_by_net_utility(a1: PlanAction, a2: PlanAction) -> tuple[Preference, int, int]:
    """Preference by net utility, with each action's polarity reported.

    The polarities let callers notice actions whose outcome looks attractive
    while the net change is actually zero or negative.
    """
    n1 = net_utility_of_action(a1)
    n2 = net_utility_of_action(a2)
    if n1 > n2:
        order = Preference.FIRST
    elif n2 > n1:
        order = Preference.SECOND
    else:
        order = Preference.INDIFFERENT
    return order, polarity(n1), polarity(n2)


def truncate(p: Plan) -> TruncationResult:
    """Shortest prefix maximizing cumulative net utility, in one linear scan.

    Strict improvement tracking keeps the earliest maximizer, which both
    guarantees the final prefix action is strictly net-positive (anything
    ending on a non-positive action is no shorter maximizer) and preserves
    resources among utility-equal prefixes.
    """
    best_len = 0
    best_value = Fraction(0)
    running = Fraction(0)
    for i, a in enumerate(p.actions, start=1):
        running += net_utility_of_action(a)
        if running > best_value:
            best_value = running
            best_len = i
    prefix = p.actions[:best_len]
    return TruncationResult(
        prefix_length=best_len,
        prefix_utility=best_value,
        full_utility=running,
        prefix_cost=sum((a.cost for a in prefix), Fraction(0)),
        prefix_duration=sum((a.duration for a in prefix), Fraction(0)),
    )


def truncate_oracle(p: Plan) -> TruncationResult:
    """Exhaustive ground truth for `truncate`, used in tests.

    Evaluates every prefix by actually applying its actions to a copy of the
    initial state and totalling the resulting per-variable utilities, a
    deliberately different route than the cumulative scan.
    """
    if len(p.actions) > ORACLE_LENGTH_CAP:
        raise ValueError(f"oracle enumerates exhaustively; plans longer than {ORACLE_LENGTH_CAP} rejected")
    initial_total = p.initial.total()
    state = dict(p.initial.values)
    best_len = 0
    best_value = Fraction(0)
    values = [Fraction(0)]
    for length, a in enumerate(p.actions, start=1):
        for v in a.eff:
            state[v] = state[v] + a.eff[v] - a.pre[v]
        value = sum(state.values(), Fraction(0)) - initial_total
        values.append(value)
        if value > best_value:
            best_value = value
            best_len = length
    prefix = p.actions[:best_len]
    return TruncationResult(
        prefix_length=best_len,
        prefix_utility=best_value,
        full_utility=values[-1],
        prefix_cost=sum((a.cost for a in prefix), Fraction(0)),
        prefix_duration=sum((a.duration for a in prefix), Fraction(0)),
    )


def plan_from_dict(data) -> Plan:
    """Build a plan from the JSON document structure.

    Expected shape: {"initial": {var: rational}, "actions": [{"name", "pre",
    "eff", "cost", "duration"}, ...]} with rationals as `p/q` strings or
    integers. cost and duration default to 0.
    """
    if not isinstance(data, dict):
        raise ValueError("plan document must be a JSON object")
    unknown = set(data) - {"initial", "actions"}
    if unknown:
        raise ValueError(f"plan document has unknown keys: {sorted(unknown)}")
    initial_raw = data.get("initial", {})
    if not isinstance(initial_raw, dict):
        raise ValueError("plan 'initial' must map variables to rationals")
    actions_raw = data.get("actions", [])
    if not isinstance(actions_raw, list):
        raise ValueError("plan 'actions' must be a list")
    actions = []
    for i, entry in enumerate(actions_raw):
        if not isinstance(entry, dict):
            raise ValueError(f"action #{i} must be an object")
        unknown = set(entry) - {"name", "pre", "eff", "cost", "duration"}
        if unknown:
            raise ValueError(f"action #{i} has unknown keys: {sorted(unknown)}")
        for key in ("pre", "eff"):
            if not isinstance(entry.get(key, None), dict):
                raise ValueError(f"action #{i} needs a {key!r} mapping")
        actions.append(
            PlanAction(
                name=str(entry.get("name", f"action-{i}")),
                pre=entry["pre"],
                eff=entry["eff"],
                cost=entry.get("cost", 0),
                duration=entry.get("duration", 0),
            )
        )
    return Plan(tuple(actions), StateUtility(initial_raw))


def parse_plan(text: str) -> Plan:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"plan document is not valid JSON: {exc}") from exc
    return plan_from_dict(data)


def load_plan(path) -> Plan:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_plan(fh.read())


def truncation_report(result: TruncationResult) -> dict:
    """JSON-ready mapping of the truncation outcome."""
    return {
        "prefix_length": result.prefix_length,
        "prefix_utility": rational_json_value(result.prefix_utility),
        "full_utility": rational_json_value(result.full_utility),
        "prefix_cost": rational_json_value(result.prefix_cost),
        "prefix_duration": rational_json_value(result.prefix_duration),
    }


def format_truncation_report(result: TruncationResult) -> str:
    return json.dumps(truncation_report(result), indent=2) + "\n"
