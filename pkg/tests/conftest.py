from fractions import Fraction

import pytest

from petersburg.plans import Plan, PlanAction, StateUtility


def single_var_action(net, name="a", cost=0, duration=0) -> PlanAction:
    """Action over one variable whose net utility is exactly `net`."""
    return PlanAction(name=name, pre={"x": 0}, eff={"x": net}, cost=cost, duration=duration)


def plan_from_nets(nets, costs=None, durations=None) -> Plan:
    costs = costs or [0] * len(nets)
    durations = durations or [0] * len(nets)
    actions = [
        single_var_action(net, name=f"a{i}", cost=c, duration=d)
        for i, (net, c, d) in enumerate(zip(nets, costs, durations))
    ]
    return Plan(tuple(actions), StateUtility({"x": Fraction(0)}))


@pytest.fixture
def canonical_plan() -> Plan:
    """The worked truncation example: nets +2, -1, +3, 0, -2."""
    return plan_from_nets([2, -1, 3, 0, -2])
