"""Command-line front door.

Subcommands map one-to-one onto the library: table, evaluate, truncate,
tiebreak, transform, simulate. Output is plain deterministic text (TSV for
tables and traces, JSON for reports) so runs can be diffed and audited.
Usage errors exit 2; domain errors print a one-line diagnostic and exit 1.
"""

from __future__ import annotations

import argparse
import json
import sys

from petersburg import evaluation, game, plans, simulation
from petersburg._rationals import format_rational, parse_rational, rational_json_value


def _parse_seed(text: str) -> int:
    try:
        value = int(text, 16) if text.lower().startswith("0x") else int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be decimal or hex, got {text!r}")
    return value


def _parse_ratio(text: str):
    try:
        return parse_rational(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a rational such as 3 or 1/2, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="petersburg",
        description="Evaluate the doubling-coin gamble by relative net utility.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    output_parent = argparse.ArgumentParser(add_help=False)
    output_parent.add_argument("--output", metavar="PATH", help="write the report to a file instead of stdout")

    p = sub.add_parser(
        "table",
        parents=[output_parent],
        help="emit the payoff table (toss count, probability, prize, expected payoff)",
        description="Emit the doubling-game payoff table as tab-separated text. "
        "Every playing row carries an expected payoff of exactly 1/2; --fold "
        "prepends the position of not buying in at all.",
    )
    p.add_argument("--n", type=int, required=True, help="number of toss positions")
    p.add_argument("--fold", action="store_true", help="prepend the fold row")

    p = sub.add_parser(
        "evaluate",
        parents=[output_parent],
        help="run the incremental net-utility loop with a dynamic reference point",
        description="Walk game positions upward, tracking the best net utility "
        "change and moving the reference only on strict improvement. Prints a "
        "summary line and the step-by-step trace.",
    )
    stop = p.add_mutually_exclusive_group()
    stop.add_argument("--patience", type=int, help="stop after this many consecutive non-improving steps")
    stop.add_argument("--horizon", type=int, help="stop once this position has been evaluated")
    stop.add_argument("--eval-budget", type=_parse_ratio, metavar="RATIONAL", help="stop once cumulative evaluation cost reaches this cap")
    p.add_argument("--cost", type=_parse_ratio, default=parse_rational(0), metavar="RATIONAL", help="buy-in cost")
    p.add_argument("--net-of-cost", action="store_true", help="charge the buy-in cost to every playing position")
    p.add_argument("--max-positions", type=int, default=game.TABLE_CAP, help="hard cap on positions considered")

    p = sub.add_parser(
        "truncate",
        parents=[output_parent],
        help="truncate a plan to its shortest utility-maximal prefix",
        description="Read a plan (JSON: initial state utilities plus actions "
        "with pre/eff utilities, cost, duration) and drop the tail that adds "
        "no net utility. The kept prefix is at least as valuable as the full "
        "plan and ends on a strictly net-positive action, or is empty when "
        "doing nothing is best.",
    )
    p.add_argument("--plan", required=True, metavar="PATH", help="plan document to truncate")

    p = sub.add_parser(
        "tiebreak",
        parents=[output_parent],
        help="pick among alternatives by utility, then least resource use",
        description="Read alternatives (JSON: utility plus a resource vector "
        "each) and pick the winner: maximum utility first, then lexicographically "
        "least resources, then lowest index.",
    )
    p.add_argument("--alts", required=True, metavar="PATH", help="alternatives document")

    p = sub.add_parser(
        "transform",
        parents=[output_parent],
        help="partial sum of expected utility under a prize transform",
        description="Sum 2**-k times the transformed prize over the first "
        "positions. Concave transforms (log, sqrt) give convergent sums, the "
        "numerical face of bounded-utility resolutions of the gamble.",
    )
    p.add_argument("--kind", required=True, choices=["identity", "log", "sqrt"], help="prize transform")
    p.add_argument("--terms", type=int, required=True, help="number of series terms")

    p = sub.add_parser(
        "simulate",
        parents=[output_parent],
        help="seeded Monte Carlo runs of the bounded game",
        description="Play independent bounded games (pay, toss until heads or "
        "the toss cap, collect 2**(k-1) on heads at toss k, nothing on all "
        "tails) and report empirical statistics. Identical seeds give "
        "bit-identical reports.",
    )
    p.add_argument("--max-tosses", type=int, required=True, help="toss cap per game")
    p.add_argument("--trials", type=int, required=True, help="number of independent games")
    p.add_argument("--seed", type=_parse_seed, required=True, help="64-bit seed, decimal or 0x-hex")

    return parser


def _emit(text: str, output_path) -> None:
    if output_path:
        with open(output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_table(args) -> str:
    rows = game.payoff_table(args.n, include_fold=args.fold)
    return game.format_payoff_table(rows)


def _cmd_evaluate(args) -> str:
    if args.patience is not None:
        term = evaluation.TerminationCriterion.patience(args.patience)
    elif args.horizon is not None:
        term = evaluation.TerminationCriterion.horizon(args.horizon)
    elif args.eval_budget is not None:
        term = evaluation.TerminationCriterion.budget(args.eval_budget)
    else:
        term = evaluation.TerminationCriterion.patience(3)
    spec = game.GameSpec(buy_in_cost=args.cost, budget=args.cost, horizon=args.max_positions)
    nuc_star, ref_pos, trace = evaluation.incremental_evaluate(spec, term, net_of_cost=args.net_of_cost)
    summary = f"nuc_star={format_rational(nuc_star)} ref_pos={ref_pos}\n"
    return summary + evaluation.format_trace(trace)


def _cmd_truncate(args) -> str:
    plan = plans.load_plan(args.plan)
    return plans.format_truncation_report(plans.truncate(plan))


def _load_alternatives(path):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"alternatives document is not valid JSON: {exc}") from exc
    if not isinstance(data, dict) or not isinstance(data.get("alternatives"), list):
        raise ValueError("alternatives document must be {\"alternatives\": [...]}")
    alts = []
    for i, entry in enumerate(data["alternatives"]):
        if not isinstance(entry, dict) or "utility" not in entry or "resources" not in entry:
            raise ValueError(f"alternative #{i} needs 'utility' and 'resources'")
        if not isinstance(entry["resources"], list):
            raise ValueError(f"alternative #{i} 'resources' must be a list")
        utility = parse_rational(entry["utility"])
        resources = tuple(parse_rational(r) for r in entry["resources"])
        alts.append((utility, resources))
    return alts


def _cmd_tiebreak(args) -> str:
    alts = _load_alternatives(args.alts)
    index = evaluation.break_tie(alts)
    utility, resources = alts[index]
    report = {
        "index": index,
        "utility": rational_json_value(utility),
        "resources": [rational_json_value(r) for r in resources],
    }
    return json.dumps(report, indent=2) + "\n"


def _cmd_transform(args) -> str:
    t = game.named_transform(args.kind)
    value = game.transformed_expected_utility(t, args.terms)
    report = {"kind": args.kind, "terms": args.terms, "partial_sum": value}
    return json.dumps(report, indent=2) + "\n"


def _cmd_simulate(args) -> str:
    report = simulation.simulate_truncated_game(args.max_tosses, args.trials, args.seed)
    return json.dumps(simulation.report_to_dict(report), indent=2) + "\n"


_COMMANDS = {
    "table": _cmd_table,
    "evaluate": _cmd_evaluate,
    "truncate": _cmd_truncate,
    "tiebreak": _cmd_tiebreak,
    "transform": _cmd_transform,
    "simulate": _cmd_simulate,
}


def run(argv=None) -> int:
    """Parse argv and dispatch: 0 on success, 2 on usage error, 1 on domain error."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = _COMMANDS[args.subcommand](args)
        _emit(text, args.output)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
