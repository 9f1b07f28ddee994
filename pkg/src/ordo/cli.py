"""Command-line front end.

Exit status: 0 success, 1 usage error, 2 parse or validation error,
3 guard violation (an exhaustive search refused on a large universe).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from ordo.ballots import Profile, StrengthMatrix, StrengthRule, TallyMatrix, read_profile, strength_matrix, tally
from ordo.criteria import condorcet_winner_loser, extended_condorcet_check, pareto_check
from ordo.errors import BallotParseError, ConsistencyError, GuardError
from ordo.methods import borda_ranking, kemeny_orders, ranked_pairs_outcomes, simpson_kramer, winner_report
from ordo.ordersets import (
    OrderKind,
    constraint_oracle,
    ladder_closures,
    order_set,
    s_constraint,
    schulze_relation,
    widest_paths,
)
from ordo.relation import DEFAULT_CAP, BinaryRelation, LinearOrder, asymmetric_part, maximal_set, respects
from ordo.supermajority import alpha_star, critical_thresholds

COMMANDS = (
    "tally",
    "constraints",
    "s-set",
    "t-set",
    "schulze",
    "ranked-pairs",
    "kemeny",
    "borda",
    "minmax",
    "winners",
    "check",
)
CRITERIA = ("ecc", "pareto", "s-set", "t-set")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


@dataclass(frozen=True)
class RunConfig:
    input: str
    command: str
    rule: StrengthRule = StrengthRule.RATIO
    cap: int = DEFAULT_CAP
    fmt: str = "text"
    order: str | None = None
    criteria: tuple[str, ...] = CRITERIA

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.cap < 1:
            raise UsageError("--cap must be a positive integer")
        if self.command == "check" and not self.order:
            raise UsageError("check requires --order")
        if self.order and self.command != "check":
            raise UsageError("--order is only valid with check")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--strength", choices=[r.value for r in StrengthRule], default="ratio",
                        help="strength rule: ratio n/(n+m) or margin (|I|+n-m)/(2|I|)")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum number of orders to list")
    common.add_argument("--format", dest="fmt", choices=["text", "json"], default="text")
    common.add_argument("input", help="ballot file")

    parser = _Parser(prog="ordo", description="Order sets for supermajority rules.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "check":
            p.add_argument("--order", required=True, help="comma separated order, best first")
            p.add_argument("--criterion", action="append", choices=CRITERIA + ("all",),
                           help="criterion to check (repeatable); default all")
    return parser


def parse_args(argv) -> RunConfig:
    ns = build_parser().parse_args(argv)
    crit = getattr(ns, "criterion", None) or ["all"]
    criteria = CRITERIA if "all" in crit else tuple(c for c in CRITERIA if c in crit)
    return RunConfig(
        input=ns.input,
        command=ns.command,
        rule=StrengthRule(ns.strength),
        cap=ns.cap,
        fmt=ns.fmt,
        order=getattr(ns, "order", None),
        criteria=criteria,
    )


def rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _pairs(r: BinaryRelation) -> list[list[str]]:
    return [[a, b] for a, b in r.pairs()]


def _labels(u, s) -> list[str]:
    return u.sorted_labels(s)


def _matrix(m, conv):
    return [[None if v is None else conv(v) for v in row] for row in m]


def _enum_payload(os_, cap):
    res = os_.members(cap)
    return {
        "constraint": _pairs(os_.constraint),
        "orders": [list(o.labels) for o in res.orders],
        "count": res.total,
        "count_exact": res.exact,
        "truncated": res.truncated,
    }


def _verdict(v) -> dict:
    w = v.witness
    if w is not None:
        w = {k: list(x) for k, x in w.items()}
    return {"passed": v.passed, "witness": w}


def _respect_verdict(order: LinearOrder, constraint: BinaryRelation) -> dict:
    chk = respects(order, constraint)
    return {"passed": chk.ok, "witness": None if chk.ok else {"pair": list(chk.witness)}}


def compute(cfg: RunConfig, profile: Profile) -> dict:
    t: TallyMatrix = tally(profile)
    phi: StrengthMatrix = strength_matrix(t, cfg.rule)
    ladder = critical_thresholds(phi)
    u = profile.universe
    out = {
        "command": cfg.command,
        "strength_rule": cfg.rule.value,
        "universe": list(u.labels),
        "voters": t.voters,
        "tally": _matrix([[None if i == j else v for j, v in enumerate(row)] for i, row in enumerate(t.counts)], int),
        "strengths": _matrix(phi.phi, rational),
        "ladder": {
            "thresholds": [rational(x) for x in ladder.thresholds],
            "representatives": [rational(x) for x in ladder.representatives],
        },
    }
    cmd = cfg.command
    if cmd == "tally":
        star = alpha_star(phi, ladder)
        winner, loser = condorcet_winner_loser(t)
        out["majority"] = _pairs(t.majority())
        out["alpha_star"] = None if not star.exists else rational(star.value)
        out["condorcet"] = {"winner": winner, "loser": loser}
    elif cmd == "constraints":
        w = widest_paths(phi)
        s, tc = s_constraint(phi, w), schulze_relation(w)
        oracle = constraint_oracle(phi)
        star = alpha_star(phi, ladder)
        out["widest_paths"] = _matrix(w.b, rational)
        out["alpha_star"] = None if not star.exists else rational(star.value)
        out["s_constraint"] = _pairs(s)
        out["s_oracle"] = _pairs(oracle.s_union)
        out["s_matches_oracle"] = s == oracle.s_union
        out["t_constraint"] = _pairs(tc)
        out["t_oracle"] = _pairs(oracle.t_union)
        out["t_matches_oracle"] = tc == oracle.t_union
        out["steps"] = [
            {
                "alpha": rational(step.alpha),
                "relation": _pairs(step.relation),
                "s_closure_strict": _pairs(asymmetric_part(step.s_closure)),
                "t_closure_strict": _pairs(asymmetric_part(step.t_closure)),
            }
            for step in ladder_closures(phi)
        ]
    elif cmd == "s-set":
        out["order_set"] = _enum_payload(order_set(s_constraint(phi), OrderKind.S), cfg.cap)
    elif cmd in ("t-set", "schulze"):
        w = widest_paths(phi)
        rel = schulze_relation(w)
        out["order_set"] = _enum_payload(order_set(rel, OrderKind.T), cfg.cap)
        if cmd == "schulze":
            out["widest_paths"] = _matrix(w.b, rational)
            out["winners"] = _labels(u, maximal_set(u.labels, rel))
    elif cmd == "ranked-pairs":
        res = ranked_pairs_outcomes(phi)
        out["orders"] = [list(o.labels) for o in res.orders]
        out["winners"] = _labels(u, res.winners)
        out["truncated"] = res.truncated
    elif cmd == "kemeny":
        res = kemeny_orders(t, cfg.cap)
        out["orders"] = [list(o.labels) for o in res.orders]
        out["score"] = res.score
        out["count"] = res.total
        out["truncated"] = res.truncated
    elif cmd == "borda":
        res = borda_ranking(t, cfg.cap)
        out["scores"] = {x: res.scores[x] for x in u.labels}
        out["orders"] = [list(o.labels) for o in res.orders]
        out["truncated"] = res.truncated
    elif cmd == "minmax":
        out["winners"] = _labels(u, simpson_kramer(phi, ladder))
    elif cmd == "winners":
        rep = winner_report(phi, ladder)
        out["winners"] = {
            "simpson_kramer": _labels(u, rep.sk),
            "schulze": _labels(u, rep.schulze),
            "ranked_pairs": _labels(u, rep.ranked_pairs),
            "s_maximal": _labels(u, rep.s_maximal),
            "ladder_meet": _labels(u, rep.ladder_meet),
        }
        out["ranked_pairs_truncated"] = rep.ranked_pairs_truncated
    elif cmd == "check":
        try:
            order = LinearOrder.parse(u, cfg.order)
        except (KeyError, ValueError) as exc:
            raise BallotParseError(f"--order: {exc}") from None
        verdicts = {}
        for c in cfg.criteria:
            if c == "ecc":
                verdicts[c] = _verdict(extended_condorcet_check(order, t))
            elif c == "pareto":
                verdicts[c] = _verdict(pareto_check(order, profile))
            elif c == "s-set":
                verdicts[c] = _respect_verdict(order, s_constraint(phi))
            else:
                verdicts[c] = _respect_verdict(order, schulze_relation(widest_paths(phi)))
        out["order"] = list(order.labels)
        out["verdicts"] = verdicts
        out["passed"] = all(v["passed"] for v in verdicts.values())
    return out


def _fmt_pairs(pairs) -> str:
    return "{" + ", ".join(f"({a},{b})" for a, b in pairs) + "}"


def _fmt_set(items) -> str:
    return "{" + ", ".join(items) + "}"


def _fmt_orders(lines, payload_orders, label="R"):
    for o in payload_orders:
        lines.append(f"  {label}: {','.join(o)}")


def _fmt_enum(lines, es):
    count = es["count"] if es["count_exact"] else f">= {es['count']}"
    lines.append(f"constraint: {_fmt_pairs(es['constraint'])}")
    lines.append(f"orders ({count}{', truncated' if es['truncated'] else ''}):")
    _fmt_orders(lines, es["orders"])


def render_text(out: dict) -> str:
    u = out["universe"]
    lines = [f"alternatives: {' '.join(u)}  voters: {out['voters']}  strength: {out['strength_rule']}"]
    cmd = out["command"]
    if cmd == "tally":
        width = max(len(x) for x in u + [str(v) for row in out["tally"] for v in row if v is not None]) + 1
        lines.append(" " * width + "".join(x.rjust(width) for x in u))
        for x, row in zip(u, out["tally"]):
            lines.append(x.rjust(width) + "".join(("-" if v is None else str(v)).rjust(width) for v in row))
        lines.append(f"thresholds: {', '.join(out['ladder']['thresholds']) or '(none)'}")
        lines.append(f"majority: {_fmt_pairs(out['majority'])}")
        lines.append(f"alpha*: {out['alpha_star'] or 'none (no P-acyclic supermajority relation)'}")
        c = out["condorcet"]
        lines.append(f"Condorcet winner: {c['winner'] or 'none'}  loser: {c['loser'] or 'none'}")
    elif cmd == "constraints":
        lines.append(f"thresholds: {', '.join(out['ladder']['thresholds']) or '(none)'}")
        lines.append(f"alpha*: {out['alpha_star'] or 'none'}")
        for step in out["steps"]:
            lines.append(f"alpha >= {step['alpha']}: R = {_fmt_pairs(step['relation'])}")
            lines.append(f"    P(S(R)) = {_fmt_pairs(step['s_closure_strict'])}")
            lines.append(f"    P(T(R)) = {_fmt_pairs(step['t_closure_strict'])}")
        lines.append(f"S-constraint (closed form): {_fmt_pairs(out['s_constraint'])}")
        lines.append(f"S-constraint (ladder union): {_fmt_pairs(out['s_oracle'])}  equal: {out['s_matches_oracle']}")
        lines.append(f"T-constraint (closed form): {_fmt_pairs(out['t_constraint'])}")
        lines.append(f"T-constraint (ladder union): {_fmt_pairs(out['t_oracle'])}  equal: {out['t_matches_oracle']}")
    elif cmd in ("s-set", "t-set", "schulze"):
        lines.append(f"{'S' if cmd == 's-set' else 'T'}-order set")
        _fmt_enum(lines, out["order_set"])
        if cmd == "schulze":
            lines.append(f"winners: {_fmt_set(out['winners'])}")
    elif cmd == "ranked-pairs":
        lines.append(f"ranked pairs outcomes{' (truncated)' if out['truncated'] else ''}:")
        _fmt_orders(lines, out["orders"])
        lines.append(f"winners: {_fmt_set(out['winners'])}")
    elif cmd == "kemeny":
        lines.append(f"Kemeny-Young score {out['score']}, {out['count']} optimal order(s):")
        _fmt_orders(lines, out["orders"])
    elif cmd == "borda":
        lines.append("Borda scores: " + ", ".join(f"{x}={s}" for x, s in out["scores"].items()))
        _fmt_orders(lines, out["orders"])
    elif cmd == "minmax":
        lines.append(f"Simpson-Kramer winners: {_fmt_set(out['winners'])}")
    elif cmd == "winners":
        for k, v in out["winners"].items():
            lines.append(f"{k}: {_fmt_set(v)}")
    elif cmd == "check":
        lines.append(f"R: {','.join(out['order'])}")
        for name, v in out["verdicts"].items():
            if v["passed"]:
                lines.append(f"{name}: pass")
            else:
                w = v["witness"]
                detail = f"pair ({','.join(w['pair'])})"
                if "split" in w:
                    detail = f"block {_fmt_set(w['split'])}, {detail}"
                lines.append(f"{name}: FAIL, {detail}")
    return "\n".join(lines) + "\n"


def execute(cfg: RunConfig, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        profile = read_profile(cfg.input)
        out = compute(cfg, profile)
    except BallotParseError as exc:
        print(f"ordo: {cfg.input}: {exc}", file=stderr)
        return 2
    except OSError as exc:
        print(f"ordo: cannot read {cfg.input}: {exc.strerror or exc}", file=stderr)
        return 2
    except GuardError as exc:
        print(f"ordo: {exc}", file=stderr)
        return 3
    except ConsistencyError as exc:  # pragma: no cover - signals a library bug
        print(f"ordo: internal consistency failure: {exc}", file=stderr)
        return 4
    if cfg.fmt == "json":
        stdout.write(json.dumps(out, indent=2) + "\n")
    else:
        stdout.write(render_text(out))
    return 0


def main(argv=None) -> int:
    try:
        cfg = parse_args(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    return execute(cfg)


if __name__ == "__main__":
    sys.exit(main())
