"""Command line entry point and verification campaigns."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from typing import Sequence

from . import bridge
from .algebra import check_table_conformance, verify_group, verify_ring_axioms
from .config import SUITES, ConfigError, InstanceConfig, load_config
from .crossed import CrossedProduct, verify_crossed_product, verify_extension_isomorphism
from .hocolim import verify_hocolim, verify_hocolim_involution
from .matrix import Matrix
from .modcat import FGF, verify_involution_compat, verify_weak_action
from .report import Report, run_check, skip
from .strictify import (InvolutionAction, RestrictionAction, Strictification, verify_adjunction,
                        verify_strict_action, verify_strict_involution, verify_weak_axioms)
from .twist import TwistData, validate_involution_twist, validate_twist

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
TABLE_LIMIT = 256


def _strip_involution(t: TwistData) -> TwistData:
    return replace(t, bar=None, w=None)


def _prerequisites(t: TwistData, seed: int) -> tuple[Report, Report]:
    base = Report()
    base.extend(verify_group(t.group))
    base.extend(verify_ring_axioms(t.ring, seed))
    run_check(base, "ring.table-conformance", "structured backend agrees with materialized tables", [0],
              lambda _: None if check_table_conformance(t.ring) else {"ring": repr(t.ring)})
    base.extend(validate_twist(t, seed))
    inv = Report()
    if t.has_involution:
        inv.extend(validate_involution_twist(t, seed))
    return base, inv


def run_campaign(cfg: InstanceConfig, suites: Sequence[str] | None = None, seed: int | None = None,
                 max_rank: int | None = None) -> Report:
    """Run the selected suites in dependency order; dependents of a failed suite are skipped."""
    suites = [s for s in SUITES if s in (suites if suites is not None else cfg.suites)]
    seed = cfg.seed if seed is None else seed
    max_rank = cfg.max_rank if max_rank is None else max_rank
    small = min(max_rank, 1)
    t = cfg.twist
    rep = Report(seed=seed, meta={"instance": cfg.name, "suites": suites, "max_rank": max_rank})
    if not suites:
        return rep

    base, inv = _prerequisites(t, seed)
    base_ok = base.ok
    inv_ok = t.has_involution and inv.ok
    if "twist" in suites:
        rep.extend(base)
        rep.extend(inv)
        if not t.has_involution:
            skip(rep, "twist.involution", "bar and w", "instance has no involution data")
    t_eff = t if inv_ok else _strip_involution(t)
    inv_reason = ("involution prerequisites failed (twist suite)" if t.has_involution
                  else "instance has no involution data")

    def blocked(suite: str) -> bool:
        if not base_ok:
            skip(rep, suite, "prerequisites", "group, ring or twist validation failed")
            return True
        return False

    if "ring" in suites and not blocked("ring"):
        rep.extend(verify_crossed_product(t_eff, seed))
        if t.extension is not None:
            rep.extend(verify_extension_isomorphism(t_eff, cfg.w1 if inv_ok else None))

    if "weak-action" in suites and not blocked("weak-action"):
        rep.extend(verify_weak_action(t_eff, max_rank, seed))

    if "involution-compat" in suites and not blocked("involution-compat"):
        if inv_ok:
            rep.extend(verify_involution_compat(t_eff, max_rank, seed))
            rep.extend(verify_weak_axioms(InvolutionAction(FGF(t_eff, seed)), max_rank, seed), prefix="I-as-action.")
        else:
            skip(rep, "involution-compat", "t_g and E", inv_reason)

    S = Strictification(RestrictionAction(FGF(t_eff, seed))) if base_ok else None
    if "strictify" in suites and not blocked("strictify"):
        rep.extend(verify_strict_action(S, max_rank, seed, cfg.min_samples))
        rep.extend(verify_adjunction(S, small, seed))
        if inv_ok:
            rep.extend(verify_strict_involution(S, max_rank, seed, cfg.min_samples))
        else:
            skip(rep, "strictify.involution", "I^S, E^S", inv_reason)

    if "hocolim" in suites and not blocked("hocolim"):
        hc = bridge.one_object_hocolim(t_eff)
        rep.extend(verify_hocolim(hc, max_rank, seed, cfg.min_samples))
        if inv_ok:
            rep.extend(verify_hocolim_involution(hc, max_rank, seed, cfg.min_samples))
        else:
            skip(rep, "hocolim.involution", "I and E on the homotopy colimit", inv_reason)

    if "bridge" in suites and not blocked("bridge"):
        b = bridge.Bridge(t_eff)
        rep.extend(bridge.verify_alpha(b, small, seed))
        rep.extend(bridge.check_e_inclusion(t_eff, small, seed))
        if inv_ok:
            rep.extend(bridge.verify_beta(b, small, seed))
        else:
            skip(rep, "bridge.beta", "beta", inv_reason)

    if "induction" in suites and not blocked("induction"):
        G = t.group
        if G.order > bridge.MAX_INDUCTION:
            skip(rep, "induction", "omega and tau", f"group order {G.order} exceeds {bridge.MAX_INDUCTION}")
        else:
            S_inv, inv_fib = bridge.strict_fiber(t_eff)
            ident = list(G.elements())
            regular = bridge.InductionSetup(G, G, ident, G.order, G.mul, S_inv, inv_fib)
            point = bridge.InductionSetup(G, G, ident, 1, lambda g, x: 0, S_inv, inv_fib)
            rep.extend(bridge.verify_induced_action(regular.inner, 1, seed, cfg.min_samples))
            rep.extend(bridge.check_induction_isos(regular, 1, seed, naturality=(point, [0] * G.order)))
            if not inv_ok:
                skip(rep, "induction.involution", "omega and tau with involution", inv_reason)
    return rep


# alpha on user-supplied morphisms


def morphism_from_json(b: bridge.Bridge, data: dict):
    """{"source_rank": m, "target_rank": n, "components": {"<g>": [[r, ...], ...]}}.

    The component at g is a matrix of ring indices for the map R^m -> res_g R^n.
    """
    S, cat, G = b.S, b.cat, b.twist.group
    m, n = int(data["source_rank"]), int(data["target_rank"])
    X, Y = b.e_obj(m), b.e_obj(n)
    terms = []
    for key, rows in data.get("components", {}).items():
        g = int(key) if str(key).lstrip("-").isdigit() else G.index(key)
        if not 0 <= g < G.order:
            raise ValueError(f"group element {key} out of range")
        target = S.act_obj(g, Y.A)
        M = Matrix(rows, m, n)
        if any(not 0 <= x < b.twist.ring.size for row in M.rows for x in row):
            raise ValueError(f"component {key}: ring index out of range")
        f = cat.mor(S.underlying(X.A), S.underlying(target), M)
        terms.append((g, S.mor(X.A, target, f)))
    return b.hc.mor(X, Y, terms)


def alpha_json(b: bridge.Bridge, phi) -> dict:
    M = b.alpha(phi)
    return {
        "shape": list(M.shape),
        "matrix": [[b.cp.to_json(x) for x in row] for row in M.rows],
        "text": [[b.cp.fmt(x) for x in row] for row in M.rows],
    }


# command line


def _load(path: str) -> InstanceConfig:
    return load_config(path)


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render(rep: Report, fmt: str, timing: bool) -> str:
    return rep.to_json(timing) if fmt == "json" else rep.to_text()


def cmd_validate(args) -> int:
    cfg = _load(args.config)
    rep = run_campaign(cfg, ["twist"], args.seed)
    _emit(_render(rep, args.format, False), None)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_table(args) -> int:
    cfg = _load(args.config)
    t = cfg.twist
    if t.ring.size * t.group.order > TABLE_LIMIT:
        print(f"error: |R||G| = {t.ring.size * t.group.order} exceeds {TABLE_LIMIT}", file=sys.stderr)
        return EXIT_INPUT
    _emit(json.dumps(CrossedProduct(t).table(), indent=2, sort_keys=True) + "\n", args.output)
    return EXIT_OK


def cmd_check(args) -> int:
    cfg = _load(args.config)
    suites = None
    if args.suite:
        suites = [s.strip() for s in args.suite.split(",") if s.strip()]
        if suites == ["all"]:
            suites = list(SUITES)
        unknown = sorted(set(suites) - set(SUITES))
        if unknown:
            print(f"error: unknown suite(s) {', '.join(unknown)}; choose from {', '.join(SUITES)}", file=sys.stderr)
            return EXIT_INPUT
    rep = run_campaign(cfg, suites, args.seed, args.max_rank)
    _emit(_render(rep, args.format, args.timing), args.output)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_alpha(args) -> int:
    cfg = _load(args.config)
    raw = sys.stdin.read() if args.morphism == "-" else open(args.morphism, encoding="utf-8").read()
    b = bridge.Bridge(cfg.twist)
    try:
        phi = morphism_from_json(b, json.loads(raw))
    except (ValueError, KeyError, TypeError) as exc:
        print(json.dumps({"error": "morphism", "message": str(exc)}), file=sys.stderr)
        return EXIT_INPUT
    _emit(json.dumps(alpha_json(b, phi), indent=2) + "\n", args.output)
    return EXIT_OK


def cmd_report(args) -> int:
    with open(args.report, encoding="utf-8") as fh:
        rep = Report.from_dict(json.load(fh))
    _emit(_render(rep, args.format, args.timing), None)
    return EXIT_OK if rep.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="crossinv", description="Crossed products with involution: exact checks.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="load a config and run the twist suite")
    v.add_argument("config")
    v.add_argument("--seed", type=int)
    v.add_argument("--format", choices=["text", "json"], default="text")
    v.set_defaults(func=cmd_validate)

    t = sub.add_parser("table", help="basis multiplication table of R*G as JSON")
    t.add_argument("config")
    t.add_argument("-o", "--output")
    t.set_defaults(func=cmd_table)

    c = sub.add_parser("check", help="run verification suites")
    c.add_argument("config")
    c.add_argument("--suite", help=f"comma separated subset of: {','.join(SUITES)} (default: from config)")
    c.add_argument("--seed", type=int)
    c.add_argument("--max-rank", type=int)
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.add_argument("--timing", action="store_true", help="include elapsed times in JSON output")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_check)

    a = sub.add_parser("alpha", help="crossed-product matrix of a homotopy colimit morphism")
    a.add_argument("config")
    a.add_argument("morphism", help="JSON file with the morphism, or - for stdin")
    a.add_argument("-o", "--output")
    a.set_defaults(func=cmd_alpha)

    r = sub.add_parser("report", help="re-render a saved JSON report")
    r.add_argument("report")
    r.add_argument("--format", choices=["text", "json"], default="text")
    r.add_argument("--timing", action="store_true")
    r.set_defaults(func=cmd_report)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(json.dumps(exc.to_dict(), indent=2), file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
