"""Command-line front end.

Exit codes: 0 when a result was computed (a negative verdict included),
2 for usage or parse errors, 3 when a size limit was hit.
"""

from __future__ import annotations

import argparse
import contextlib
import sys

from . import render
from .abelian import full_profile, invariant_factors, torsion_profile
from .alperin import alperin_decompose
from .catalog import build_text
from .config import limits
from .equivalence import (
    cc_p,
    frattini_coordinates,
    h1_mod_p,
    is_p_nilpotent,
    nilpotency_report,
    p_locally_equivalent,
    p_nilpotency_criteria,
    stable_h1,
)
from .errors import CapExceeded, FusionscopeError
from .fusion import diagram, essential_subsystem, fusion_system
from .isomorphism import type_label
from .perm import parse_cycles
from .subgroups import (
    abelianization,
    center,
    is_nilpotent,
    is_prime,
    normalizer,
    p_part,
    sylow,
)

NEEDS_P = {"sylow", "fusion", "essential", "pnilpotent", "equiv", "ccp", "invariants", "alperin", "stableh1"}
DOT_VERBS = {"fusion", "essential"}


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-p", type=int, dest="p", help="prime")
    common.add_argument("--format", choices=["text", "json", "dot"], default="text")
    common.add_argument("--cap-order", type=int, help="largest group order to enumerate")
    common.add_argument("--cap-subgroups", type=int, help="largest order for subgroup enumeration")
    common.add_argument("--oracle", action="store_true", help="check fusion with the naive criterion")

    parser = argparse.ArgumentParser(prog="fusionscope", description="Fusion systems of small finite groups.")
    sub = parser.add_subparsers(dest="verb", required=True)
    one = {
        "info": "order, generators and basic properties",
        "sylow": "a Sylow p-subgroup",
        "fusion": "the fusion system and its diagram",
        "essential": "essential subgroups and S",
        "pnilpotent": "the four p-nilpotency criteria",
        "nilpotent": "the three nilpotency characterisations",
        "ccp": "conjugacy classes of p-elements",
        "invariants": "p-local invariants",
        "torsion": "coefficients of p-torsion of an abelian group",
        "stableh1": "stable elements in degree one",
    }
    for verb, text in one.items():
        sp = sub.add_parser(verb, parents=[common], help=text)
        sp.add_argument("group", help="group expression, e.g. 'S(3) x Z(4)'")
    sp = sub.add_parser("equiv", parents=[common], help="decide p-local equivalence")
    sp.add_argument("group")
    sp.add_argument("other")
    sp = sub.add_parser("alperin", parents=[common], help="Alperin factorizations of fusion morphisms")
    sp.add_argument("group")
    sp.add_argument("--subgroup", help="generators of P separated by ';', e.g. '(0,1)(2,3);(0,2)(1,3)'")
    sp.add_argument("--by", help="conjugating element g; factors x -> g x g^-1 on P")
    return parser


# -- verbs ------------------------------------------------------------------


def cmd_info(args, G):
    doc = {
        "group": args.group,
        "order": G.order,
        "degree": G.degree,
        "generators": render.subgroup_generators(G.whole),
        "type": type_label(G),
        "abelian": G.is_abelian,
        "nilpotent": is_nilpotent(G),
        "center_order": center(G).order,
        "abelianization": invariant_factors(abelianization(G)),
    }
    return doc, None


def cmd_sylow(args, G):
    S = sylow(G, args.p)
    doc = {
        "group": args.group,
        "p": args.p,
        "order": S.order,
        "generators": render.subgroup_generators(S),
        "type": type_label(S),
        "normal": S.is_normal_in(G.whole),
        "count": G.order // normalizer(G, S).order,
    }
    return doc, None


def cmd_fusion(args, G):
    D = diagram(fusion_system(G, args.p))
    return render.diagram_to_json(D), D


def cmd_essential(args, G):
    D = essential_subsystem(fusion_system(G, args.p))
    return render.diagram_to_json(D), D


def cmd_pnilpotent(args, G):
    crit = p_nilpotency_criteria(G, args.p)
    value = is_p_nilpotent(G, args.p)
    return {"p": args.p, "p_nilpotent": value, "criteria": crit}, None


def cmd_nilpotent(args, G):
    return nilpotency_report(G).as_dict(), None


def cmd_ccp(args, G):
    return {"p": args.p, "cc_p": cc_p(G, args.p)}, None


def cmd_invariants(args, G):
    p = args.p
    F = fusion_system(G, p)
    S = F.sylow
    doc = {
        "p": p,
        "p_part": p_part(G.order, p),
        "sylow_type": type_label(S),
        "cc_p": cc_p(G, p),
        "automizer_S": F.automizer_label(S),
        "essential_classes": [
            {"order": m[0].order, "size": len(m), "automizer": F.automizer_label(F.representative(m[0]))}
            for m in F.essential_classes
        ],
        "h1": h1_mod_p(G, p),
        "stable_h1": stable_h1(F)[0],
    }
    return doc, None


def cmd_torsion(args, G):
    if args.p is not None:
        return render.profile_to_json(torsion_profile(G, args.p)), None
    return {"profiles": [render.profile_to_json(v) for v in full_profile(G).values()]}, None


def cmd_stableh1(args, G):
    F = fusion_system(G, args.p)
    dim, basis = stable_h1(F)
    doc = {
        "p": args.p,
        "stable_h1": dim,
        "hom_S_Fp": frattini_coordinates(F.sylow, args.p).rank,
        "h1_mod_p": h1_mod_p(G, args.p),
        "basis": basis,
    }
    return doc, None


def cmd_alperin(args, G):
    F = fusion_system(G, args.p)
    if (args.subgroup is None) != (args.by is None):
        raise UsageError("--subgroup and --by go together")
    if args.subgroup is not None:
        gens = [G.index(parse_cycles(t, G.degree)) for t in args.subgroup.split(";") if t.strip()]
        P = G.generate(gens)
        g = G.index(parse_cycles(args.by, G.degree))
        images = tuple(int(x) for x in G.conj(g, P.array))
        fac = alperin_decompose(F, (P, images))
        return render.factorization_to_json(fac), fac
    facs = []
    for P in F.objects:
        for f in F.hom_to_sylow(P):
            facs.append(alperin_decompose(F, f))
    doc = {"p": args.p, "count": len(facs), "factorizations": [render.factorization_to_json(f) for f in facs]}
    return doc, facs


def cmd_equiv(args, G):
    H = build_text(args.other)
    v = p_locally_equivalent(G, H, args.p, oracle=args.oracle)
    return render.verdict_to_json(v, args.p), v


COMMANDS = {
    "info": cmd_info,
    "sylow": cmd_sylow,
    "fusion": cmd_fusion,
    "essential": cmd_essential,
    "pnilpotent": cmd_pnilpotent,
    "nilpotent": cmd_nilpotent,
    "equiv": cmd_equiv,
    "ccp": cmd_ccp,
    "invariants": cmd_invariants,
    "torsion": cmd_torsion,
    "alperin": cmd_alperin,
    "stableh1": cmd_stableh1,
}


# -- text output ----------------------------------------------------------------


def _plain(value) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, list):
        return ", ".join(_plain(v) for v in value) if value else "-"
    if isinstance(value, dict):
        return ", ".join(f"{k}={_plain(v)}" for k, v in value.items())
    return str(value)


def to_text(args, doc, obj) -> str:
    verb = args.verb
    if verb in DOT_VERBS:
        return render.diagram_to_text(obj)
    if verb == "torsion":
        if args.p is not None:
            return str(torsion_profile(build_text(args.group), args.p)) + "\n"
        profiles = full_profile(build_text(args.group))
        return "".join(f"p={p}: {prof}\n" for p, prof in profiles.items())
    if verb == "equiv":
        v = obj
        if v.equivalent:
            lines = [f"equivalent at p={args.p}", "witness:"]
            lines += [f"  {k} -> {w}" for k, w in doc["witness"].items()]
        else:
            lines = [f"not equivalent at p={args.p}", f"refuted by: {v.refuted_by}"]
            if v.detail is not None:
                lines.append(f"values: {v.detail[0]} vs {v.detail[1]}")
        return "\n".join(lines) + "\n"
    if verb == "alperin":
        facs = obj if isinstance(obj, list) else [obj]
        lines = []
        if isinstance(obj, list):
            lines.append(f"{len(facs)} morphisms into S")
        for fac in facs:
            image = fac.intermediates[-1]
            label = f"{render.subgroup_label(fac.source)} -> {render.subgroup_label(image)}"
            route = " then ".join(render.subgroup_label(s.R) for s in fac.steps) or "inclusion"
            lines.append(f"{label}: {len(fac.steps)} step(s) via {route}")
        return "\n".join(lines) + "\n"
    lines = []
    for key, value in doc.items():
        if key == "essential_classes":
            value = [f"{c['order']}x{c['size']}:{c['automizer']}" for c in value]
        if key == "basis":
            value = ["[" + " ".join(str(x) for x in b) + "]" for b in value]
        lines.append(f"{key}: {_plain(value)}")
    return "\n".join(lines) + "\n"


def emit(args, doc, obj) -> str:
    if args.format == "json":
        return render.dumps(doc)
    if args.format == "dot":
        return render.diagram_to_dot(obj, name=f"{args.verb} {args.group} p={args.p}")
    return to_text(args, doc, obj)


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.verb in NEEDS_P and args.p is None:
            raise UsageError(f"{args.verb} needs -p")
        if args.p is not None and not is_prime(args.p):
            raise UsageError(f"-p must be a prime, got {args.p}")
        if args.format == "dot" and args.verb not in DOT_VERBS:
            raise UsageError("--format dot is only available for fusion and essential")
        with limits.override(order=args.cap_order, subgroups=args.cap_subgroups):
            G = build_text(args.group)
            doc, obj = COMMANDS[args.verb](args, G)
            text = emit(args, doc, obj)
    except CapExceeded as exc:
        print(f"fusionscope: limit exceeded: {exc}", file=err)
        return 3
    except (UsageError, FusionscopeError, ValueError) as exc:
        print(f"fusionscope: error: {exc}", file=err)
        return 2
    out.write(text)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
