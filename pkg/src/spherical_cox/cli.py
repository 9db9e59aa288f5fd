"""Command line front end ``spherical-cox``.

Exit codes: 0 success, 1 presentations disagree (``brion-compare``),
2 input error, 3 mathematical inconsistency, 4 unsupported input.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from .brion import BrionError, natural_correspondence, presentations_agree, tensor_presentation
from .classgroup import ClassGroupError, cl_of_embedding, pic_g_sequence
from .descent import DescentError, check_relations, descend_valuation_cone, format_pushforward, lift_fan
from .homogenize import HomogenizationError, cox_presentation
from .inputs import InputError, Problem, load
from .lattice import FreeLattice
from .polyhedra import PolyhedraError, build_fan_X, build_fan_hat
from .tropical import NonPrincipalError, TropicalError, ValuationCone, valuation_cone

EXIT_OK, EXIT_DISAGREE, EXIT_INPUT, EXIT_MATH, EXIT_UNSUPPORTED = 0, 1, 2, 3, 4


class Unsupported(Exception):
    pass


def _coweights(p: Problem) -> FreeLattice:
    return FreeLattice(p.space.rank, p.space.coordinate_labels())


def _weights(p: Problem) -> FreeLattice:
    return FreeLattice(p.space.rank, p.space.weight_labels())


def _bold_weights(p: Problem) -> FreeLattice:
    k = p.bold.weight_rank
    return FreeLattice(k, tuple(f"pi(w{i})*" for i in range(1, k + 1)))


def _halfspaces(vc: ValuationCone, lat: FreeLattice) -> list[str]:
    return [f"{lat.format(g)} <= 0" for g in vc.roots]


def _checked(p: Problem) -> None:
    """Consistency of a bold datum with its lift."""
    if p.bold is None:
        return
    check_relations(p.space, p.bold)
    lifted = lift_fan(p.bold)
    if p.rays_given and tuple(sorted(lifted.rays)) != tuple(sorted(p.embedding.rays)):
        raise DescentError(f"embedding rays {p.embedding.rays} are not the lift {lifted.rays} of the bold rays")


def _valuation(p: Problem) -> ValuationCone:
    try:
        return valuation_cone(list(p.space.relations), p.space.table)
    except NonPrincipalError as exc:
        raise Unsupported(str(exc)) from None


def cmd_cox(p: Problem, allow_outside: bool = False) -> dict:
    _checked(p)
    warnings = []
    vc = None
    if len(p.space.relations) <= 1:
        vc = _valuation(p)
    else:
        warnings.append("valuation cone not computed for a non-principal ideal; rays unchecked")
    pres = cox_presentation(p.space, p.embedding, valuation=vc, bold=p.bold,
                            allow_outside_valuation_cone=allow_outside)
    return {
        "variables": [str(v) for v in pres.variables],
        "degrees": {str(v): list(d) for v, d in pres.degrees.items()},
        "relations": pres.relation_strings(),
        "class_group": str(pres.class_group),
        "factorial": pres.factorial_flag,
        "warnings": list(pres.warnings) + warnings,
    }


def _text_cox(r: dict) -> list[str]:
    lines = ["ring: " + " ".join(r["variables"]) if r["variables"] else "ring: C"]
    lines.append(f"Cl = {r['class_group']}")
    if r["degrees"]:
        lines.append("degrees:")
        lines += [f"  {v}: ({', '.join(map(str, d))})" for v, d in r["degrees"].items()]
    if r["relations"]:
        lines.append("relations:")
        lines += [f"  {f}" for f in r["relations"]]
    else:
        lines.append("relations: none (polynomial ring)")
    lines.append(f"factorial: {str(r['factorial']).lower()}")
    lines.append("warnings: " + ("; ".join(r["warnings"]) if r["warnings"] else "none"))
    return lines


def cmd_valcone(p: Problem) -> dict:
    vc = _valuation(p)
    out = {
        "halfspaces": _halfspaces(vc, _weights(p)),
        "lineality": [_coweights(p).format(v) for v in vc.cone.lineality],
        "full_space": vc.is_full_space,
    }
    if p.bold is not None:
        _checked(p)
        down = descend_valuation_cone(vc, p.bold)
        out["bold_halfspaces"] = _halfspaces(down, _bold_weights(p))
        out["bold_full_space"] = down.is_full_space
    return out


def _text_valcone(r: dict) -> list[str]:
    lines = ["V = N_Q (no constraints)"] if r["full_space"] else ["V: " + ", ".join(r["halfspaces"])]
    lines.append(f"lineality rank: {len(r['lineality'])}")
    if "bold_halfspaces" in r:
        lines.append("bold V = N_Q (no constraints)" if r["bold_full_space"]
                     else "bold V: " + ", ".join(r["bold_halfspaces"]))
    return lines


def cmd_roots(p: Problem) -> dict:
    vc = _valuation(p)
    lat = _weights(p)
    return {"roots": [lat.format(g) for g in vc.roots]}


def _text_roots(r: dict) -> list[str]:
    if not r["roots"]:
        return ["no spherical roots"]
    return [f"gamma{i} = {g}" for i, g in enumerate(r["roots"], start=1)]


def cmd_fan_check(p: Problem) -> dict:
    dims, m, rays = p.space.dims, p.space.m, p.embedding.rays
    fan = build_fan_X(dims, m, rays)
    hat = build_fan_hat(dims, m, len(rays))
    return {"sigma_x": len(fan), "sigma_hat": len(hat), "smooth": True, "compatible": True}


def _text_fan(r: dict) -> list[str]:
    return [f"Sigma_X: {r['sigma_x']} cones, all smooth, all compatible",
            f"Sigma_hat: {r['sigma_hat']} cones, all smooth, all compatible"]


def cmd_clgroup(p: Problem) -> dict:
    if p.bold is not None:
        _checked(p)
        group, dm = cl_of_embedding(p.bold)
        out = {"class_group": str(group), "pic_g": str(pic_g_sequence(p.bold))}
    else:
        group, dm = cl_of_embedding(p.space, p.embedding)
        out = {"class_group": str(group)}
    out["degrees"] = {lab: list(d) for lab, d in dm.as_dict().items()}
    return out


def _text_clgroup(r: dict) -> list[str]:
    lines = [f"Cl = {r['class_group']}"]
    if "pic_g" in r:
        lines.append(f"Pic_G = {r['pic_g']}")
    lines += [f"[{lab}] = ({', '.join(map(str, d))})" for lab, d in r["degrees"].items()]
    return lines


def cmd_lift(p: Problem) -> dict:
    if p.bold is None:
        raise InputError("lift needs a [bold] table")
    _checked(p)
    lat = _coweights(p)
    rays = lift_fan(p.bold).rays
    return {"rays": [lat.format(u) for u in rays], "pushforward": format_pushforward(p.bold)}


def _text_lift(r: dict) -> list[str]:
    return ["rays: [" + ", ".join(r["rays"]) + "]",
            "pushforward: " + "; ".join(r["pushforward"])]


def cmd_brion_compare(p: Problem) -> dict:
    if p.wonderful is None:
        raise InputError("brion-compare needs a [wonderful] table")
    vc = _valuation(p)
    a = cox_presentation(p.space, p.embedding, valuation=vc, bold=p.bold)
    b = tensor_presentation(p.wonderful, p.embedding)
    corr = natural_correspondence(a, b)
    corr.update(p.correspondence)
    agree = presentations_agree(a, b, corr)
    return {"agree": agree, "homogenized": a.relation_strings(), "tensor": b.relation_strings()}


def _text_brion(r: dict) -> list[str]:
    lines = ["AGREE" if r["agree"] else "DISAGREE"]
    lines += [f"homogenized: {f}" for f in r["homogenized"]]
    lines += [f"tensor: {f}" for f in r["tensor"]]
    return lines


COMMANDS: dict[str, tuple[Callable, Callable]] = {
    "cox": (cmd_cox, _text_cox),
    "valcone": (cmd_valcone, _text_valcone),
    "roots": (cmd_roots, _text_roots),
    "fan-check": (cmd_fan_check, _text_fan),
    "clgroup": (cmd_clgroup, _text_clgroup),
    "lift": (cmd_lift, _text_lift),
    "brion-compare": (cmd_brion_compare, _text_brion),
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="spherical-cox",
                                 description="Cox rings of spherical embeddings from lattice and polynomial data.")
    ap.add_argument("command", choices=list(COMMANDS))
    ap.add_argument("--input", required=True, help="TOML description of the space and embedding")
    ap.add_argument("--allow-outside-valuation-cone", action="store_true",
                    help="accept embedding rays outside the valuation cone")
    ap.add_argument("--format", choices=("text", "json"), default="text")
    return ap


def run(command: str, problem: Problem, allow_outside: bool = False) -> dict:
    fn = COMMANDS[command][0]
    if command == "cox":
        return fn(problem, allow_outside)
    return fn(problem)


def render(command: str, report: dict, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True)
    return "\n".join(COMMANDS[command][1](report))


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        problem = load(args.input)
        report = run(args.command, problem, args.allow_outside_valuation_cone)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Unsupported as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (HomogenizationError, TropicalError, DescentError, ClassGroupError, PolyhedraError, BrionError) as exc:
        print(f"inconsistent: {exc}", file=sys.stderr)
        return EXIT_MATH
    print(render(args.command, report, args.format))
    if args.command == "brion-compare" and not report["agree"]:
        return EXIT_DISAGREE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
