"""Command-line front end.

Exit codes: 0 the requested claim is certified, 1 it is not, 2 unknown
pattern literal, 3 malformed JSON input, 4 node budget exhausted,
5 invalid arguments.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Optional, Sequence

from . import checker, constructions, poset, render, search
from .checker import Target, as_targets
from .errors import (InvalidArguments, MalformedInput, NotFoundWithinBound, SearchInconclusive,
                     UnknownPattern)
from .lattice import Domain, format_set, parse_set
from .poset import STRONG, WEAK, Poset, cube, is_embedding, make_v, parse_pattern, parse_pattern_list

EXIT_OK, EXIT_UNCERTIFIED, EXIT_PATTERN, EXIT_JSON, EXIT_BUDGET, EXIT_ARGS = 0, 1, 2, 3, 4, 5


# --- input helpers ----------------------------------------------------------------

def _load_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{path}: {exc}") from exc
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc.strerror}") from exc


def _pattern(text: str) -> Poset:
    """A pattern literal, or ``@file.json`` holding a cover-relation poset."""
    if text.startswith("@"):
        return Poset.from_json(_load_json(text[1:]))
    return parse_pattern(text)


def _targets(args) -> list[Target]:
    return as_targets(parse_pattern_list(args.targets), WEAK if args.weak else STRONG)


def _config(args) -> search.SearchConfig:
    workers = args.workers
    if workers is None:
        workers = int(os.environ.get(search.WORKERS_ENV, "1"))
    return search.SearchConfig(node_budget=args.node_budget, symmetry_depth=args.symmetry_depth,
                               workers=workers, color_symmetry=args.color_symmetry)


def _params(items: Sequence[str]) -> dict[str, str]:
    out = {}
    for item in items or ():
        key, sep, value = item.partition("=")
        if not sep:
            raise InvalidArguments(f"parameter {item!r} is not key=value")
        out[key.strip()] = value.strip()
    return out


def _int_param(params: dict, key: str, default: Optional[int] = None) -> int:
    if key not in params:
        if default is None:
            raise InvalidArguments(f"missing parameter {key}")
        return default
    try:
        return int(params[key])
    except ValueError as exc:
        raise InvalidArguments(f"parameter {key} must be an integer") from exc


def _emit(args, summary: str, doc: dict):
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    if args.json:
        sys.stdout.write(text)
    else:
        print(summary)


# --- subcommands ------------------------------------------------------------------

def cmd_ramsey_compute(args) -> int:
    res = search.ramsey_certificates(_targets(args), args.n_max, _config(args), n_min=args.n_min)
    _emit(args, str(res.value), {"command": "ramsey compute", **res.to_json()})
    return EXIT_OK


def _single(args, want: str) -> int:
    cert = search.find_good_coloring(Domain.full(args.n), len(_targets(args)), _targets(args), _config(args))
    if cert.outcome == search.INCONCLUSIVE:
        raise SearchInconclusive("node budget exhausted", cert)
    _emit(args, cert.outcome, cert.to_json())
    return EXIT_OK if cert.outcome == want else EXIT_UNCERTIFIED


def cmd_ramsey_upper(args) -> int:
    return _single(args, search.EXHAUSTED)


def cmd_ramsey_lower(args) -> int:
    return _single(args, search.WITNESS)


def cmd_ramsey_lemma(args) -> int:
    rep = search.vmn_lemma_report(args.m, args.n)
    doc = {"m": args.m, "n": args.n, "holds": rep.holds, "colorings_covered": rep.colorings_covered,
           "hypothesis_colorings": rep.hypothesis_colorings, "good_colorings": rep.good_colorings,
           "counterexamples": [c.to_json() for c in rep.counterexamples]}
    _emit(args, "holds" if rep.holds else "fails", doc)
    return EXIT_OK if rep.holds else EXIT_UNCERTIFIED


def cmd_ramsey_conjecture(args) -> int:
    ms = [int(t) for t in args.ms.split(",") if t.strip()]
    out = search.explore_conjecture(ms, args.n_max, _config(args))
    agrees = out[STRONG] == out[WEAK] == out["predicted"]
    _emit(args, f"predicted {out['predicted']}, strong {out[STRONG]}, weak {out[WEAK]}", out)
    return EXIT_OK if agrees else EXIT_UNCERTIFIED


def cmd_rainbow_compute(args) -> int:
    P = Target(_pattern(args.p), WEAK if args.weak else STRONG)
    res = search.rainbow_certificates(P, _pattern(args.q), args.n_max, _config(args))
    _emit(args, str(res.value), {"command": "rainbow compute", **res.to_json()})
    return EXIT_OK


def cmd_minimal_check(args) -> int:
    D = Domain.from_json(_load_json(args.domain))
    minimal = search.is_minimal_ramsey(D, _targets(args), _config(args))
    _emit(args, "minimal" if minimal else "not minimal",
          {"domain": D.to_json(), "targets": [t.to_json() for t in _targets(args)], "minimal": minimal})
    return EXIT_OK if minimal else EXIT_UNCERTIFIED


def cmd_minimal_enumerate(args) -> int:
    found = search.enumerate_minimal_ramsey(args.n, _targets(args), _config(args), args.max_removed)
    _emit(args, "\n".join(str(d) for d in found) or "(none)",
          {"n": args.n, "max_removed": args.max_removed,
           "targets": [t.to_json() for t in _targets(args)], "classes": [d.to_json() for d in found]})
    return EXIT_OK


def cmd_minimal_pairs(args) -> int:
    pc = search.classify_pair_removals(args.n, _targets(args), _config(args))

    def row(r, m):
        return {"ramsey": r, "minimal": m}

    doc = {"n": args.n, "pairs": {f"{format_set(a)} {format_set(b)}": row(*v) for (a, b), v in pc.pairs.items()},
           "diagonal": {format_set(a): row(*v) for a, v in pc.diagonal.items()}}
    lines = [f"{format_set(a)} {format_set(b)}" for a, b in pc.ramsey_pairs()]
    _emit(args, "\n".join(lines), doc)
    return EXIT_OK


_RULES = ("layered", "mixed", "theorem3", "rainbow-lower", "prop8")


def _construct_coloring(rule: str, params: dict):
    """Build the coloring and the claim it should satisfy: (coloring, mono targets | pattern, rainbow)."""
    if rule == "layered":
        m, n, k = (_int_param(params, key, 1 if key == "m" else None) for key in ("m", "n", "k"))
        c = constructions.coloring_layered_identical(m, n, k, _int_param(params, "top_color", 1))
        return c, as_targets([make_v(m, n)] * k), None
    if rule == "mixed":
        m, n = _int_param(params, "m"), _int_param(params, "n")
        return constructions.coloring_mixed(m, n), as_targets([make_v(m, m), make_v(n, n)]), None
    if rule == "theorem3":
        k = _int_param(params, "k")
        S = parse_set(params.get("S", "{}"))
        return constructions.coloring_minimal_theorem3(k, S), as_targets([make_v(1, 1)] * k), None
    if rule == "rainbow-lower":
        m, n, k = _int_param(params, "m", 1), _int_param(params, "n"), _int_param(params, "k")
        return constructions.coloring_rainbow_lower(n, k), Target(make_v(m, n)), poset.antichain(k)
    if rule == "prop8":
        P = _pattern(params.get("P", "V(1,2)"))
        return constructions.coloring_prop8_lower(P), Target(P), poset.antichain(2)
    raise InvalidArguments(f"unknown rule {rule!r}; expected one of {', '.join(_RULES)}")


def cmd_construct_coloring(args) -> int:
    params = _params(args.params)
    c, claim, rainbow = _construct_coloring(args.rule, params)
    if rainbow is None:
        bad = checker.find_monochromatic(c, claim)
        verdict = {"good": bad is None, "targets": [t.to_json() for t in claim],
                   "witness": None if bad is None else bad.to_json()}
    else:
        bad = checker.find_monochromatic_any(c, claim.poset, claim.mode) or checker.find_rainbow(c, rainbow)
        verdict = {"good": bad is None, "pattern": claim.to_json(), "rainbow": Target(rainbow).to_json(),
                   "witness": None if bad is None else bad.to_json()}
    _emit(args, "good" if verdict["good"] else "bad",
          {"rule": args.rule, "params": params, "coloring": c.to_json(), "verdict": verdict})
    return EXIT_OK if verdict["good"] else EXIT_UNCERTIFIED


def cmd_construct_embedding(args) -> int:
    data = _load_json(args.input)
    try:
        n = int(data["n"])
        family = [parse_set(s) for s in data.get("family", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInput(f"bad family JSON: {exc}") from exc
    forbidden = set(family)
    if args.rule == "chain-removal":
        emb = constructions.chain_removal_embedding(n, family)
    elif args.rule == "antichain-removal":
        emb = constructions.antichain_removal_embedding(n, family, data.get("w"))
    elif args.rule == "iterated":
        top = bool(data.get("forbid_top", False))
        emb = constructions.iterated_removal_embedding(n, family, forbid_top=top)
        if top:
            forbidden.add((1 << n) - 1)
    else:
        raise InvalidArguments(f"unknown rule {args.rule!r}")
    d = len(emb.images).bit_length() - 1
    valid = is_embedding(cube(d), emb.images) and not forbidden & set(emb.images)
    doc = {"rule": args.rule, "n": n, "family": [format_set(x) for x in family], "dimension": d,
           "images": {format_set(x): format_set(y) for x, y in enumerate(emb.images)}, "valid": valid}
    _emit(args, f"B_{d} -> B_{n}: {'valid' if valid else 'INVALID'}", doc)
    return EXIT_OK if valid else EXIT_UNCERTIFIED


def cmd_poset_dim2(args) -> int:
    P = _pattern(args.pattern)
    d = poset.dim2(P, args.n_max)
    _emit(args, str(d), {"pattern": P.label, "dim2": d})
    return EXIT_OK


def cmd_poset_info(args) -> int:
    P = _pattern(args.pattern)
    doc = {"pattern": P.label, "size": P.size, "height": P.height(),
           "extremal_count": poset.extremal_count(P), "minimal": P.minimal_elements(),
           "maximal": P.maximal_elements(), "covers": [list(c) for c in P.covers()]}
    try:
        doc["dim2"] = poset.dim2(P, args.n_max)
    except NotFoundWithinBound:
        doc["dim2"] = None
    _emit(args, "\n".join(f"{k}: {doc[k]}" for k in ("pattern", "size", "height", "dim2", "extremal_count")), doc)
    return EXIT_OK


def _certificates(doc: dict) -> list[tuple[str, dict]]:
    if "outcome" in doc:
        return [("certificate", doc)]
    if "upper" in doc:
        out = [("upper", doc["upper"])]
        if doc.get("lower") is not None:
            out.append(("lower", doc["lower"]))
        return out
    raise MalformedInput("file holds neither a certificate nor a computed bound")


def cmd_verify_certificate(args) -> int:
    doc = _load_json(args.file)
    if not isinstance(doc, dict):
        raise MalformedInput("certificate file must hold a JSON object")
    results = {}
    ok = True
    certs = {}
    for name, data in _certificates(doc):
        cert = search.SearchCertificate.from_json(data)
        certs[name] = cert
        v = search.verify_certificate(cert, rerun=not args.no_rerun, plain=args.plain,
                                      workers=args.workers or 1)
        results[name] = {"ok": v.ok, "detail": v.detail}
        ok = ok and v.ok
    if "value" in doc:
        upper, lower = certs["upper"], certs.get("lower")
        consistent = (upper.outcome == search.EXHAUSTED and upper.domain == Domain.full(doc["value"])
                      and (doc["value"] == 0 if lower is None else
                           lower.outcome == search.WITNESS and lower.domain == Domain.full(doc["value"] - 1)))
        results["value"] = {"ok": consistent, "detail": f"claimed value {doc['value']}"}
        ok = ok and consistent
    _emit(args, "\n".join(f"{k}: {'ok' if r['ok'] else 'FAILED'} ({r['detail']})" for k, r in results.items()),
          {"verified": ok, "checks": results})
    return EXIT_OK if ok else EXIT_UNCERTIFIED


def cmd_render_hasse(args) -> int:
    coloring = None
    if args.coloring:
        data = _load_json(args.coloring)
        if isinstance(data, dict) and "coloring" in data:
            data = data["coloring"]  # the document written by construct coloring
        coloring = constructions.Coloring.from_json(data)
    if args.domain:
        D = Domain.from_json(_load_json(args.domain))
        if coloring is not None and coloring.domain != D:
            raise InvalidArguments("coloring and domain disagree")
    elif coloring is not None:
        D = coloring.domain
    elif args.n is not None:
        D = Domain.full(args.n)
    else:
        raise InvalidArguments("give --domain, --coloring or --n")
    text = render.to_svg(D, coloring) if args.format == "svg" else render.to_dot(D, coloring)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# --- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the JSON document instead of a summary")
    common.add_argument("--output", "-o", help="also write the JSON document to this path")
    common.add_argument("--workers", type=int, default=None,
                        help=f"worker processes (default: ${search.WORKERS_ENV} or 1)")
    common.add_argument("--node-budget", type=int, default=None)
    common.add_argument("--symmetry-depth", type=int, default=2)
    common.add_argument("--color-symmetry", choices=("auto", "on", "off"), default="auto")
    common.add_argument("-v", "--verbose", action="store_true")

    def targets(p):
        p.add_argument("--targets", required=True, help='comma-separated patterns, e.g. "V(1,1),V(2,2)"')
        p.add_argument("--weak", action="store_true", help="weak (non-induced) copies")

    parser = argparse.ArgumentParser(prog="vramsey", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="group", required=True)

    ramsey = sub.add_parser("ramsey").add_subparsers(dest="action", required=True)
    p = ramsey.add_parser("compute", parents=[common])
    targets(p)
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--n-min", type=int, default=0)
    p.set_defaults(func=cmd_ramsey_compute)
    for name, func in (("verify-upper", cmd_ramsey_upper), ("find-lower", cmd_ramsey_lower)):
        p = ramsey.add_parser(name, parents=[common])
        targets(p)
        p.add_argument("--n", type=int, required=True)
        p.set_defaults(func=func)
    p = ramsey.add_parser("lemma", parents=[common], help="check the c([N]-{i}) = c({}) lemma on B_{m+n+1}")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_ramsey_lemma)
    p = ramsey.add_parser("conjecture", parents=[common], help="compare strong and weak numbers for V(m_i,m_i)")
    p.add_argument("--ms", required=True, help="comma-separated m_i")
    p.add_argument("--n-max", type=int, default=6)
    p.set_defaults(func=cmd_ramsey_conjecture)

    rainbow = sub.add_parser("rainbow").add_subparsers(dest="action", required=True)
    p = rainbow.add_parser("compute", parents=[common])
    p.add_argument("--p", required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--weak", action="store_true")
    p.add_argument("--n-max", type=int, default=6)
    p.set_defaults(func=cmd_rainbow_compute)

    minimal = sub.add_parser("minimal").add_subparsers(dest="action", required=True)
    p = minimal.add_parser("check", parents=[common])
    targets(p)
    p.add_argument("--domain", required=True, help="domain JSON file")
    p.set_defaults(func=cmd_minimal_check)
    p = minimal.add_parser("enumerate", parents=[common])
    targets(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-removed", type=int, default=4)
    p.set_defaults(func=cmd_minimal_enumerate)
    p = minimal.add_parser("pairs", parents=[common], help="decide B_n - {S1, S2, [n]} for all pairs")
    targets(p)
    p.add_argument("--n", type=int, default=4)
    p.set_defaults(func=cmd_minimal_pairs)

    construct = sub.add_parser("construct").add_subparsers(dest="action", required=True)
    p = construct.add_parser("coloring", parents=[common])
    p.add_argument("--rule", required=True, choices=_RULES)
    p.add_argument("--params", nargs="*", default=[], metavar="KEY=VALUE")
    p.set_defaults(func=cmd_construct_coloring)
    p = construct.add_parser("embedding", parents=[common])
    p.add_argument("--rule", required=True, choices=("chain-removal", "antichain-removal", "iterated"))
    p.add_argument("--input", required=True, help='family JSON: {"n": 4, "family": ["{1}", ...]}')
    p.set_defaults(func=cmd_construct_embedding)

    pos = sub.add_parser("poset").add_subparsers(dest="action", required=True)
    for name, func in (("dim2", cmd_poset_dim2), ("info", cmd_poset_info)):
        p = pos.add_parser(name, parents=[common])
        p.add_argument("--pattern", required=True, help="pattern literal or @poset.json")
        p.add_argument("--n-max", type=int, default=6)
        p.set_defaults(func=func)

    p = sub.add_parser("verify-certificate", parents=[common])
    p.add_argument("--file", required=True)
    p.add_argument("--plain", action="store_true", help="rerun exhaustion claims without symmetry reduction")
    p.add_argument("--no-rerun", action="store_true", help="only check witnesses")
    p.set_defaults(func=cmd_verify_certificate)

    rend = sub.add_parser("render").add_subparsers(dest="action", required=True)
    p = rend.add_parser("hasse", parents=[common])
    p.add_argument("--domain")
    p.add_argument("--n", type=int)
    p.add_argument("--coloring")
    p.add_argument("--format", choices=("dot", "svg"), default="dot")
    p.set_defaults(func=cmd_render_hasse)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except UnknownPattern as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PATTERN
    except MalformedInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_JSON
    except SearchInconclusive as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.certificate is not None and args.output:
            with open(args.output, "w") as fh:
                json.dump(exc.certificate.to_json(), fh, indent=2, sort_keys=True)
        return EXIT_BUDGET
    except NotFoundWithinBound as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return EXIT_UNCERTIFIED
    except InvalidArguments as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGS


if __name__ == "__main__":
    sys.exit(main())
