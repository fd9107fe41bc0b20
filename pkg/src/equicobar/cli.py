"""Command-line front end.

Exit codes: 0 success or Yes, 1 certified No or a failed check,
2 Inconclusive, 3 input error. Every report is canonical JSON on stdout
(and in ``--output`` when given).
"""

from __future__ import annotations

import argparse
import sys

from . import acceptance, corpus
from .coalgebra import chains, chains_equivariant, coalg_fixed_points, points, unit_check
from .dgcobar import cobar, homology_dims, normalized
from .equivariant import OrbitCategory, check_cellularity, fixed_points, phi, subgroups, theta
from .errors import CapExceeded, EquicobarError, Inconclusive, InputError
from .fundamental_group import check_cover, fundamental_group, universal_cover
from .galois import (
    FieldExtension,
    all_small_checks,
    base_grouplike_count,
    descent_check,
    equivariant_descent,
    galois_fixed_coalgebra,
    unit_check as galois_unit_check,
)
from .io import (
    caps_from_env,
    dumps,
    extension_from,
    field_from,
    galois_set_from,
    gmap_from,
    group_from,
    gspace_from,
    map_from,
    read_json,
    space_from,
)
from .oracles import DEFAULT_CAPS, INCONCLUSIVE, NO, YES, g_equivalence, run_oracle
from .simplicial import find_isomorphism

OK, FAIL, UNSURE, BAD_INPUT = 0, 1, 2, 3
VERDICT_CODES = {YES: OK, NO: FAIL, INCONCLUSIVE: UNSURE}


def _caps(args):
    caps = dict(DEFAULT_CAPS)
    caps.update(caps_from_env())
    for key in ("degree", "length", "coset_bound"):
        value = getattr(args, key, None)
        if value is not None:
            if value <= 0:
                raise InputError(f"--{key.replace('_', '-')} must be positive")
            caps[key] = value
    return caps


def _space(args, D=None):
    if getattr(args, "model", None):
        return space_from({"model": args.model}, D)
    if not getattr(args, "input", None):
        raise InputError("give --input FILE or --model NAME")
    return space_from(read_json(args.input), D)


def _gspace(args):
    data = read_json(args.input) if args.input else {"space": {"model": args.model}}
    G = group_from(read_json(args.group)) if getattr(args, "group", None) else None
    return gspace_from(data, G)


# -- commands ---------------------------------------------------------------------------

def cmd_validate(args):
    X = _space(args)
    v = X.validate()
    report = {"command": "validate", "ok": v.ok, "message": v.message, "counts": X.counts(), "reduced": X.reduced}
    if not v.ok:
        report["simplex"] = v.simplex
    return report, OK if v.ok else FAIL


def cmd_homology(args):
    F = field_from(args.field)
    X = _space(args)
    top = args.top if args.top is not None else X.top_dim
    dims = homology_dims(X, F, top)
    return {"command": "homology", "field": F.name, "top": top, "dims": dims}, OK


def cmd_cobar(args):
    F = field_from(args.field)
    caps = _caps(args)
    N, L = caps["degree"], caps["length"]
    X = _space(args, max(N + 1, 0))
    cb = cobar(normalized(X, F, N + 1), N, L)
    errs = cb.check_d2()
    report = {
        "command": "cobar",
        "field": F.name,
        "caps": cb.caps(),
        "dims": cb.homology_dims(),
        "d2_ok": not errs,
        "valid_degrees": list(range(N)),
    }
    return report, OK if not errs else FAIL


def cmd_pi1(args):
    caps = _caps(args)
    pi = fundamental_group(_space(args), caps["coset_bound"])
    report = {"command": "pi1", **pi.to_json(), "caps": {"coset_bound": caps["coset_bound"]}}
    return report, UNSURE if pi.certificate == "unknown" else OK


def cmd_cover(args):
    caps = _caps(args)
    F = field_from(args.field)
    X = _space(args)
    pi = fundamental_group(X, caps["coset_bound"])
    if not pi.finite:
        raise Inconclusive(f"fundamental group not certified finite ({pi.certificate})", cap="coset bound")
    cov = universal_cover(X, pi.table)
    checks = check_cover(cov)
    dims = homology_dims(cov.total, F, X.top_dim)
    report = {
        "command": "cover",
        "field": F.name,
        "order": pi.order,
        "counts": cov.total.counts(),
        "checks": checks,
        "homology": dims,
    }
    return report, OK if all(checks.values()) else FAIL


def cmd_points(args):
    F = field_from(args.field)
    X = _space(args)
    ok, msg = unit_check(X, F)
    P = points(chains(X, F))
    report = {"command": "points", "field": F.name, "unit_iso": ok, "message": msg, "counts": P.counts(), "flags": P.flags}
    return report, OK if ok else FAIL


def cmd_fixed_points(args):
    F = field_from(args.field)
    Y = _gspace(args)
    GC = chains_equivariant(Y, F)
    rows = []
    ok = True
    for H in subgroups(Y.G):
        XH = fixed_points(Y, H)
        fixed = coalg_fixed_points(GC, H)
        P = points(fixed)
        agree = find_isomorphism(P, XH) is not None
        ok &= agree
        rows.append({
            "subgroup": H.label(),
            "simplicial": sorted(XH.names()),
            "coalgebra_dims": fixed.dims(),
            "points_counts": P.counts(),
            "agree": agree,
        })
    return {"command": "fixed-points", "field": F.name, "table": rows}, OK if ok else FAIL


def cmd_orbit_diagram(args):
    Y = _gspace(args)
    cat = OrbitCategory(Y.G)
    D = phi(Y, cat)
    chk = D.check()
    back = theta(D) == Y
    report = {
        "command": "orbit-diagram",
        "objects": [{"subgroup": H.label(), "counts": D.objects[i].counts()} for i, H in enumerate(cat.objects)],
        "morphisms": sum(1 for _ in cat.morphisms()),
        "functorial": chk.ok,
        "theta_phi_identity": back,
    }
    return report, OK if chk.ok and back else FAIL


def cmd_cellularity(args):
    G = group_from(read_json(args.group)) if args.group else group_from(args.group_name)
    X = _space(args)
    r = check_cellularity(G, X)
    failed = [e for e in r.entries if not e["ok"]]
    report = {"command": "cellularity", "ok": r.ok, "checked": len(r.entries), "failures": failed}
    return report, OK if r.ok else FAIL


def cmd_equivalence(args):
    F = field_from(args.field)
    caps = _caps(args)
    data = read_json(args.map)
    if args.group:
        G = group_from(read_json(args.group))
        f, A, B = gmap_from(data, G)
        res = g_equivalence(f, A, B, args.notion, F, caps, side=args.side)
        report = {"command": "equivalence", "field": F.name, **res}
        return report, VERDICT_CODES[res["verdict"]]
    f = map_from(data)
    v = run_oracle(args.notion, f, F, caps)
    report = {"command": "equivalence", "field": F.name, **v.to_json()}
    return report, VERDICT_CODES[v.value]


def cmd_descent(args):
    if args.extension:
        E = extension_from(read_json(args.extension))
    else:
        E = FieldExtension(args.p, args.k_base, args.k_top)
    if args.set:
        S = galois_set_from(read_json(args.set))
        A = galois_fixed_coalgebra(S, E)
        d, u = descent_check(S, E), galois_unit_check(S, E)
        base, top = base_grouplike_count(S, E)
        report = {
            "command": "descent",
            "extension": E.to_json(),
            "set": S.to_json(),
            "dim": A.dim,
            "coalgebra_errors": A.check(),
            "descent": d.ok,
            "unit": u.ok,
            "grouplikes": {"base": base, "top": top},
        }
        return report, OK if d.ok and u.ok and A.dim == len(S) else FAIL
    if args.input:
        data = read_json(args.input)
        Y = gspace_from(data)
        galois = data.get("galois") or {x: x for x in Y.X.names()}
        r = equivariant_descent(Y, galois, E)
        return {"command": "descent", "extension": E.to_json(), "ok": r.ok, "degrees": r.entries}, OK if r.ok else FAIL
    rows = all_small_checks(E, args.max_size)
    ok = all(n == dim and d and u for n, _, dim, d, u in rows)
    table = [{"size": n, "orbits": o, "dim": dim, "descent": d, "unit": u} for n, o, dim, d, u in rows]
    return {"command": "descent", "extension": E.to_json(), "ok": ok, "table": table}, OK if ok else FAIL


def cmd_corpus(args):
    rep = acceptance.corpus_report(args.criterion or None)
    if not args.quiet:
        for row in rep["criteria"]:
            print(acceptance.format_line(row), file=sys.stderr)
    return {"command": "corpus", **rep}, OK if rep["passed"] else FAIL


def cmd_models(args):
    return {"command": "models", "models": corpus.MODELS}, OK


# -- parser -----------------------------------------------------------------------------

def _add_space(p):
    p.add_argument("--input", help="simplicial set JSON file")
    p.add_argument("--model", help="built-in model (point, S1, S2, RP2, T2, wedge_S1_S1, DeltaN, boundaryN)")


def _add_caps(p):
    p.add_argument("--degree", type=int, help="cobar degree cap N")
    p.add_argument("--length", type=int, help="cobar word-length cap L")
    p.add_argument("--coset-bound", dest="coset_bound", type=int, help="coset enumeration bound")


def build_parser():
    parser = argparse.ArgumentParser(prog="equicobar", description="Chains coalgebras, cobar constructions and equivariant checks.")
    parser.add_argument("--output", help="also write the JSON report here")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check simplicial identities")
    _add_space(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("homology", help="homology of normalized chains")
    _add_space(p)
    p.add_argument("--field", default="F2")
    p.add_argument("--top", type=int)
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("cobar", help="homology of the truncated cobar construction")
    _add_space(p)
    _add_caps(p)
    p.add_argument("--field", default="F2")
    p.set_defaults(func=cmd_cobar)

    p = sub.add_parser("pi1", help="edge-path presentation and finiteness certificate")
    _add_space(p)
    _add_caps(p)
    p.set_defaults(func=cmd_pi1)

    p = sub.add_parser("cover", help="universal cover of a space with finite fundamental group")
    _add_space(p)
    _add_caps(p)
    p.add_argument("--field", default="Q")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("points", help="group-likes of the chains coalgebra")
    _add_space(p)
    p.add_argument("--field", default="F2")
    p.set_defaults(func=cmd_points)

    p = sub.add_parser("fixed-points", help="simplicial and coalgebra fixed points per subgroup")
    _add_space(p)
    p.add_argument("--group", help="group JSON (overrides the one in the input)")
    p.add_argument("--field", default="F2")
    p.set_defaults(func=cmd_fixed_points)

    p = sub.add_parser("orbit-diagram", help="fixed-point diagram over the orbit category")
    _add_space(p)
    p.add_argument("--group", help="group JSON")
    p.set_defaults(func=cmd_orbit_diagram)

    p = sub.add_parser("cellularity", help="cellularity conditions for all subgroup pairs")
    _add_space(p)
    p.add_argument("--group", help="group JSON")
    p.add_argument("--group-name", default="C2", help="named group when no --group file is given")
    p.set_defaults(func=cmd_cellularity)

    p = sub.add_parser("equivalence", help="equivalence oracles")
    p.add_argument("--map", required=True, help="map JSON")
    p.add_argument("--notion", type=int, choices=(1, 2, 3), default=3)
    p.add_argument("--group", help="group JSON; the map is then a G-map")
    p.add_argument("--side", choices=("simplicial", "coalgebra"), default="simplicial")
    p.add_argument("--field", default="F2")
    _add_caps(p)
    p.set_defaults(func=cmd_equivalence)

    p = sub.add_parser("descent", help="Galois descent checks")
    p.add_argument("--extension", help="extension JSON {p, k_base, k_top}")
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--k-base", dest="k_base", type=int, default=1)
    p.add_argument("--k-top", dest="k_top", type=int, default=2)
    p.add_argument("--set", help="Galois set JSON {points, generator}")
    p.add_argument("--input", help="G-space JSON with an optional 'galois' permutation")
    p.add_argument("--max-size", dest="max_size", type=int, default=6)
    p.set_defaults(func=cmd_descent)

    p = sub.add_parser("corpus", help="run the acceptance criteria")
    p.add_argument("--criterion", type=int, action="append", help="run only these criteria")
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("models", help="list built-in models")
    p.set_defaults(func=cmd_models)
    return parser


def run(argv=None, out=None):
    """Run one command; returns the exit code and writes the report."""
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else OK
    try:
        report, code = args.func(args)
    except Inconclusive as exc:
        report, code = {"command": args.command, "verdict": INCONCLUSIVE, "reason": str(exc), "cap": exc.cap}, UNSURE
    except (InputError, CapExceeded) as exc:
        report, code = {"command": args.command, "error": str(exc)}, BAD_INPUT
    except EquicobarError as exc:
        report, code = {"command": args.command, "error": str(exc)}, BAD_INPUT
    except (KeyError, ValueError, TypeError) as exc:
        report, code = {"command": args.command, "error": f"{type(exc).__name__}: {exc}"}, BAD_INPUT
    report["exit_code"] = code
    text = dumps(report)
    out.write(text)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
