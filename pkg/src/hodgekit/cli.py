"""Command-line front end.

Exit status is 0 when every check passes, 1 when a check fails (the report
carries the first counterexample) and 2 when the input is malformed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import comb

SCHEMA_VERSION = "1.0"


class InputError(Exception):
    """Malformed command-line input; maps to exit status 2."""


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def _parsing(fn, *args, what: str = "input"):
    """Run a parser and turn its complaints into :class:`InputError`."""
    try:
        return fn(*args)
    except InputError:
        raise
    except (KeyError, TypeError, ValueError, ZeroDivisionError, AttributeError) as exc:
        raise InputError(f"malformed {what}: {exc}") from exc


def _str(x) -> str:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def _form_terms(phi) -> list:
    return [[str(w), _str(c)] for w, c in phi.sorted_terms()]


# -- subcommands -------------------------------------------------------------


def cmd_verify_star(args):
    from .hodge_star import check_star_agreement

    if not 1 <= args.n <= 3:
        raise InputError("verify star supports 1 <= n <= 3")
    rep = check_star_agreement(args.n)
    ok = not rep["mismatches"]
    lines = [f"n = {args.n}: {rep['words_checked']} words checked, {len(rep['mismatches'])} mismatches"]
    return rep, ok, lines


def cmd_verify_sl2(args):
    from .lefschetz import check_sl2

    if not 1 <= args.n <= 4:
        raise InputError("verify sl2 supports 1 <= n <= 4")
    rep = check_sl2(args.n)
    ok = all(v == "ok" for v in rep["relations"].values())
    lines = [f"n = {args.n}, dimension {rep['dimension']}"]
    lines += [f"  {k}: {v}" for k, v in rep["relations"].items()]
    return rep, ok, lines


def cmd_verify_kaehler(args):
    from .dolbeault import check_kaehler_identities

    if not 1 <= args.n <= 2 or args.maxfreq < 0:
        raise InputError("verify kaehler supports n in 1..2 and maxfreq >= 0")
    rep = check_kaehler_identities(args.n, args.maxfreq)
    rep["identities"] = dict(sorted(rep["identities"].items()))
    ok = all(v == "ok" for v in rep["identities"].values())
    lines = [f"n = {args.n}, maxfreq = {args.maxfreq}, {rep['modes_checked']} modes"]
    lines += [f"  {k}: {v}" for k, v in rep["identities"].items()]
    return rep, ok, lines


def cmd_hodge(args):
    from .discrete_hodge import SimplicialComplex, betti_numbers, build_hodge

    obj = _load_json(args.file)
    K = _parsing(SimplicialComplex.from_json, obj, what="complex")
    weights = obj.get("weights") if isinstance(obj, dict) else None
    ops = _parsing(lambda: build_hodge(K, weights, verify=False), what="weights")
    identities = dict(sorted(ops.identity_report().items()))
    betti = betti_numbers(K, weights)
    rep = {"complex": K.to_json(), "betti": betti["harmonic"], "rank_nullity": betti["rank_nullity"],
           "identities": identities}
    ok = betti["agree"] and all(v == "ok" for v in identities.values())
    lines = [f"Betti numbers: {tuple(betti['harmonic'])}", f"rank-nullity: {tuple(betti['rank_nullity'])}"]
    lines += [f"  {k}: {v}" for k, v in identities.items()]
    return rep, ok, lines


def cmd_cech(args):
    from .cech import Nerve, PresentedSheaf, SheafValidationError, cohomology_dims, constant_sheaf, euler_check

    nerve = _parsing(Nerve.from_json, _load_json(args.file), what="nerve")
    if args.sheaf:
        sheaf = _parsing(PresentedSheaf.from_json, _load_json(args.sheaf), nerve, what="sheaf")
    else:
        sheaf = constant_sheaf(nerve, 1)
    try:
        dims = cohomology_dims(sheaf)
    except SheafValidationError as exc:
        raise InputError(str(exc)) from exc
    euler = euler_check(sheaf)
    rep = {"cover_size": nerve.cover_size, "dims": dims, "delta_squared": "ok", "euler": euler}
    lines = [f"dims: {tuple(dims)}", "delta^2 = 0: ok",
             f"Euler characteristic: {euler['cochains']} (cochains) vs {euler['cohomology']} (cohomology)"]
    return rep, euler["ok"], lines


def _read_curvature(obj):
    from .dolbeault import symbolic_form_from_json
    from .exterior import Form

    rows = obj["matrix"] if isinstance(obj, dict) else obj
    if not isinstance(rows, list) or not rows:
        raise ValueError("curvature must be a nonempty matrix of forms")
    out = []
    for row in rows:
        out.append([symbolic_form_from_json(e) if e.get("coeff_kind") == "poly" else Form.from_json(e)
                    for e in row])
    return out


def cmd_chern(args):
    from .chern import chern_forms, matrix_wedge, newton_c_from_b

    theta = _parsing(_read_curvature, _load_json(args.curvature), what="curvature matrix")
    r = len(theta)
    if any(len(row) != r for row in theta):
        raise InputError("curvature matrix must be square")
    try:
        forms = chern_forms(theta, scale=1)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    # Newton: with b_k = tr(Theta^k), the recursion gives (-1)^k times the graded pieces
    p = theta
    traces = []
    for _ in range(r):
        tr = p[0][0]
        for i in range(1, r):
            tr = tr + p[i][i]
        traces.append(tr)
        p = matrix_wedge(p, theta)
    c = newton_c_from_b(traces)
    mismatch = [k + 1 for k, ck in enumerate(c) if not (ck * (-1) ** (k + 1) - forms[k + 1]).is_zero()]
    rep = {
        "rank": r,
        "scale": "c_k carries a factor (i/(2*pi))^k",
        "chern_forms": [_form_terms(f) for f in forms],
        "newton_consistent": not mismatch,
        "newton_mismatch_degrees": mismatch,
    }
    lines = [f"rank {r}; listed c_k omit the factor (i/(2*pi))^k"]
    for k, f in enumerate(forms):
        body = " + ".join(f"({cf})*{w}" for w, cf in _form_terms(f)) or "0"
        lines.append(f"  c_{k} = {body}")
    lines.append(f"Newton identities: {'ok' if not mismatch else 'FAIL'}")
    return rep, not mismatch, lines


def cmd_bundle(args):
    from . import bundles as B

    if args.space != "pn":
        raise InputError("only 'pn' is supported")
    n, m = args.n, args.m
    if not 1 <= n <= 3:
        raise InputError("bundle pn supports 1 <= n <= 3")
    sec = B.sections_of_mH(n, m)
    rep = {"n": n, "m": m, "dim_sections": sec["dim"], "expected": comb(n + m, n) if m >= 0 else 0,
           "sections_compatible": sec["compatible"],
           "monomials": [s["monomial"] for s in sec["basis"]]}
    ok = sec["compatible"] and rep["dim_sections"] == rep["expected"]
    lines = [f"dim sections = {sec['dim']}"]
    if args.check == "cocycle":
        reports = {}
        for bundle in (B.hyperplane_bundle(n), B.universal_bundle(n), B.canonical_bundle(n)):
            r_ = bundle.check_cocycle(10, args.seed)
            reports[bundle.name] = {"ok": r_["ok"], "symbolic": r_["symbolic"], "triples": r_["triples"],
                                    "samples_per_triple": r_["samples_per_triple"], "failures": r_["failures"]}
        h = B.hyperplane_bundle(n)
        trivial = B.tensor(h, B.dual(h)).is_trivial_cocycle()
        canon = B.canonical_vs_hyperplane(n)
        rep["cocycle"] = reports
        rep["H_tensor_dual_trivial"] = trivial
        rep["canonical_vs_hyperplane"] = canon
        ok = ok and trivial and canon["ok"] and all(v["ok"] for v in reports.values())
        lines += [f"cocycle {k}: {'ok' if v['ok'] else 'FAIL'}" for k, v in reports.items()]
        lines.append(f"H (x) H* trivial: {'ok' if trivial else 'FAIL'}")
        lines.append(f"K = H^{canon['twist']} via lambda {canon['lambda']}: {'ok' if canon['ok'] else 'FAIL'}")
    elif args.check == "kaehler":
        kc = B.kaehler_check(B.fubini_study_metric_matrix(n))
        from .dolbeault import d

        closed = d(B.fubini_study_form(n)).is_zero()
        lift = B.fubini_study_lift_check(n)
        rep["kaehler"] = kc
        rep["fubini_study_closed"] = closed
        rep["lift_invariant"] = lift["ok"]
        ok = ok and kc["kaehler"] and closed and lift["ok"]
        lines.append(f"Kaehler criterion: {kc['criterion']}{' (vacuous for n = 1)' if kc['vacuous'] else ''}")
        lines.append(f"d omega = 0: {'ok' if closed else 'FAIL'}")
        lines.append(f"lift invariance: {'ok' if lift['ok'] else 'FAIL'}")
    elif args.check == "positivity":
        pos = B.is_positive(B.fubini_study_form(n), B.sample_points(n, 25, args.seed))
        rep["positivity"] = pos
        ok = ok and pos["positive"]
        lines.append(f"Fubini-Study positive at {pos['points']} points: {'ok' if pos['positive'] else 'FAIL'}")
    return rep, ok, lines


def cmd_elliptic(args):
    from .elliptic import (
        LDO,
        FourierCoefficient,
        NotElliptic,
        apply,
        is_elliptic,
        parametrix,
        sobolev_identity_check,
        sobolev_norm_sq,
    )

    op = _parsing(LDO.from_json, _load_json(args.file), what="operator")
    f = _parsing(FourierCoefficient.from_json, _load_json(args.input), what="input function")
    if f.n != op.n:
        raise InputError(f"operator acts on T^{op.n} but input lives on T^{f.n}")
    verdict = is_elliptic(op)
    rep = {"order": op.order, "ellipticity": verdict.to_json(), "output": apply(op, f).to_json()}
    ok = True
    lines = [f"order {op.order}: {verdict.label}"]
    if args.sobolev is not None:
        if args.sobolev < 0:
            raise InputError("negative Sobolev orders are not implemented")
        sc = sobolev_identity_check(f, args.sobolev)
        sc["norm_sq"] = str(sobolev_norm_sq(f, args.sobolev))
        rep["sobolev"] = sc
        ok = ok and sc["weighted_ok"]
        lines.append(f"||f||_{args.sobolev}^2 = {sc['norm_sq']}; weighted sum {sc['weighted_sum']}; "
                     f"unweighted sum {sc['unweighted_sum']} (deviation {sc['unweighted_deviation']})")
    if args.parametrix:
        try:
            p = parametrix(op)
        except NotElliptic as exc:
            rep["parametrix"] = {"refused": str(exc)}
            lines.append(f"parametrix refused: {exc}")
            return rep, False, lines
        maxfreq = max([2] + [max(abs(x) for x in k) for k in f.coeffs])
        chk = p.check(maxfreq)
        rep["parametrix"] = {"check": chk, "P_input": p.apply(f).to_json()}
        ok = ok and chk["ok"]
        lines.append(f"P L = L P = I - S on {chk['modes']} modes: {'ok' if chk['ok'] else 'FAIL'}; "
                     f"zero set {chk['zero_set']}")
    return rep, ok, lines


def cmd_poisson(args):
    from .discrete_hodge import NoSolution, SimplicialComplex, build_hodge, solve_poisson
    from .gaussian import parse_fraction
    from .linalg import mat_vec

    obj = _load_json(args.file)
    K = _parsing(SimplicialComplex.from_json, obj, what="complex")
    raw = _load_json(args.rhs)
    values = raw.get("values") if isinstance(raw, dict) else raw
    if not isinstance(values, list):
        raise InputError("right-hand side must be a list or an object with a 'values' list")
    eta = _parsing(lambda: [parse_fraction(x) for x in values], what="right-hand side")
    if not 0 <= args.degree <= K.dim:
        raise InputError(f"degree must be in 0..{K.dim}")
    if len(eta) != K.count(args.degree):
        raise InputError(f"degree-{args.degree} cochains have {K.count(args.degree)} entries, got {len(eta)}")
    weights = obj.get("weights") if isinstance(obj, dict) else None
    ops = _parsing(lambda: build_hodge(K, weights), what="weights")
    try:
        phi = solve_poisson(ops, args.degree, eta)
    except NoSolution as exc:
        obstruction = [_str(x) for x in exc.obstruction]
        rep = {"solvable": False, "harmonic_part": obstruction}
        return rep, False, [f"no solution: harmonic part of rhs is {obstruction}"]
    residual = [a - b for a, b in zip(mat_vec(ops.laplacian[args.degree], phi), eta)]
    harmonic = mat_vec(ops.harmonic[args.degree], phi)
    ok = all(x == 0 for x in residual) and all(x == 0 for x in harmonic)
    rep = {"solvable": True, "solution": [_str(x) for x in phi], "residual_zero": ok}
    return rep, ok, [f"phi = ({', '.join(_str(x) for x in phi)})", f"Delta phi = eta, H phi = 0: {'ok' if ok else 'FAIL'}"]


def report_schema() -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "exit_codes": {"0": "all checks passed", "1": "a check failed", "2": "malformed input"},
        "reports": {
            "verify star": {"n": "int", "words_checked": "int", "mismatches": "list"},
            "verify sl2": {"n": "int", "dimension": "int", "relations": "map name -> ok|FAIL",
                           "residual_nnz": "map name -> int"},
            "verify kaehler": {"n": "int", "maxfreq": "int", "modes_checked": "int", "modes_excluded": "int",
                               "identities": "map name -> ok|FAIL", "failing_modes": "map",
                               "first_counterexample": "object|null"},
            "hodge": {"complex": "object", "betti": "list[int]", "rank_nullity": "list[int]",
                      "identities": "map name -> ok|FAIL"},
            "cech": {"cover_size": "int", "dims": "list[int]", "delta_squared": "ok", "euler": "object"},
            "chern": {"rank": "int", "scale": "str", "chern_forms": "list[list[[word, coeff]]]",
                      "newton_consistent": "bool", "newton_mismatch_degrees": "list[int]"},
            "bundle": {"n": "int", "m": "int", "dim_sections": "int", "expected": "int",
                       "sections_compatible": "bool", "monomials": "list[list[int]]",
                       "cocycle": "optional object", "kaehler": "optional object",
                       "positivity": "optional object"},
            "elliptic": {"order": "int", "ellipticity": "object", "output": "Fourier JSON",
                         "sobolev": "optional object", "parametrix": "optional object"},
            "poisson": {"solvable": "bool", "solution": "optional list[str]",
                        "harmonic_part": "optional list[str]"},
        },
    }


def cmd_schema(args):
    schema = report_schema()
    return schema, True, [json.dumps(schema, indent=2, sort_keys=True)]


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    def global_options(suppress: bool) -> argparse.ArgumentParser:
        # subcommands repeat the options without defaults so a value given
        # before the subcommand is not overwritten
        p = argparse.ArgumentParser(add_help=False)
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS if suppress else False,
                       help="emit a JSON report on stdout")
        p.add_argument("--seed", type=int, default=argparse.SUPPRESS if suppress else 0,
                       help="seed for sampled checks (default 0)")
        return p

    common = global_options(True)
    parser = argparse.ArgumentParser(prog="hodgekit", description=__doc__.splitlines()[0],
                                     parents=[global_options(False)])
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a built-in verification suite", parents=[common])
    vsub = verify.add_subparsers(dest="suite", required=True)
    p = vsub.add_parser("star", parents=[common])
    p.add_argument("--n", type=int, default=2)
    p.set_defaults(func=cmd_verify_star)
    p = vsub.add_parser("sl2", parents=[common])
    p.add_argument("--n", type=int, default=2)
    p.set_defaults(func=cmd_verify_sl2)
    p = vsub.add_parser("kaehler", parents=[common])
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--maxfreq", type=int, default=1)
    p.set_defaults(func=cmd_verify_kaehler)

    p = sub.add_parser("hodge", help="Betti numbers and Hodge identities of a simplicial complex", parents=[common])
    p.add_argument("file")
    p.set_defaults(func=cmd_hodge)

    p = sub.add_parser("cech", help="Cech cohomology of a nerve", parents=[common])
    p.add_argument("file")
    p.add_argument("--sheaf")
    p.set_defaults(func=cmd_cech)

    p = sub.add_parser("chern", help="Chern forms of a curvature matrix", parents=[common])
    p.add_argument("--curvature", required=True)
    p.set_defaults(func=cmd_chern)

    p = sub.add_parser("bundle", help="line bundles on projective space", parents=[common])
    p.add_argument("space", choices=["pn"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--check", choices=["cocycle", "kaehler", "positivity"])
    p.set_defaults(func=cmd_bundle)

    p = sub.add_parser("elliptic", help="apply a constant-coefficient operator", parents=[common])
    p.add_argument("file")
    p.add_argument("--input", required=True)
    p.add_argument("--sobolev", type=int)
    p.add_argument("--parametrix", action="store_true")
    p.set_defaults(func=cmd_elliptic)

    p = sub.add_parser("poisson", help="solve Delta phi = eta on a simplicial complex", parents=[common])
    p.add_argument("file")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--rhs", required=True)
    p.set_defaults(func=cmd_poisson)

    p = sub.add_parser("schema", help="print the JSON schema of all reports", parents=[common])
    p.set_defaults(func=cmd_schema)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report, ok, lines = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    if args.json:
        payload = {"command": args.command, "ok": ok, "report": report}
        stdout.write(json.dumps(payload, indent=2, sort_keys=True, default=str) + "\n")
    else:
        for line in lines:
            print(line, file=stdout)
        if args.command != "schema":
            print("ALL CHECKS PASSED" if ok else "CHECK FAILED", file=stdout)
    if not ok:
        print("error: a check failed; see the report for the first counterexample", file=stderr)
    return 0 if ok else 1


def main() -> None:
    sys.exit(run())
