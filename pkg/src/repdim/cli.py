"""Command-line front end.

Subcommands: bounds (closed-form bound reports), witness (end-to-end
upper-bound pipelines), verify (named verification suites), algebra (dump
an algebra to the text format), indecomposables (list the indecomposables
of a serial algebra).

Exit codes: 0 pass, 1 a mathematical check failed (a bound or identity did
not hold, which would contradict a proved statement and is treated as a
bug), 2 usage error, 3 resource cap reached.  Reports are deterministic
given (command, seed) except for the timing field.
"""

import argparse
import math
import sys
import time

from .algebra import (
    AlgebraError,
    group_algebra,
    group_subalgebra_embedding,
    hecke_algebra,
    max_ell_parabolic,
    parabolic_subalgebra,
    unit_subalgebra_embedding,
)
from .bounds import (
    EvenRankUnsupported,
    RankTooLarge,
    bounds_ariki_koike,
    bounds_group,
    bounds_type_A,
    bounds_type_B,
    bounds_type_D,
)
from .coxeter import full_symmetric, sylow_symmetric
from .endo import (
    PipelineStageFailure,
    verify_gldim_comparison,
    verify_xi_additivity,
    witness_upper_group,
    witness_upper_hecke,
)
from .fields import QQ, FieldError, field_make, root_of_unity
from .modules import (
    decompose,
    direct_sum,
    induce,
    mackey_check,
    serial_indecomposables,
)
from .serialize import dump_algebra_text, make_report, report_json, report_text
from .symform import (
    casimir,
    ext_restriction_injective,
    mu_invertible,
    standard_form,
    verify_trace_identities,
)

EXIT_PASS = 0
EXIT_MATH_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3


class UsageError(ValueError):
    pass


def _parse_ell(text):
    if text in ("inf", "infinity"):
        return math.inf
    ell = int(text)
    if ell < 2:
        raise UsageError("ell must be >= 2 or inf")
    return ell


def _parse_scalar(field, text):
    text = text.strip()
    if "/" in text:
        num, den = text.split("/")
        return field.from_fraction(int(num), int(den))
    return field.from_int(int(text))


def _require(args, names):
    for name in names:
        if getattr(args, name, None) is None:
            raise UsageError("--%s is required here" % name)


def _unity_field(ell):
    field = field_make("cyclotomic", ell=ell)
    return field, root_of_unity(field, ell)


def _build_algebra(args):
    family = args.family
    if family == "group":
        _require(args, ["n", "p"])
        return group_algebra(full_symmetric(args.n), field_make("prime", p=args.p))
    _require(args, ["n", "ell"])
    if math.isinf(args.ell):
        raise UsageError("constructions need a finite ell")
    field, q = _unity_field(args.ell)
    if family == "heckeA":
        return hecke_algebra("A", args.n, field, q)
    if family == "heckeB":
        _require(args, ["Q"])
        return hecke_algebra("B", args.n, field, q, Q=_parse_scalar(field, args.Q))
    if family == "heckeD":
        return hecke_algebra("D", args.n, field, q)
    raise UsageError("cannot construct family %r" % family)


def _build_instance(family, n, ell=None, p=None):
    """(embedding, generator module) exactly as the witness pipelines
    build them."""
    from .endo import _tensor_generator_module

    if family == "group":
        field = field_make("prime", p=p)
        lam = group_algebra(full_symmetric(n), field)
        emb = group_subalgebra_embedding(lam, sylow_symmetric(n, p))
        factors = [group_algebra(sylow_symmetric(p, p), field) for _ in range(n // p)]
    elif family == "heckeA":
        field, q = _unity_field(ell)
        lam = hecke_algebra("A", n, field, q)
        emb = max_ell_parabolic(lam, ell)
        factors = [hecke_algebra("A", ell, field, q) for _ in range(n // ell)]
    else:
        raise UsageError("unknown family %r" % family)
    return emb, _tensor_generator_module(emb, factors)


# -- subcommand handlers -------------------------------------------------


def _cmd_bounds(args):
    family = args.family
    if family == "heckeA":
        _require(args, ["n", "ell"])
        rep = bounds_type_A(args.n, args.ell)
    elif family == "heckeB":
        _require(args, ["n", "ell", "Q"])
        field, _ = _unity_field(args.ell)
        rep = bounds_type_B(args.n, args.ell, _parse_scalar(field, args.Q))
    elif family == "heckeD":
        _require(args, ["n", "ell"])
        rep = bounds_type_D(args.n, args.ell)
    elif family == "arikiKoike":
        _require(args, ["n", "ell", "Q_list"])
        field, _ = _unity_field(args.ell)
        q_list = [_parse_scalar(field, x) for x in args.Q_list.split(",")]
        rep = bounds_ariki_koike(args.n, args.ell, q_list)
    elif family == "group":
        _require(args, ["n", "p"])
        rep = bounds_group(args.n, args.p)
    else:
        raise UsageError("unknown family %r" % family)
    return "pass", rep.to_dict()


def _witness_payload(w):
    return {
        "instance": w.instance,
        "checks": w.checks,
        "bound": w.bound,
        "gldim": w.gldim,
        "per_simple_pd": [e["pd"] for e in w.gldim_report.per_simple],
        "intermediates": {
            k: list(map(list, v)) if k == "summand_classes" else v
            for k, v in w.intermediates.items()
        },
    }


def _cmd_witness(args):
    if args.family == "heckeA":
        _require(args, ["n", "ell"])
        if math.isinf(args.ell):
            raise UsageError("witness needs a finite ell")
        w = witness_upper_hecke(args.n, args.ell, cap=args.cap)
    elif args.family == "group":
        _require(args, ["n", "p"])
        w = witness_upper_group(args.n, args.p, cap=args.cap)
    else:
        raise UsageError("witness supports families heckeA and group")
    return "pass", _witness_payload(w)


def _suite_casimir(args):
    results = []
    # group algebras over QQ: mu of the absolute Casimir element is |G|
    for label, group in (
        ("C2", sylow_symmetric(2, 2)),
        ("C3", sylow_symmetric(3, 3)),
        ("S3", full_symmetric(3)),
    ):
        kg = group_algebra(group, QQ)
        c = casimir(unit_subalgebra_embedding(kg), standard_form(kg))
        want = [QQ.mul(QQ.from_int(kg.dim), x) for x in kg.unit]
        results.append({"instance": "mu(k%s/QQ) = |G|" % label, "ok": c.mu == want})
    # Sylow pair over F_2: index 3 is invertible
    kg = group_algebra(full_symmetric(3), field_make("prime", p=2))
    emb = group_subalgebra_embedding(kg, sylow_symmetric(3, 2))
    c = casimir(emb, standard_form(kg))
    results.append({"instance": "mu invertible: F2 S3 over Sylow", "ok": mu_invertible(c)})
    # q = -1 type A on 4 strands over the (2,2)-parabolic
    h = hecke_algebra("A", 4, QQ, QQ.from_int(-1))
    emb = parabolic_subalgebra(h, (2, 2))
    c = casimir(emb, standard_form(h))
    results.append({"instance": "mu invertible: H_-1(4) over (2,2)", "ok": mu_invertible(c)})
    return results


def _suite_trace(args):
    _require(args, ["family"])
    if args.family == "group":
        _require(args, ["n", "p"])
        emb, _ = _build_instance("group", args.n, p=args.p)
    else:
        _require(args, ["n", "ell"])
        emb, _ = _build_instance("heckeA", args.n, ell=args.ell)
    from .modules import regular_module

    lam = emb.ambient
    out = verify_trace_identities(
        emb,
        standard_form(lam),
        [regular_module(lam)],
        seed=args.seed,
        samples=args.samples,
    )
    return [{"instance": lam.name, **out}]


def _suite_ext_injectivity(args):
    _require(args, ["family"])
    if args.family == "group":
        _require(args, ["n", "p"])
        emb, gen = _build_instance("group", args.n, p=args.p)
    else:
        _require(args, ["n", "ell"])
        emb, gen = _build_instance("heckeA", args.n, ell=args.ell)
    ind = induce(emb, gen)
    reps = [crep for crep, _ in decompose(ind, seed=args.seed).classes]
    results = []
    for a_idx, a in enumerate(reps):
        for b_idx, b in enumerate(reps):
            for i in (1, 2):
                ok, ker = ext_restriction_injective(emb, a, b, i)
                results.append(
                    {
                        "instance": "Ext^%d(summand %d, summand %d)" % (i, a_idx, b_idx),
                        "kernel_dim": ker,
                        "ok": ok,
                    }
                )
    return results


def _suite_mackey(args):
    _require(args, ["n", "p"])
    _, gen = _build_instance("group", args.n, p=args.p)
    out = mackey_check(args.n, args.p, gen)
    return [
        {
            "instance": "S_%d at p = %d" % (args.n, args.p),
            "lhs_dim": out["lhs_dim"],
            "rhs_dim": out["rhs_dim"],
            "ok": out["decompositions_match"] and out["add_member"],
        }
    ]


def _xi_factor(kind):
    from .algebra import truncated_polynomial_algebra

    if kind == "truncated":
        b = truncated_polynomial_algebra(QQ, 2)
    else:
        b = hecke_algebra("A", 2, QQ, QQ.from_int(-1))
    gen, _ = direct_sum(serial_indecomposables(b))
    return b, gen


def _suite_xi(args):
    results = []
    for kind in ("truncated", "hecke"):
        b1, m1 = _xi_factor(kind)
        b2, m2 = _xi_factor(kind)
        out = verify_xi_additivity(b1, m1, b2, m2, cap=args.cap)
        results.append(
            {"instance": kind, "total": out["total"], "parts": out["parts"], "ok": out["holds"]}
        )
    return results


def _suite_gldim_comparison(args):
    results = []
    emb, gen = _build_instance("group", 3, p=2)
    out = verify_gldim_comparison(emb, gen, cap=args.cap)
    results.append({"instance": "F2 S3 over Sylow", **out, "ok": out["holds"]})
    emb, gen = _build_instance("heckeA", 3, ell=2)
    out = verify_gldim_comparison(emb, gen, cap=args.cap)
    results.append({"instance": "H_-1(3) over (2,1)", **out, "ok": out["holds"]})
    return results


_SUITES = {
    "casimir": _suite_casimir,
    "trace": _suite_trace,
    "ext-injectivity": _suite_ext_injectivity,
    "mackey": _suite_mackey,
    "xi": _suite_xi,
    "gldim-comparison": _suite_gldim_comparison,
}


def _cmd_verify(args):
    results = _SUITES[args.suite](args)
    ok = all(r["ok"] for r in results)
    payload = {"suite": args.suite, "results": results, "ok": ok}
    if not ok:
        raise PipelineStageFailure(args.suite, payload)
    return "pass", payload


def _cmd_algebra(args):
    alg = _build_algebra(args)
    text = dump_algebra_text(alg)
    if args.path is None:
        raise UsageError("--path is required for the algebra subcommand")
    with open(args.path, "w") as fh:
        fh.write(text)
    return "pass", {"name": alg.name, "dim": alg.dim, "path": args.path}


def _cmd_indecomposables(args):
    alg = _build_algebra(args)
    mods = serial_indecomposables(alg)
    return "pass", {
        "algebra": alg.name,
        "count": len(mods),
        "dims": sorted(m.dim for m in mods),
    }


# -- argument parsing and dispatch ----------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(prog="repdim")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p):
        p.add_argument("--n", type=int)
        p.add_argument("--ell", type=_parse_ell)
        p.add_argument("--p", type=int)
        p.add_argument("--Q", type=str)
        p.add_argument("--Q-list", dest="Q_list", type=str)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--cap", type=int, default=None,
                       help="max syzygy depth before giving up")
        p.add_argument("--samples", type=int, default=20)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", type=str, default=None,
                       help="write the report here instead of stdout")

    p = sub.add_parser("bounds")
    p.add_argument("--family", required=True,
                   choices=("heckeA", "heckeB", "heckeD", "arikiKoike", "group"))
    common(p)
    p.set_defaults(handler=_cmd_bounds)

    p = sub.add_parser("witness")
    p.add_argument("--family", required=True, choices=("heckeA", "group"))
    common(p)
    p.set_defaults(handler=_cmd_witness)

    p = sub.add_parser("verify")
    p.add_argument("--suite", required=True, choices=sorted(_SUITES))
    p.add_argument("--family", choices=("heckeA", "group"))
    common(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("algebra")
    p.add_argument("--family", required=True,
                   choices=("heckeA", "heckeB", "heckeD", "group"))
    p.add_argument("--path", type=str)
    common(p)
    p.set_defaults(handler=_cmd_algebra)

    p = sub.add_parser("indecomposables")
    p.add_argument("--family", required=True,
                   choices=("heckeA", "heckeB", "heckeD", "group"))
    common(p)
    p.set_defaults(handler=_cmd_indecomposables)

    return parser


def run(argv):
    """Execute one command; returns (exit_code, report dict)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.monotonic()
    code = EXIT_PASS
    try:
        status, payload = args.handler(args)
    except UsageError as exc:
        status, payload, code = "fail", {"error": str(exc)}, EXIT_USAGE
    except (RankTooLarge, EvenRankUnsupported, FieldError, ValueError) as exc:
        status, payload, code = "fail", {"error": str(exc)}, EXIT_USAGE
    except PipelineStageFailure as exc:
        if exc.stage == "global_dimension":
            status, code = "partial", EXIT_CAP
        else:
            status, code = "fail", EXIT_MATH_FAIL
        payload = {"stage": exc.stage, "detail": str(exc.detail)}
    except AlgebraError as exc:
        status, payload, code = "fail", {"error": str(exc)}, EXIT_MATH_FAIL
    timing_ms = int((time.monotonic() - start) * 1000)
    report = make_report(argv, status, payload, seed=args.seed, timing_ms=timing_ms)
    return code, report


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        code, report = run(argv)
    except SystemExit as exc:
        # argparse reports its own usage errors on stderr with code 2
        return EXIT_USAGE if exc.code not in (0, None) else 0
    rendered = report_json(report) if report_format(argv) == "json" else report_text(report)
    out_path = report_out_path(argv)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(rendered)
    else:
        sys.stdout.write(rendered)
    return code


def report_format(argv):
    for i, a in enumerate(argv):
        if a == "--format" and i + 1 < len(argv):
            return argv[i + 1]
        if a.startswith("--format="):
            return a.split("=", 1)[1]
    return "text"


def report_out_path(argv):
    for i, a in enumerate(argv):
        if a == "--out" and i + 1 < len(argv):
            return argv[i + 1]
        if a.startswith("--out="):
            return a.split("=", 1)[1]
    return None


if __name__ == "__main__":
    sys.exit(main())
