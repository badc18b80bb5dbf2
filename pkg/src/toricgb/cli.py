"""Command-line front end.

Exit codes: 0 claims verified, 1 a verification claim failed, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import closedform as cf
from . import verify as vf
from .errors import InvalidSequence
from .groebner import s_polynomial
from .polycore import (
    ASC,
    DESC,
    MonomialOrder,
    format_binomial,
    format_monomial,
    make_binomial,
    parse_binomial,
)
from .semigroup import SemigroupParams, compute_params, interval_empty, validate_input

EXIT_OK, EXIT_CLAIM_FAILED, EXIT_INVALID = 0, 1, 2


# ---------- JSON documents ----------

def _interval(iv):
    return None if interval_empty(iv) else list(iv)


def params_to_dict(m, params: SemigroupParams) -> dict:
    P = params
    return {
        "m": list(m), "n": len(m) - 1, "p": P.p,
        "u": P.u, "v": P.v, "w": P.w, "z": P.z,
        "lambda": P.lam, "mu": P.mu, "nu": P.nu,
        "q": P.q, "r": P.r, "qprime": P.qprime, "rprime": P.rprime,
        "qz": P.qz, "rz": P.rz, "epsilon": P.epsilon,
        "I": _interval(P.interval_I), "J": _interval(P.interval_J),
    }


def basis_to_dict(basis: cf.BasisSet) -> dict:
    return {
        "m": list(basis.seq.m),
        "variant": basis.variant,
        "order": basis.order.convention,
        "elements": [
            {"tag": str(tag), "lead": format_monomial(f.lead),
             "trail": format_monomial(f.trail), "text": format_binomial(f)}
            for tag, f in basis.elements
        ],
    }


def _parse_tag(text):
    kind, _, rest = text.partition("(")
    indices = tuple(int(x) for x in rest.rstrip(")").split(",")) if rest else ()
    return cf.GeneratorTag(kind, indices)


def basis_from_dict(doc: dict) -> cf.BasisSet:
    """Rebuild a BasisSet from the output of ``basis --format json``."""
    seq = validate_input(doc["m"])
    order = MonomialOrder(seq.m, doc["order"])
    elements = []
    for item in doc["elements"]:
        f = parse_binomial(item["text"], seq.n, order)
        if f is None:
            raise ValueError(f"zero binomial in element {item['tag']}")
        elements.append((_parse_tag(item["tag"]), f))
    return cf.BasisSet(doc["variant"], tuple(elements), compute_params(seq), order, seq)


# ---------- text rendering ----------

def _params_text(d):
    lines = [f"m = {d['m']}  (n={d['n']}, p={d['p']})"]
    for key in ("u", "v", "w", "z", "lambda", "mu", "nu", "q", "r",
                "qprime", "rprime", "qz", "rz", "epsilon", "I", "J"):
        val = d[key]
        if key in ("I", "J"):
            val = "empty" if val is None else f"[{val[0]},{val[1]}]"
        lines.append(f"{key:>8} = {val}")
    return "\n".join(lines)


def _basis_text(d):
    lines = [f"{d['variant']} basis for m={d['m']} under {d['order']} order:"]
    lines += [f"  {e['tag']:<10} {e['text']}" for e in d["elements"]]
    return "\n".join(lines)


def _report_text(d):
    lines = [f"{d['variant']} set for m={d['sequence']} under {d['order_convention']} order"]
    for key, val in d.items():
        if key in ("sequence", "order_convention", "variant"):
            continue
        if key == "gb_witness" and val is not None:
            lines.append(f"  gb_witness: S({val['f']}, {val['g']}) -> {val['normal_form']}")
            continue
        lines.append(f"  {key}: {val}")
    return "\n".join(lines)


def _emit(args, doc, text):
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(text)


# ---------- subcommands ----------

def cmd_params(args):
    seq = validate_input(args.m)
    doc = params_to_dict(seq.m, compute_params(seq))
    _emit(args, doc, _params_text(doc))
    return EXIT_OK


def cmd_basis(args):
    seq = validate_input(args.m)
    params = compute_params(seq)
    basis = cf.build_generators(seq, params, args.set, MonomialOrder(seq.m, args.order))
    doc = basis_to_dict(basis)
    _emit(args, doc, _basis_text(doc))
    return EXIT_OK


def cmd_verify(args):
    seq = validate_input(args.m)
    report = vf.verify_variant(seq, args.order, args.set, args.method, args.degree_bound)
    doc = report.to_dict()
    _emit(args, doc, _report_text(doc))
    return EXIT_OK if report.claims_hold() else EXIT_CLAIM_FAILED


def cmd_sweep(args):
    conventions = (ASC, DESC) if args.order == "both" else (args.order,)
    summary = vf.run_sweep(args.max_m, args.max_n, conventions, min_n=args.min_n,
                           standard_monomials_check=not args.no_standard_monomials)
    doc = summary.to_dict()
    lines = [
        f"sweep n in [{args.min_n},{args.max_n}], entries <= {args.max_m}, orders {list(conventions)}",
        f"  instances: {summary.instances}",
        f"  checks:    {summary.checks}",
        f"  violations: {len(summary.violations)}",
    ]
    lines += [f"    {list(s)}: {c}" for s, c in summary.violations[:args.show]]
    if len(summary.violations) > args.show:
        lines.append(f"    ... {len(summary.violations) - args.show} more")
    lines += [f"  {k}: {v}" for k, v in doc["counts"].items()]
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK if summary.ok else EXIT_CLAIM_FAILED


def _check(results, label, ok):
    results.append({"claim": label, "ok": bool(ok)})


def repro_patil(args):
    k = args.m0
    if k < 5 or k % 2 == 0:
        raise InvalidSequence(f"--m0 must be an odd integer >= 5, got {k}")
    seq = validate_input((k, k + 1, k - 1))
    P = compute_params(seq)
    order = MonomialOrder(seq.m, ASC)
    half_up, half_down = (k + 1) // 2, (k - 1) // 2
    results = []
    _check(results, f"v = u = {half_up}", P.v == P.u == half_up)
    _check(results, f"mu = 0, z = w = {half_down}, lambda = 2",
           P.mu == 0 and P.z == P.w == half_down and P.lam == 2)
    _check(results, "r = p = r' = 1", P.r == P.p == P.rprime == 1)
    _check(results, "failure hypotheses r' >= r, mu = 0, W nonempty",
           vf.failure_hypotheses(P).patil_not_gb)
    patil = cf.build_generators(seq, P, cf.PATIL, order)
    ok, witness = vf.verify_buchberger(patil)
    _check(results, "Patil set fails the Buchberger criterion", not ok)
    # S_1 = x0^(lambda-1) x_k x_n^w - x_(r'+k) x_(p+r-r') x_p^(q-1) at k = 0
    expected = make_binomial((P.lam, 0, P.w), (0, P.q + 1, 0), order)
    _check(results, f"witness normal form equals {format_binomial(expected)}",
           witness is not None and witness.normal_form == expected)
    g = cf.build_generators(seq, P, cf.G, order)
    g_ok, _ = vf.verify_buchberger(g)
    _check(results, "G is a Groebner basis", g_ok)
    _check(results, "G is reduced", cf.is_reduced_basis(g))
    cond = cf.check_conditions(P)
    _check(results, "neither C1 nor C2 holds", not cond.c1 and not cond.c2)
    return seq, witness, results


def repro_ps_desc(args):
    seq = validate_input((20, 21, 22, 23, 24, 29))
    P = compute_params(seq)
    order = MonomialOrder(seq.m, DESC)
    results = []
    _check(results, "v=3, mu=2, qz=1, rz=3, z=7, u=9, q=2, r=1, lambda=2, w=1, r'=2, q'=0",
           (P.v, P.mu, P.qz, P.rz, P.z, P.u, P.q, P.r, P.lam, P.w, P.rprime, P.qprime)
           == (3, 2, 1, 3, 7, 9, 2, 1, 2, 1, 2, 0))
    _check(results, "failure hypotheses r < rz < p, lambda > 1, w > 0",
           vf.failure_hypotheses(P).ps_not_gb_desc)
    ps = cf.build_generators(seq, P, cf.PATIL_SINGH, order)
    ok, witness = vf.verify_buchberger(ps)
    _check(results, "Patil-Singh set fails the Buchberger criterion", not ok)
    by_tag = dict((str(t), f) for t, f in ps.elements)
    expected = s_polynomial(by_tag["theta"], by_tag["xi(1,3)"], order)
    target = {(0, 1, 0, 0, 0, 3), (3, 0, 0, 0, 2, 0)}
    _check(results, "S(theta, xi(1,3)) = x1*x5^3 - x0^3*x4^2 (up to sign)",
           expected is not None and set(expected.monomials()) == target)
    _check(results, "witness is S(theta, xi(1,3)) and is irreducible",
           witness is not None and {witness.f, witness.g} == {by_tag["theta"], by_tag["xi(1,3)"]}
           and witness.normal_form == expected)
    return seq, witness, results


def cmd_repro(args):
    seq, witness, results = (repro_patil if args.which == "patil-counterexample"
                             else repro_ps_desc)(args)
    ok = all(r["ok"] for r in results)
    doc = {
        "example": args.which,
        "m": list(seq.m),
        "witness": None if witness is None else {
            "f": format_binomial(witness.f), "g": format_binomial(witness.g),
            "spoly": format_binomial(witness.spoly),
            "normal_form": format_binomial(witness.normal_form),
        },
        "claims": results,
        "reproduced": ok,
    }
    lines = [f"{args.which} on m={list(seq.m)}"]
    lines += [f"  [{'ok' if r['ok'] else 'FAIL'}] {r['claim']}" for r in results]
    if witness is not None:
        lines.append(f"  witness: S({doc['witness']['f']}, {doc['witness']['g']})"
                     f" -> {doc['witness']['normal_form']}")
    lines.append("reproduced" if ok else "NOT reproduced")
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK if ok else EXIT_CLAIM_FAILED


# ---------- parser ----------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toricgb",
        description="Groebner bases of toric ideals of almost arithmetic monomial curves.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    seq_args = argparse.ArgumentParser(add_help=False)
    seq_args.add_argument("m", type=int, nargs="+", metavar="M",
                          help="m0 ... mn; the last entry is the non-arithmetic one")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", parents=[common, seq_args], help="structural parameters")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("basis", parents=[common, seq_args], help="closed-form generators")
    p.add_argument("--set", choices=cf.VARIANTS, default=cf.G)
    p.add_argument("--order", choices=(ASC, DESC), default=ASC)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("verify", parents=[common, seq_args], help="verify a generator set")
    p.add_argument("--set", choices=cf.VARIANTS, default=cf.G)
    p.add_argument("--order", choices=(ASC, DESC), default=ASC)
    p.add_argument("--method", choices=(vf.BUCHBERGER, vf.STANDARD_MONOMIALS, vf.BOTH),
                   default=vf.BOTH)
    p.add_argument("--degree-bound", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", parents=[common], help="check every claim over a range")
    p.add_argument("--max-m", type=int, default=40)
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--min-n", type=int, default=2)
    p.add_argument("--order", choices=(ASC, DESC, "both"), default="both")
    p.add_argument("--no-standard-monomials", action="store_true",
                   help="skip the bounded standard-monomial coupling checks")
    p.add_argument("--show", type=int, default=20, help="violations listed in text output")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("repro", parents=[common], help="reproduce a published counterexample")
    p.add_argument("which", choices=("patil-counterexample", "ps-desc-counterexample"))
    p.add_argument("--m0", type=int, default=5)
    p.set_defaults(func=cmd_repro)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InvalidSequence as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
