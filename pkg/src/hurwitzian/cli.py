"""Command-line entry point: ``hurwitzian <subcommand> ...``.

Exit codes: 0 success / verified, 1 mathematical negative, 2 usage or input
error, 3 search or expansion budget exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import algebra, identities, quadruples, sets
from .gf2n import CubicForm, make_alpha_O
from .hadamard import HadamardMatrix, parse_hadamard_spec
from .polarization import TruthTable, check_properties, is_degree_le3, twist_from_cubic

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


def load_alpha(n: int, source: str) -> CubicForm:
    if source == "alpha_O":
        return make_alpha_O(n)
    text = source
    if os.path.isfile(source):
        with open(source) as fh:
            text = fh.read().strip()
    if text.startswith("{"):
        form = CubicForm.from_json(text)
        if form.n != n:
            raise InputError(f"form file has n={form.n}, expected {n}")
        return form
    return CubicForm.from_text(n, text)


def load_set(n: int, spec: str) -> sets.VecSet:
    if spec == "full":
        return sets.VecSet.full(n)
    if spec == "construct":
        return sets.best_construction(n)
    if not os.path.isfile(spec):
        raise InputError(f"no such set file: {spec}")
    with open(spec) as fh:
        A = sets.VecSet.from_text(fh.read())
    if A.n != n:
        raise InputError(f"set file {spec} has dimension {A.n}, expected {n}")
    return A


def load_hadamard(spec: str) -> HadamardMatrix:
    if os.path.isfile(spec):
        with open(spec) as fh:
            return HadamardMatrix.from_text(fh.read())
    return parse_hadamard_spec(spec)


def emit(args, payload: dict, text: str | None = None):
    payload = dict(payload)
    payload["config"] = {"seed": args.seed, "budget": args.budget}
    if args.format == "text" and text is not None:
        print(text)
    else:
        print(json.dumps(payload))


def cmd_twist(args) -> int:
    alpha = load_alpha(args.n, args.alpha)
    f = twist_from_cubic(alpha)
    report = check_properties(alpha, f, seed=args.seed)
    payload = {"n": args.n, "alpha": alpha.to_text(), "twist": f.to_text(),
               "monomials": json.loads(f.to_json())["monomials"], **report.as_dict()}
    props = " ".join(f"({k})={'ok' if v else 'FAIL'}" for k, v in report.as_dict()["properties"].items())
    emit(args, payload, f"{f.to_text()}\n{props}")
    return EXIT_OK if report.all else EXIT_FALSE


def cmd_checkform(args) -> int:
    if args.table:
        g = TruthTable.from_bits(args.table)
        ok = is_degree_le3(g)
        payload = {"n": g.n, "degree": g.anf_degree(), "is_degree_le3": ok}
        emit(args, payload, f"degree {g.anf_degree()}, cubic: {ok}")
        return EXIT_OK if ok else EXIT_FALSE
    if args.n is None:
        raise InputError("checkform needs --n with --alpha, or --table")
    alpha = load_alpha(args.n, args.alpha)
    table = alpha.truth_table() if alpha.n <= 20 else None
    payload = {
        "n": alpha.n,
        "alpha": alpha.to_text(),
        "json": json.loads(alpha.to_json()),
        "degree": alpha.degree,
        "is_alpha_O": alpha == make_alpha_O(alpha.n),
    }
    if table is not None:
        payload["support_size"] = int(table.sum())
        payload["is_degree_le3"] = is_degree_le3(TruthTable(alpha.n, table))
    emit(args, payload, f"{alpha.to_text()} (degree {alpha.degree})")
    return EXIT_OK


def cmd_maxset(args) -> int:
    if args.all_forms:
        if args.n > 4:
            raise InputError("--all-forms enumerates 2^(#monomials) forms; only n <= 4 is supported")
        rep = sets.conjecture_check(args.n, args.threads)
        rep = {k: v for k, v in rep.items() if k != "maxima"}
        emit(args, rep, f"global max {rep['global_max']} over {rep['forms']} forms")
        return EXIT_OK if rep["holds"] else EXIT_FALSE
    alpha = load_alpha(args.n, args.alpha)
    res = sets.max_hurwitzian(alpha, max_n=args.max_n, budget=args.budget,
                              deterministic=args.deterministic)
    name = "alpha_O" if args.alpha == "alpha_O" else alpha.to_text()
    cert = res.certificate(name)
    cert["exact"] = res.exact
    cert["rho"] = sets.rho(2 ** args.n)
    if res.notes:
        cert["notes"] = res.notes
    emit(args, cert, f"max {res.size}{'' if res.exact else ' (lower bound)'}\n" + "\n".join(cert["witness"]))
    return EXIT_OK if res.exact else EXIT_BUDGET


def _pick_construction(n, method, hadamard):
    if method == "hadamard" or hadamard:
        return sets.hurwitzian_from_hadamard(load_hadamard(hadamard or "paley11"))
    return {
        "auto": sets.best_construction,
        "mod12": sets.construct_mod12,
        "mod3": sets.construct_mod3,
        "mod0": sets.construct_mod0,
    }[method](n)


def cmd_construct(args) -> int:
    A = _pick_construction(args.n, args.method, args.hadamard)
    ok = sets.is_hurwitzian(make_alpha_O(A.n), A)
    payload = {"n": A.n, "size": len(A), "rho": sets.rho(2 ** A.n), "hurwitzian": ok,
               "set": A.to_strings()}
    emit(args, payload, A.to_text().rstrip())
    return EXIT_OK if ok else EXIT_FALSE


def cmd_hadamard(args) -> int:
    H = load_hadamard(args.name)
    payload = {"m": H.m, "rows": H.to_text().splitlines()}
    text = H.to_text()
    code = EXIT_OK
    s = H.m // 4
    if H.m % 4 == 0 and s % 2 == 1:
        h1, h2 = sets.hadamard_binary_rows(H)
        A = sets.VecSet.from_strings(h1 + h2, H.m - 1)
        ok = sets.is_hurwitzian(make_alpha_O(H.m - 1), A)
        payload.update({"H1": h1, "H2": h2, "set_size": len(A), "hurwitzian": ok})
        text += "\n\nH1:\n" + "\n".join(h1) + "\n\nH2:\n" + "\n".join(h2)
        code = EXIT_OK if ok else EXIT_FALSE
    emit(args, payload, text)
    return code


def _verdict(args, ident, extra=None) -> int:
    try:
        ok = identities.verify_symbolic(ident, args.budget or identities.DEFAULT_PRODUCT_BUDGET)
    except identities.ExpansionBudgetExceeded as exc:
        emit(args, {"size": list(ident.size), "error": str(exc)})
        return EXIT_BUDGET
    payload = {"size": list(ident.size), "verified": ok, **(extra or {})}
    if args.emit:
        payload["identity"] = ident.to_dict()
    text = f"[{','.join(map(str, ident.size))}] verified: {ok}"
    if args.emit:
        text = identities.render_text(ident) + "\n" + text
    emit(args, payload, text)
    return EXIT_OK if ok else EXIT_FALSE


def cmd_identity(args) -> int:
    alpha = load_alpha(args.n, args.alpha)
    f = twist_from_cubic(alpha)
    if args.set:
        A = load_set(args.n, args.set)
    elif args.hadamard:
        A = identities.identity_set(args.n, load_hadamard(args.hadamard))
    else:
        A = sets.best_construction(args.n)
    B = load_set(args.n, args.b)
    ident = identities.build_identity(f, A, B)
    if args.mutate:
        ident = identities.mutate(ident, args.mutate, args.seed)
    extra = {"n": args.n, "lemma_condition": algebra.lemma_condition(alpha, A, B)}
    return _verdict(args, ident, extra)


def cmd_verify(args) -> int:
    with open(args.file) as fh:
        text = fh.read()
    ident = identities.Identity.from_json(text) if text.lstrip().startswith("{") else identities.parse_text(text)
    return _verdict(args, ident)


def _parse_range(spec: str) -> list[int]:
    if "-" in spec:
        lo, hi = spec.split("-", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(v) for v in spec.split(",")]


def cmd_quadruples(args) -> int:
    if args.sweep:
        buf = io.StringIO()
        fields = ["n", "size_a", "size_b", "proper_count", "hypothesis_holds", "sumset_size", "ratio"]
        w = csv.DictWriter(buf, fieldnames=fields, extrasaction="ignore", lineterminator="\n")
        w.writeheader()
        for n in _parse_range(args.sweep):
            rep = quadruples.quadruple_report(load_alpha(n, args.alpha), load_set(n, args.a), load_set(n, args.b))
            w.writerow(rep.as_dict())
        sys.stdout.write(buf.getvalue())
        return EXIT_OK
    if args.n is None:
        raise InputError("quadruples needs --n or --sweep")
    A, B = load_set(args.n, args.a), load_set(args.n, args.b)
    if A.n != B.n:
        raise InputError("mismatched dimensions")
    rep = quadruples.quadruple_report(load_alpha(args.n, args.alpha), A, B)
    emit(args, rep.as_dict(), "\n".join(f"{k}: {v}" for k, v in rep.as_dict().items()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hurwitzian",
                                description="Cubic forms on F_2^n, Hurwitzian sets and square identities.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=None,
                        help="search node limit (maxset) or product limit (identity/verify)")
    common.add_argument("--threads", type=int, default=None)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=fn)
        return sp

    sp = add("twist", cmd_twist, "twisting function of a cubic form and properties (a)-(d)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--alpha", default="alpha_O")

    sp = add("checkform", cmd_checkform, "canonicalize a form or test a truth table for degree <= 3")
    sp.add_argument("--n", type=int)
    sp.add_argument("--alpha", default="alpha_O")
    sp.add_argument("--table", help="truth table as 2^n characters 0/1")

    sp = add("maxset", cmd_maxset, "exact maximum Hurwitzian set")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--alpha", default="alpha_O")
    sp.add_argument("--deterministic", action="store_true", help="lexicographically smallest witness")
    sp.add_argument("--max-n", type=int, default=sets.DEFAULT_MAX_N)
    sp.add_argument("--all-forms", action="store_true", help="run over every cubic form (n <= 4)")

    sp = add("construct", cmd_construct, "explicit Hurwitzian set")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--method", choices=("auto", "mod12", "mod3", "mod0", "hadamard"), default="auto")
    sp.add_argument("--hadamard", help="paleyQ, sylvesterK or a +/- matrix file")

    sp = add("hadamard", cmd_hadamard, "Hadamard matrix and its binary row sets")
    sp.add_argument("name", help="paleyQ, sylvesterK or a +/- matrix file")

    sp = add("identity", cmd_identity, "build and verify a sum-of-squares identity")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--alpha", default="alpha_O")
    sp.add_argument("--hadamard")
    sp.add_argument("--set", help="file with the vectors of A")
    sp.add_argument("--b", default="full", help="'full', 'construct' or a set file")
    sp.add_argument("--mutate", type=int, default=0, help="flip this many random signs")
    sp.add_argument("--emit", action="store_true", help="include the identity itself")

    sp = add("verify", cmd_verify, "verify an identity file (JSON or text)")
    sp.add_argument("file")
    sp.add_argument("--emit", action="store_true")

    sp = add("quadruples", cmd_quadruples, "additive-quadruple report")
    sp.add_argument("--n", type=int)
    sp.add_argument("--alpha", default="alpha_O")
    sp.add_argument("--a", default="construct")
    sp.add_argument("--b", default="full")
    sp.add_argument("--sweep", help="range of n such as 1-7; writes CSV")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ValueError, OSError) as exc:
        print(f"hurwitzian {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
