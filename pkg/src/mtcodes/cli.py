"""Command-line front end.

    mtcodes info SPEC
    mtcodes hnf SPEC [--raw]
    mtcodes dual SPEC [--steps]
    mtcodes galois SPEC --kappa K --side {right,left}
    mtcodes two-sided SPEC --kappa K [--tau T]
    mtcodes verify SPEC [--seed N]
    mtcodes distance SPEC [--cap N]

Every verb accepts --json. Exit codes: 0 ok, 1 unreadable input, 2 precondition
violated, 3 internal invariant failure (a bug).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from math import gcd

from . import oracle
from .duals import (
    PreconditionError,
    direct_sum_check,
    dual_report,
    euclidean_dual,
    galois_identities_check,
    left_galois_dual,
    matrix_json,
    parity_steps,
    right_galois_dual,
    sigma_intersection,
)
from .gf import FieldError
from .mtcode import InvariantError, MTCode, load_codespec
from .polymat import PolyMatrix, hermite_normal_form, trace_matrix

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_INVARIANT = 0, 1, 2, 3


class _ParseError(Exception):
    pass


class _ArgParser(argparse.ArgumentParser):
    # bad command lines count as parse errors, keeping exit 2 for preconditions
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _load(path: str):
    try:
        spec = load_codespec(path)
        return spec, spec.build()
    except (OSError, json.JSONDecodeError, FieldError, KeyError, TypeError) as exc:
        raise _ParseError(str(exc)) from exc
    except PreconditionError:
        raise
    except InvariantError:
        raise
    except ValueError as exc:
        raise _ParseError(str(exc)) from exc


def _field_line(c: MTCode) -> str:
    f = c.field
    mod = ",".join(str(a) for a in f.modulus)
    line = f"GF({f.q}) p={f.p} e={f.e} modulus=[{mod}]"
    if f.generator is not None:
        line += " generator=[" + ",".join(str(a) for a in f.to_coeffs(f.generator)) + "]"
    return line


def _block(title: str, m) -> str:
    return f"{title}:\n{m}"


def _header(c: MTCode) -> list[str]:
    return [
        f"field: {_field_line(c)}",
        "shifts: " + ", ".join(c.field.format(s) for s in c.shifts),
        "block_lengths: " + ", ".join(str(m) for m in c.block_lengths),
        f"n: {c.n}",
    ]


# -- verbs -------------------------------------------------------------------------


def cmd_info(args, spec, c):
    if args.json:
        return dual_report("info", c, companion=c.companion)
    lines = _header(c) + [f"dimension: {c.dimension()}", _block("gpm", c.gpm), _block("companion", c.companion)]
    return "\n".join(lines)


def cmd_hnf(args, spec, c):
    if args.raw:
        if not spec.rows:
            raise PreconditionError("no generator rows to reduce")
        m = PolyMatrix(c.field, spec.rows, c.ell)
        res = hermite_normal_form(m, transform=True)
        if args.json:
            return {"construction": "hnf", "rank": res.rank, "hnf": matrix_json(res.hnf), "transform": matrix_json(res.transform)}
        return "\n".join([f"rank: {res.rank}", _block("hnf", res.hnf), _block("transform", res.transform)])
    if args.json:
        return {"construction": "hnf", "gpm": matrix_json(c.gpm)}
    return str(c.gpm)


def cmd_dual(args, spec, c):
    steps = parity_steps(c)
    d = euclidean_dual(c, steps)
    if args.json:
        extra = {}
        if args.steps:
            extra = {"A(1/x)": steps.a_inv, "A*": steps.a_star, "A**": steps.a_2star, "H": steps.h}
        return dual_report("euclidean_dual", c, d, companion=d.companion, **extra)
    lines = []
    if args.steps:
        lines += [
            _block("A", c.companion),
            _block("A(1/x)", steps.a_inv),
            _block("A*", steps.a_star),
            _block("A**", steps.a_2star),
            _block("H", steps.h),
        ]
    lines += [
        "shifts: " + ", ".join(c.field.format(s) for s in d.shifts),
        f"dimension: {d.dimension()}",
        _block("reduced gpm", d.gpm),
        _block("companion", d.companion),
    ]
    return "\n".join(lines)


def cmd_galois(args, spec, c):
    fn = right_galois_dual if args.side == "right" else left_galois_dual
    d = fn(c, args.kappa)
    if args.json:
        return dual_report(f"{args.side}_galois_dual", c, d, kappa=args.kappa, companion=d.companion)
    lines = [
        f"{args.side} {args.kappa}-Galois dual",
        "shifts: " + ", ".join(c.field.format(s) for s in d.shifts),
        f"dimension: {d.dimension()}",
        _block("reduced gpm", d.gpm),
        _block("companion", d.companion),
    ]
    return "\n".join(lines)


def cmd_two_sided(args, spec, c):
    inter, cert = sigma_intersection(c, args.kappa, args.tau)
    tr_lhs = cert.x_matrix @ trace_matrix(cert.y_matrix, cert.upsilon)
    tr_rhs = trace_matrix(cert.b_image, cert.upsilon)
    trace_ok = tr_lhs == tr_rhs
    if args.json:
        return dual_report(
            "two_sided_galois_dual" if args.tau == 1 else "sigma_intersection",
            c,
            inter,
            kappa=args.kappa,
            tau=args.tau,
            certificate=cert,
            trace_rhs=tr_rhs,
            trace_equation=trace_ok,
        )
    lines = [
        f"kappa: {args.kappa}  tau: {args.tau}  upsilon: {cert.upsilon}",
        "shifts: " + ", ".join(c.field.format(s) for s in inter.shifts),
        f"dimension: {inter.dimension()}",
        _block("reduced gpm", inter.gpm),
        _block("X", cert.x_matrix),
        _block("Y", cert.y_matrix),
        _block("Tr(sigma^(e-kappa)(B))", tr_rhs),
        f"trace equation: {'holds' if trace_ok else 'FAILS'}",
    ]
    return "\n".join(lines)


def _verify_checks(c: MTCode, seed: int):
    """Yield (name, passed) for the oracle differential suite."""
    f, e = c.field, c.field.e
    c.check()
    E = oracle.expand(c)
    yield "expand rank = dimension", E.k == c.dimension()
    perp = euclidean_dual(c)
    yield "euclidean dual = nullspace", oracle.equal(oracle.nullspace_dual(E), oracle.expand(perp))
    yield "double dual", euclidean_dual(perp) == c
    rng = random.Random(seed)
    for kappa in range(e):
        right = right_galois_dual(c, kappa, perp)
        left = left_galois_dual(c, kappa, perp)
        Er, El = oracle.expand(right), oracle.expand(left)
        yield f"right {kappa}-dual = nullspace", oracle.equal(oracle.nullspace_dual(E, kappa, "right"), Er)
        yield f"left {kappa}-dual = nullspace", oracle.equal(oracle.nullspace_dual(E, kappa, "left"), El)
        ok = True
        for _ in range(20):
            a = _random_word(f, E, rng)
            b = _random_word(f, Er, rng)
            ok &= oracle.galois_product(f, a, b, kappa) == 0
        yield f"sampled <c, a>_{kappa} = 0", ok
        for name, passed in galois_identities_check(c, kappa).items():
            yield f"kappa={kappa} identity {name}", passed
        ups = gcd(e, 2 * kappa)
        if (4 * kappa) % e == 0 and all(f.in_subfield(s, ups) for s in c.shifts):
            inter, cert = sigma_intersection(c, kappa, 1)
            Ei = oracle.intersect(Er, El)
            yield f"two-sided {kappa}-dual = oracle intersection", oracle.equal(Ei, oracle.expand(inter))
            yield f"two-sided {kappa}-dual deg det X", cert.dimension() == Ei.k
            if 2 * c.dimension() == c.n:
                yield f"direct sum {kappa}", direct_sum_check(c, kappa) == oracle.direct_sum(Er, El)


def _random_word(f, E, rng):
    v = [0] * E.n
    for g in E.gen:
        a = rng.randrange(f.q)
        if a:
            v = [f.add(x, f.mul(a, y)) for x, y in zip(v, g)]
    return v


def cmd_verify(args, spec, c):
    results = list(_verify_checks(c, args.seed))
    failed = [name for name, ok in results if not ok]
    if args.json:
        out = {"construction": "verify", "checks": {name: ok for name, ok in results}, "passed": not failed}
    else:
        out = "\n".join(f"{'ok  ' if ok else 'FAIL'} {name}" for name, ok in results)
        out += f"\n{len(results) - len(failed)}/{len(results)} checks passed"
    return out, (EXIT_INVARIANT if failed else EXIT_OK)


def cmd_distance(args, spec, c):
    E = oracle.expand(c)
    try:
        d = oracle.min_distance(E, cap=args.cap)
    except ValueError as exc:
        raise PreconditionError(str(exc)) from exc
    if args.json:
        return {"construction": "min_distance", "n": c.n, "k": E.k, "d": d}
    return f"[n, k, d] = [{c.n}, {E.k}, {d}]"


VERBS = {
    "info": cmd_info,
    "hnf": cmd_hnf,
    "dual": cmd_dual,
    "galois": cmd_galois,
    "two-sided": cmd_two_sided,
    "verify": cmd_verify,
    "distance": cmd_distance,
}


def build_parser() -> argparse.ArgumentParser:
    common = _ArgParser(add_help=False)
    common.add_argument("spec", help="CodeSpec JSON file")
    common.add_argument("--json", action="store_true", help="emit a JSON report")

    ap = _ArgParser(prog="mtcodes", description="Multi-twisted codes and their duals.")
    sub = ap.add_subparsers(dest="verb", required=True)
    sub.add_parser("info", parents=[common], help="reduced GPM, companion and dimension")
    p = sub.add_parser("hnf", parents=[common], help="reduced GPM of the generator rows")
    p.add_argument("--raw", action="store_true", help="HNF of the rows alone, with transform")
    p = sub.add_parser("dual", parents=[common], help="Euclidean dual")
    p.add_argument("--steps", action="store_true", help="print A(1/x), A*, A** and H")
    p = sub.add_parser("galois", parents=[common], help="right or left Galois dual")
    p.add_argument("--kappa", type=int, required=True)
    p.add_argument("--side", choices=["right", "left"], default="right")
    p = sub.add_parser("two-sided", parents=[common], help="two-sided Galois dual with certificate")
    p.add_argument("--kappa", type=int, required=True)
    p.add_argument("--tau", type=int, default=1, help="intersect with sigma^(2 kappa tau) of the right dual")
    p = sub.add_parser("verify", parents=[common], help="oracle differential checks")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled pairing checks")
    p = sub.add_parser("distance", parents=[common], help="brute-force minimum distance")
    p.add_argument("--cap", type=int, default=2**24, help="maximum number of codewords q^k")
    return ap


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        spec, code = _load(args.spec)
        res = VERBS[args.verb](args, spec, code)
    except _ParseError as exc:
        print(f"error: cannot read {args.spec}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (InvariantError, ArithmeticError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    status = EXIT_OK
    if isinstance(res, tuple):
        res, status = res
    if isinstance(res, dict):
        res = json.dumps(res, indent=2)
    print(res, file=out)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
