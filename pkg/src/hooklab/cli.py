"""Command-line front end: ``hooklab verify|expand|bijection ...``.

Exit codes: 0 pass, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from functools import partial
from math import factorial
from fractions import Fraction

from .cores import (
    CoreError,
    delta_profile,
    dd_to_pair,
    gks_phi,
    gks_phi_inv,
    gks_weight,
    make_pair,
    pair_to_dd,
    phi1,
    phi2,
    sc_weight_vector,
    dd_weight_vector,
    varphi,
    varphi_inv,
    varphi_weight,
)
from .hooks import (
    CompactSet,
    compact_lemma_check,
    compact_ops,
    genfunc_pair,
    no_product,
    no_rhs,
    pair_rhs,
    random_compact_set,
    symplectic_hook_sum,
    typeC_product,
    typeC_rhs,
)
from .macdonald import lattice_spec, macdonald_series, verify_macdonald
from .partitions import PartitionError, durfee, make_partition, principal_hooks
from .series import eta_power, format_series, poly_identity_check, power_product

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _default_order(fallback: int = 10) -> int:
    raw = os.environ.get("HOOKLAB_ORDER_DEFAULT")
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"HOOKLAB_ORDER_DEFAULT must be an integer, got {raw!r}")


def _int_list(text: str) -> list[int]:
    text = "".join(text.split()).strip("()")
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}")


def _partition(text: str):
    try:
        return make_partition(_int_list(text))
    except PartitionError as exc:
        raise UsageError(f"invalid partition: {exc}")


def _vec(v) -> str:
    return "(" + ",".join(map(str, v)) + ")"


class Report:
    """Checks accumulated by one command; serialised as a single JSON document."""

    def __init__(self, command: str):
        self.command = command
        self.checks: list[dict] = []
        self.status = "pass"

    def check(self, name: str, expected, actual) -> bool:
        equal = expected == actual
        self.checks.append({"name": name, "expected": str(expected), "actual": str(actual), "equal": equal})
        if not equal:
            self.status = "fail"
        return equal

    def to_json(self, runtime_ms: int) -> str:
        doc = {"command": self.command, "status": self.status, "checks": self.checks, "runtime_ms": runtime_ms}
        return json.dumps(doc, indent=2)


# --- verify -----------------------------------------------------------------

def _verify_no(args, rep: Report) -> None:
    res = poly_identity_check(partial(no_product, order=args.order), partial(no_rhs, order=args.order),
                              args.order, lambda m: m, jobs=args.jobs)
    rep.check(f"Nekrasov-Okounkov polynomial identity in z to order {args.order}", "identity", _identity(res))


def _identity(res) -> str:
    return "identity" if res.ok else str(res)


def _verify_type_c(args, rep: Report) -> None:
    res = poly_identity_check(partial(typeC_product, order=args.order), partial(typeC_rhs, order=args.order),
                              args.order, lambda m: 2 * m, jobs=args.jobs)
    rep.check(f"type C hook expansion polynomial identity in t to order {args.order}", "identity", _identity(res))


def _verify_pair(args, rep: Report) -> None:
    t, n = args.t, args.order
    lhs = pair_rhs(t, n)
    rep.check(f"pair sum = prod (1-x^k)^{2 * t * t + t}", format_series(power_product(2 * t * t + t, n)), format_series(lhs))
    rep.check("pair sum = doubled distinct hook sum", format_series(typeC_rhs(t, n)), format_series(lhs))


def _verify_macdonald(args, rep: Report) -> None:
    try:
        spec = lattice_spec(args.family, args.t)
    except ValueError as exc:
        raise UsageError(str(exc))
    res = verify_macdonald(args.family, args.t, args.order)
    lhs = macdonald_series(args.family, args.t, args.order)
    rep.check(f"type {args.family} t={args.t}: lattice sum ({res.terms} vectors) = eta^{spec.eta_exponent}",
              format_series(eta_power(spec.eta_exponent, args.order)), format_series(lhs))


def _verify_hook_formula(args, rep: Report) -> None:
    if args.n < 1:
        raise UsageError("--n must be positive")
    rep.check(f"sum over doubled distinct partitions of {2 * args.n}",
              Fraction(1, 2 ** args.n * factorial(args.n)), symplectic_hook_sum(args.n))


def _verify_genfunc(args, rep: Report) -> None:
    if args.t_plus_1 < 1:
        raise UsageError("--t-plus-1 must be >= 1")
    rep.check(f"core pairs for modulus {args.t_plus_1}: enumeration = product",
              format_series(genfunc_pair(args.t_plus_1, args.order, "product")),
              format_series(genfunc_pair(args.t_plus_1, args.order, "enumerate")))


def _verify_compact(args, rep: Report) -> None:
    if args.t < 1:
        raise UsageError("--t must be >= 1")
    if args.set is not None:
        elements = frozenset(_int_list(args.set))
        if not compact_ops(elements, args.t)[0]:
            raise UsageError(f"not a {2 * args.t + 2}-compact set")
        sets = [CompactSet(args.t, elements)]
    else:
        rng = random.Random(args.seed)
        sets = [random_compact_set(rng, args.t) for _ in range(args.count)]
    for k, A in enumerate(sets):
        _, lhs, rhs = compact_lemma_check(A)
        rep.check(f"compact set #{k} ({len(A.elements)} elements)", lhs, rhs)


VERIFY = {
    "no": _verify_no,
    "type-c": _verify_type_c,
    "pair": _verify_pair,
    "macdonald": _verify_macdonald,
    "hook-formula": _verify_hook_formula,
    "genfunc": _verify_genfunc,
    "compact-lemma": _verify_compact,
}


# --- expand -------------------------------------------------------------------

def _expand(args):
    n = args.order
    if args.expr == "eta-power":
        return eta_power(args.e, n)
    if args.expr == "no-rhs":
        return no_rhs(args.z, n)
    if args.expr == "type-c-rhs":
        return typeC_rhs(args.t, n)
    try:
        return macdonald_series(args.family, args.t, n)
    except ValueError as exc:
        raise UsageError(str(exc))


# --- bijection ------------------------------------------------------------------

def _bijection(args, out) -> int:
    which = args.which
    if which in ("gks", "phi1", "phi2"):
        p = _partition(_need(args.partition, "--partition"))
        t = _need(args.t, "--t")
        fn = {"gks": gks_phi, "phi1": phi1, "phi2": phi2}[which]
        v = fn(p, t)
        print(_vec(v), file=out)
        if which == "gks":
            law = gks_weight(v.entries)
        else:
            coef = sc_weight_vector(t) if which == "phi1" else dd_weight_vector(t)
            law = t * sum(x * x for x in v) + sum(c * x for c, x in zip(coef, v))
        print(f"weight {p.weight} = {law}: {p.weight == law}", file=out)
        return EXIT_PASS if p.weight == law else EXIT_FAIL
    if which == "gks-inv":
        v = _int_list(_need(args.vector, "--vector"))
        p = gks_phi_inv(v)
        print(p, file=out)
        print(f"weight {p.weight} = {gks_weight(v)}: {p.weight == gks_weight(v)}", file=out)
        return EXIT_PASS
    if which in ("varphi", "pair-to-dd"):
        lam = _partition(_need(args.lam, "--lambda"))
        mu = _partition(_need(args.mu, "--mu"))
        t = args.t
        pair = make_pair(lam, mu, None if t is None else t + 1)
        if which == "pair-to-dd":
            nu = pair_to_dd(pair)
            print(nu, file=out)
            print(f"principal hooks {principal_hooks(nu)}; |nu| = {nu.weight} = 2*{pair.weight}; "
                  f"delta_nu = {durfee(nu)[1]}", file=out)
            return EXIT_PASS
        _need(t, "--t")
        n = varphi(pair, t)
        print(_vec(n), file=out)
        return _delta_table(pair, n.entries, t, out)
    if which == "varphi-inv":
        v = _int_list(_need(args.vector, "--vector"))
        t = len(v) if args.t is None else args.t
        pair = varphi_inv(v, t)
        print(f"lambda={pair.lam} mu={pair.mu}", file=out)
        return _delta_table(pair, v, t, out)
    if which == "dd-to-pair":
        pair = dd_to_pair(_partition(_need(args.partition, "--partition")))
        print(f"lambda={pair.lam} mu={pair.mu}", file=out)
        return EXIT_PASS
    raise UsageError(f"unknown bijection {which!r}")


def _delta_table(pair, n, t, out) -> int:
    law = varphi_weight(n)
    ok = pair.weight == law
    print(f"weight {pair.weight} = {law}: {ok}", file=out)
    prof = delta_profile(pair, t)
    print("i\tn_i\tDelta_i\tt+1+Delta_i\tsigma_i((2t+2)n_i+i)\tholds", file=out)
    for i, x in enumerate(n, start=1):
        s = 1 if x >= 0 else -1
        left, right = t + 1 + prof.delta_i[i], s * ((2 * t + 2) * x + i)
        ok &= left == right
        print(f"{i}\t{x}\t{prof.delta_i[i]}\t{left}\t{right}\t{left == right}", file=out)
    return EXIT_PASS if ok else EXIT_FAIL


def _need(value, flag: str):
    if value is None:
        raise UsageError(f"{flag} is required")
    return value


# --- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hooklab", description="Exact checks of hook-length expansions of eta powers.")
    sub = parser.add_subparsers(dest="command", required=True)

    ver = sub.add_parser("verify", help="run an identity check and print a JSON report")
    ver.add_argument("target", choices=sorted(VERIFY))
    ver.add_argument("--order", type=int)
    ver.add_argument("--t", type=int)
    ver.add_argument("--t-plus-1", type=int, dest="t_plus_1")
    ver.add_argument("--family", choices=["A", "B", "C", "BC"])
    ver.add_argument("--n", type=int)
    ver.add_argument("--set", help="explicit compact set, comma separated")
    ver.add_argument("--count", type=int, default=500)
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--jobs", type=int, default=1)
    ver.add_argument("--timing", action="store_true", help="report wall-clock runtime (otherwise 0)")

    exp = sub.add_parser("expand", help="print a truncated series")
    exp.add_argument("expr", choices=["eta-power", "no-rhs", "type-c-rhs", "macdonald"])
    exp.add_argument("--order", type=int)
    exp.add_argument("--e", type=int)
    exp.add_argument("--z", type=int)
    exp.add_argument("--t", type=int)
    exp.add_argument("--family", choices=["A", "B", "C", "BC"])
    exp.add_argument("--format", choices=["text", "json"], default="text")

    bij = sub.add_parser("bijection", help="apply one of the core bijections")
    bij.add_argument("which", choices=["gks", "gks-inv", "phi1", "phi2", "varphi", "varphi-inv", "pair-to-dd", "dd-to-pair"])
    bij.add_argument("--partition")
    bij.add_argument("--lambda", dest="lam")
    bij.add_argument("--mu")
    bij.add_argument("--vector")
    bij.add_argument("--t", type=int)
    return parser


_REQUIRED = {
    "pair": ["t"],
    "macdonald": ["family", "t"],
    "hook-formula": ["n"],
    "genfunc": ["t_plus_1"],
    "compact-lemma": ["t"],
}


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if getattr(args, "order", None) is None:
            args.order = _default_order()
        if args.order is not None and args.order < 0:
            raise UsageError("--order must be non-negative")
        if args.command == "verify":
            for name in _REQUIRED.get(args.target, []):
                _need(getattr(args, name), "--" + name.replace("_", "-"))
            start = time.perf_counter()
            rep = Report(f"verify {args.target}")
            VERIFY[args.target](args, rep)
            ms = int((time.perf_counter() - start) * 1000) if args.timing else 0
            print(rep.to_json(ms), file=out)
            return EXIT_PASS if rep.status == "pass" else EXIT_FAIL
        if args.command == "expand":
            needs = {"eta-power": ["e"], "no-rhs": ["z"], "type-c-rhs": ["t"], "macdonald": ["family", "t"]}
            for name in needs[args.expr]:
                _need(getattr(args, name), "--" + name)
            s = _expand(args)
            if args.format == "json":
                doc = {"offset": str(s.offset), "order": s.order, "coefficients": [str(c) for c in s.coeffs]}
                print(json.dumps(doc), file=out)
            else:
                out.write(format_series(s))
            return EXIT_PASS
        return _bijection(args, out)
    except (UsageError, CoreError, PartitionError) as exc:
        print(f"hooklab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
