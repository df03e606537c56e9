"""Command-line surface: enumeration, identity checks, theorem verification
and sweeps.

Exit codes: 0 all checks pass, 1 a verified statement failed, 2 input or
config error, 3 a resource cap was hit.  Structured output is a stream of
line-delimited JSON records followed by one summary record; with a fixed
seed the stream is byte-identical across runs.  The environment variable
RESTRICTEDSUMS_OUT_DIR redirects relative report paths.
"""

import argparse
import json
import os
import sys

from . import bounds, engine, polys
from .domain import IntegerLattice, PrimeField
from .errors import InputError, ResourceCapExceeded

OUT_DIR_ENV = "RESTRICTEDSUMS_OUT_DIR"

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_CAP = 3


# ---------------------------------------------------------------------------
# literal and range parsing


def parse_element(text: str, domain):
    text = text.strip()
    if text.startswith("("):
        if not text.endswith(")"):
            raise InputError(f"unbalanced tuple literal {text!r}")
        coords = [c.strip() for c in text[1:-1].split(",") if c.strip()]
        try:
            return domain.validate(tuple(int(c) for c in coords))
        except ValueError as exc:
            raise InputError(f"bad tuple literal {text!r}") from exc
    try:
        value = int(text)
    except ValueError as exc:
        raise InputError(f"bad element literal {text!r}") from exc
    return domain.validate(value)


def _split_set_items(body: str):
    # split on commas that are not inside a (...) tuple
    items, depth, cur = [], 0, []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            items.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if cur:
        items.append("".join(cur))
    return [s for s in (i.strip() for i in items) if s]


def parse_family(text: str, domain):
    """Parse `{0,1,4};{2,3}` literals; `{0,1}x5` repeats a slot five times."""
    sets = []
    for raw_slot in text.split(";"):
        slot = raw_slot.strip()
        if not slot:
            raise InputError("empty family slot")
        repeat = 1
        if "}" in slot and not slot.endswith("}"):
            body, _, suffix = slot.rpartition("}")
            slot = body + "}"
            suffix = suffix.strip()
            if not suffix.startswith("x"):
                raise InputError(f"bad slot suffix {suffix!r}")
            try:
                repeat = int(suffix[1:])
            except ValueError as exc:
                raise InputError(f"bad repetition count {suffix!r}") from exc
            if repeat < 1:
                raise InputError("repetition count must be positive")
        if not (slot.startswith("{") and slot.endswith("}")):
            raise InputError(f"set literal must look like {{0,1,4}}, got {raw_slot!r}")
        elems = [parse_element(item, domain) for item in _split_set_items(slot[1:-1])]
        if not elems:
            raise InputError(f"empty set literal {raw_slot!r}")
        sets.extend([elems] * repeat)
    return engine.SetFamily(domain, sets)


def parse_int_list(text: str) -> tuple:
    """Accepts `5`, `2,3,5` and inclusive ranges `2:6`."""
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if ":" in chunk:
            lo, _, hi = chunk.partition(":")
            try:
                lo, hi = int(lo), int(hi)
            except ValueError as exc:
                raise InputError(f"bad range {chunk!r}") from exc
            out.extend(range(lo, hi + 1))
        else:
            try:
                out.append(int(chunk))
            except ValueError as exc:
                raise InputError(f"bad integer {chunk!r}") from exc
    return tuple(out)


def parse_window(text: str) -> tuple:
    values = parse_int_list(text)
    if len(values) < 2:
        raise InputError(f"window needs lo:hi, got {text!r}")
    return (min(values), max(values))


def _domain_from_args(args):
    if args.zp and args.integers:
        raise InputError("choose one of --zp and --int")
    if args.zp:
        primes = parse_int_list(args.zp)
        return [PrimeField(p) for p in primes]
    if args.integers:
        return [IntegerLattice(args.dim)]
    raise InputError("a domain is required: --zp <p> or --int")


def _resolve_out(path):
    if path in (None, "-"):
        return None
    base = os.environ.get(OUT_DIR_ENV)
    if base and not os.path.isabs(path):
        return os.path.join(base, path)
    return path


def _dump(record) -> str:
    return json.dumps(record, separators=(",", ":"), sort_keys=False)


# ---------------------------------------------------------------------------
# subcommands


def cmd_enumerate(args) -> int:
    domains = _domain_from_args(args)
    if len(domains) != 1:
        raise InputError("enumerate needs a single domain")
    domain = domains[0]
    family = parse_family(args.family, domain)
    result = engine.sumset(family, args.kind)
    if args.oracle:
        check = engine.brute_force_oracle(family, args.kind, cap=args.cap)
        if check.elements != result.elements:
            print("MISMATCH between dynamic program and oracle", file=sys.stderr)
            return EXIT_VIOLATION
    if args.format == "jsonl":
        print(_dump({"record": "sumset", "domain": domain.name, "kind": args.kind,
                     "family": [list(a) for a in family.members],
                     "cardinality": result.cardinality,
                     "elements": [list(e) if isinstance(e, tuple) else e
                                  for e in result.elements]}))
    else:
        shown = ", ".join(domain.format_element(e) for e in result.elements)
        print(f"domain={domain.name} kind={args.kind} cardinality={result.cardinality}")
        print(f"elements: [{shown}]")
    return EXIT_OK


def _identity_lines(args):
    """Yield (ok, label) pairs for every configured identity instance."""
    for n in range(2, args.max_even + 1, 2):
        got = polys.falling_factorial_transform(polys.cycle_polynomial(n))
        want = polys.UniPoly.monomial(2, n // 2)
        yield got == want, f"cycle-transform n={n}: {got}"
    for n in range(3, args.max_odd + 1, 2):
        got = polys.falling_factorial_transform(polys.path_polynomial(n))
        want = polys.UniPoly.monomial(1, (n - 1) // 2)
        yield got == want, f"path-transform n={n}: {got}"
    for n in parse_int_list(args.recursion):
        yield polys.cycle_path_recursion_holds(n), f"cycle-path-recursion n={n}"
    kmax = args.max_k
    for k1 in range(1, kmax + 1):
        for k2 in range(1, kmax + 1):
            for k3 in range(1, kmax + 1):
                closed = polys.path3_coefficient(k1, k2, k3)
                extracted = polys.coeff_of_product_with_linear_power(
                    polys.path_polynomial(3), (k1, k2, k3))
                yield closed == extracted, f"path3-coefficient k=({k1},{k2},{k3})"
    for n in range(2, args.max_n + 1, 2):
        for k in range(1, kmax + 1):
            closed = polys.even_cycle_coefficient(n, k)
            extracted = polys.coeff_of_product_with_linear_power(
                polys.cycle_polynomial(n), (k,) * n)
            yield closed == extracted, f"even-cycle-coefficient n={n} k={k}"
    for n in range(3, args.max_n + 1, 2):
        for k in range(1, kmax + 1):
            closed = polys.odd_path_coefficient(n, k)
            extracted = polys.coeff_of_product_with_linear_power(
                polys.path_polynomial(n), (k,) * n)
            yield closed == extracted, f"odd-path-coefficient n={n} k={k}"


def cmd_identities(args) -> int:
    failures = 0
    total = 0
    for ok, label in _identity_lines(args):
        total += 1
        print(("PASS " if ok else "FAIL ") + label)
        failures += not ok
    print(f"identities: {total - failures}/{total} passed")
    return EXIT_OK if failures == 0 else EXIT_VIOLATION


def _sweep_config(args, check) -> bounds.SweepConfig:
    domains = _domain_from_args(args)
    if isinstance(domains[0], PrimeField):
        domain_tag = "zp"
        primes = tuple(d.p for d in domains)
    else:
        domain_tag = "int"
        primes = ()
        if domains[0].dim != 1:
            raise InputError("sweeps over Z^r run with --dim 1")
    kinds = tuple(args.kind.split(",")) if args.kind else ("linear", "cyclic")
    for kind in kinds:
        if kind not in ("linear", "cyclic"):
            raise InputError(f"sweep kinds are linear/cyclic, got {kind!r}")
    return bounds.SweepConfig(
        check=check,
        domain=domain_tag,
        primes=primes,
        kinds=kinds,
        n_values=parse_int_list(args.n) if args.n else (2, 3),
        sizes=parse_int_list(args.sizes) if args.sizes else (2, 3),
        window=parse_window(args.window) if args.window else (0, 9),
        cell_cap=args.cap,
        sample_size=args.sample,
        seed=args.seed,
    )


def _write_records(out_path, fmt):
    """Returns (sink, finish) writing reports and then the summary."""
    if out_path is None:
        handle = sys.stdout
        close = False
    else:
        handle = open(out_path, "w", encoding="utf-8")
        close = True

    def sink(report):
        if fmt == "jsonl":
            handle.write(_dump(report.record()) + "\n")
        else:
            rec = report.record()
            handle.write(
                f"{rec['verdict']:10s} {rec['check']} {rec['domain']} "
                f"kind={rec['kind']} bound={rec['bound']} actual={rec['actual']} "
                f"family={rec['family']}\n")

    def finish(summary):
        if fmt == "jsonl":
            handle.write(_dump(summary.record()) + "\n")
        else:
            handle.write(f"summary: {dict(sorted(summary.verdicts.items()))}\n")
        if close:
            handle.close()

    return sink, finish


def cmd_verify(args) -> int:
    config = _sweep_config(args, args.check)
    out_path = _resolve_out(args.out)
    printed = []

    def sink(report):
        if report.verdict in ("violated", "skipped") or args.verbose:
            printed.append(report)

    summary = bounds.run_sweep(config, sink=sink)
    fmt = args.format
    for report in printed[:200]:
        rec = report.record()
        if fmt == "jsonl":
            print(_dump(rec))
        else:
            reason = f" ({rec['reason']})" if rec.get("reason") else ""
            print(f"{rec['verdict']:10s} {rec['check']} {rec['domain']} "
                  f"kind={rec['kind']} bound={rec['bound']} "
                  f"actual={rec['actual']} family={rec['family']}{reason}")
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(_dump(summary.record()) + "\n")
    print(f"check={config.check} instances={summary.instances} "
          f"verdicts={dict(sorted(summary.verdicts.items()))} "
          f"elapsed={summary.elapsed:.2f}s")
    return EXIT_OK if summary.violation_count == 0 else EXIT_VIOLATION


def cmd_sweep(args) -> int:
    config = _sweep_config(args, args.check)
    out_path = _resolve_out(args.out)
    sink, finish = _write_records(out_path, args.format)
    summary = bounds.run_sweep(config, sink=sink)
    finish(summary)
    target = out_path if out_path else "stdout"
    print(f"check={config.check} instances={summary.instances} "
          f"verdicts={dict(sorted(summary.verdicts.items()))} report={target}",
          file=sys.stderr if out_path is None else sys.stdout)
    return EXIT_OK if summary.violation_count == 0 else EXIT_VIOLATION


# ---------------------------------------------------------------------------
# parser assembly


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="restrictedsums",
        description="Exact restricted-sumset computation and verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--zp", metavar="P", help="prime modulus (comma list allowed)")
    shared.add_argument("--int", dest="integers", action="store_true",
                        help="integer lattice domain")
    shared.add_argument("--dim", type=int, default=1, help="lattice dimension")

    knobs = argparse.ArgumentParser(add_help=False)
    knobs.add_argument("--n", help="summand count(s): 3 or 2,4 or 2:6")
    knobs.add_argument("--sizes", help="set size(s): 2,3 or 2:5")
    knobs.add_argument("--window", help="integer window lo:hi")
    knobs.add_argument("--kind", help="sumset kind(s), comma separated")
    knobs.add_argument("--seed", type=int, default=20240601)
    knobs.add_argument("--cap", type=int, default=200_000,
                       help="per-cell exhaustive enumeration cap")
    knobs.add_argument("--sample", type=int, default=10_000,
                       help="sample size for capped cells")
    knobs.add_argument("--out", help="report path (relative paths honor "
                                     f"${OUT_DIR_ENV})")
    knobs.add_argument("--format", choices=("text", "jsonl"), default="text")

    p_enum = sub.add_parser("enumerate", parents=[shared],
                            help="compute one sumset for an explicit family")
    p_enum.add_argument("family", help='set literals: "{0,1,4};{2,3}" or "{0,1}x3"')
    p_enum.add_argument("--kind", choices=engine.KINDS, default="plain")
    p_enum.add_argument("--oracle", action="store_true",
                        help="cross-check against brute-force enumeration")
    p_enum.add_argument("--cap", type=int, default=engine.DEFAULT_ORACLE_CAP)
    p_enum.add_argument("--format", choices=("text", "jsonl"), default="text")
    p_enum.set_defaults(func=cmd_enumerate)

    p_ident = sub.add_parser("identities",
                             help="verify transform and closed-form identities")
    p_ident.add_argument("--max-even", type=int, default=12)
    p_ident.add_argument("--max-odd", type=int, default=11)
    p_ident.add_argument("--max-n", type=int, default=8)
    p_ident.add_argument("--max-k", type=int, default=5)
    p_ident.add_argument("--recursion", default="5,7,9")
    p_ident.set_defaults(func=cmd_identities)

    p_verify = sub.add_parser("verify", parents=[shared, knobs],
                              help="verify one theorem over a range of instances")
    p_verify.add_argument("--check", required=True, choices=bounds.SWEEP_CHECKS)
    p_verify.add_argument("--verbose", action="store_true",
                          help="print every instance, not just failures")
    p_verify.set_defaults(func=cmd_verify)

    p_sweep = sub.add_parser("sweep", parents=[shared, knobs],
                             help="run a bound sweep and write a report")
    p_sweep.add_argument("--check", default="conjecture", choices=bounds.SWEEP_CHECKS)
    p_sweep.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceCapExceeded as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
