"""Command line surface.

Each subcommand computes one table or report.  Output formats:

* json: a single object with sorted keys and a schema field, so
  identical invocations give byte-identical output
* csv: the same rows flattened, header line first
* text: the rows aligned for reading

--threads (default from HYPERCUBE_CODES_THREADS) only affects wall
time, never any number in the output.  Exit status: 0 on success, 1 on
bad input or an out-of-regime request, 2 when a computed value
disagrees with the bundled reference manifest or a requested
verification fails.
"""

import argparse
import csv
import decimal
import json
import os
import sys
from decimal import Decimal
from fractions import Fraction
from importlib import resources
from typing import Optional, Sequence

from . import __version__
from .basisprob import limit_constant, limit_interval, uniform_basis_probability
from .codes import (
    Code,
    RetryPolicy,
    best_residue_subcode,
    build_layer_vectors,
    layered_basis_code,
    load_code,
    residue_subcode,
    save_code,
    subcube_hitting_set,
    weight_class_code,
)
from .cube import (
    DEFAULT_SCAN_BUDGET,
    Subcube,
    max_code_search,
    max_subcube_count,
    verify_hitting,
)
from .errors import ConstructionError, OutOfRegimeError
from .extremal import (
    DEFAULT_WORK_BUDGET,
    basis_subset_bounds,
    list_size_bounds_table,
    max_basis_subsets,
    max_basis_subsets_any_k,
    max_partition_product_sum,
    partition_growth_check,
    product_partition_lower_bound,
)
from .gf2 import BitWord
from .hypergraph import UniformHypergraph, basis_hypergraph, lagrangian
from .hypergraph import linear_independence_density

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_MISMATCH = 2


def load_reference_manifest() -> dict:
    """The bundled regression manifest (exact reference values)."""
    path = resources.files("hypercube_codes").joinpath("reference_values.json")
    return json.loads(path.read_text(encoding="utf-8"))


def _default_threads() -> int:
    raw = os.environ.get("HYPERCUBE_CODES_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _decimal_places(x: Fraction, places: int = 12) -> str:
    with decimal.localcontext() as ctx:
        ctx.prec = places + 30
        value = Decimal(x.numerator) / Decimal(x.denominator)
        return str(value.quantize(Decimal(1).scaleb(-places),
                                  rounding=decimal.ROUND_HALF_EVEN))


def _fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _subcube_pattern(cube: Subcube) -> str:
    """Length-n string, * at free coordinates, 0/1 at fixed ones."""
    free = set(cube.free)
    return "".join("*" if i in free else str((cube.base >> i) & 1)
                   for i in range(cube.n))


def _emit(args, payload: dict, headers: Sequence[str],
          rows: Sequence[Sequence]) -> None:
    if args.format == "json":
        doc = dict(payload)
        doc["schema"] = SCHEMA_VERSION
        sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2))
        sys.stdout.write("\n")
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(list(headers))
        for row in rows:
            writer.writerow(["" if c is None else c for c in row])
    else:
        table = [list(map(str, headers))]
        table += [["" if c is None else str(c) for c in row] for row in rows]
        widths = [max(len(line[i]) for line in table)
                  for i in range(len(headers))]
        for line in table:
            out = "  ".join(line[i].ljust(widths[i])
                            for i in range(len(headers)))
            sys.stdout.write(out.rstrip() + "\n")


def _report_mismatches(mismatches: list) -> int:
    for text in mismatches:
        print(f"reference mismatch: {text}", file=sys.stderr)
    return EXIT_MISMATCH if mismatches else EXIT_OK


def cmd_constants(args) -> int:
    """Basis probability per draw count plus the certified limit."""
    t_max = args.t_max
    if not 1 <= t_max <= 40:
        raise ValueError("need 1 <= t-max <= 40")
    manifest = load_reference_manifest()
    expected = manifest.get("uniform_basis_probability", {})
    mismatches = []
    prob_rows = []
    for t in range(1, t_max + 1):
        p = uniform_basis_probability(t)
        prob_rows.append({"t": t, "numerator": p.numerator,
                          "denominator": p.denominator,
                          "decimal": _decimal_places(p)})
        if str(t) in expected:
            num, den = expected[str(t)]
            if Fraction(num, den) != p:
                mismatches.append(f"basis probability at t={t}: "
                                  f"computed {_fraction_str(p)}, manifest {num}/{den}")
    lower, upper = limit_interval(t_max)
    two_digits = str(limit_constant(2))
    expected_2dp = manifest.get("basis_probability_limit_2dp")
    if expected_2dp is not None and expected_2dp != two_digits:
        mismatches.append(f"limit to 2 digits: computed {two_digits}, "
                          f"manifest {expected_2dp}")
    payload = {
        "command": "constants",
        "t_max": t_max,
        "probabilities": prob_rows,
        "limit": {
            "interval_at": t_max,
            "lower_decimal": _decimal_places(lower),
            "upper_decimal": _decimal_places(upper),
            "width_decimal": _decimal_places(upper - lower),
            "two_digit_rounding": two_digits,
        },
    }
    headers = ["quantity", "numerator", "denominator", "decimal"]
    rows = [[f"basis_probability({r['t']})", r["numerator"],
             r["denominator"], r["decimal"]] for r in prob_rows]
    rows.append([f"limit_lower_bound({t_max})", None, None,
                 _decimal_places(lower)])
    rows.append([f"limit_upper_bound({t_max})", None, None,
                 _decimal_places(upper)])
    _emit(args, payload, headers, rows)
    return _report_mismatches(mismatches)


def cmd_bounds_table(args) -> int:
    """Bounds on the maximum erasure list size per subcube dimension."""
    table = list_size_bounds_table(args.d_max)
    manifest = load_reference_manifest()
    mismatches = []

    def check(name: str, d: int, computed: Optional[int]) -> None:
        ref = manifest.get(name, {}).get(str(d))
        if ref is not None and computed is not None and ref != computed:
            mismatches.append(f"{name} at d={d}: computed {computed}, "
                              f"manifest {ref}")

    rows_payload = []
    for row in table:
        check("product_partition_lower", row.d, row.product_partition_lower)
        check("partition_sum_lower", row.d, row.partition_sum_lower)
        check("construction_upper", row.d, row.construction_upper)
        if row.construction_upper is not None \
                and row.construction_upper == row.partition_sum_lower:
            check("list_size_exact", row.d, row.construction_upper)
        rows_payload.append({
            "d": row.d,
            "product_partition_lower": row.product_partition_lower,
            "partition_sum_lower": row.partition_sum_lower,
            "construction_upper": row.construction_upper,
        })
    payload = {"command": "bounds-table", "d_max": args.d_max,
               "rows": rows_payload}
    headers = ["d", "product_partition_lower", "partition_sum_lower",
               "construction_upper"]
    rows = [[r["d"], r["product_partition_lower"], r["partition_sum_lower"],
             r["construction_upper"]] for r in rows_payload]
    _emit(args, payload, headers, rows)
    return _report_mismatches(mismatches)


def cmd_basis_subsets(args) -> int:
    """Maximum number of basis-forming column subsets, with bounds."""
    result = max_basis_subsets(args.k, args.d, work_budget=args.budget)
    bounds = basis_subset_bounds(args.k, args.d, work_budget=args.budget)
    witness = [BitWord(c, args.k).to01() for c in result.witness.columns]
    payload = {
        "command": "basis-subsets",
        "k": args.k,
        "d": args.d,
        "value": result.value,
        "witness_columns": witness,
        "random_lower": bounds.random_lower,
        "monotone_upper": bounds.monotone_upper,
        "dense_upper": bounds.dense_upper,
        "deletion_upper": bounds.deletion_upper,
    }
    headers = ["quantity", "value"]
    rows = [
        ["k", args.k],
        ["d", args.d],
        ["maximum", result.value],
        ["witness_columns", " ".join(witness)],
        ["random_lower", bounds.random_lower],
        ["monotone_upper", bounds.monotone_upper],
        ["dense_upper", bounds.dense_upper],
        ["deletion_upper", bounds.deletion_upper],
    ]
    _emit(args, payload, headers, rows)
    return EXIT_OK


def cmd_partition_max(args) -> int:
    """Partition maximum of the sum of products with one part omitted."""
    result = max_partition_product_sum(args.d)
    lower = product_partition_lower_bound(args.d)
    payload = {
        "command": "partition-max",
        "d": args.d,
        "value": result.value,
        "parts": list(result.parts),
        "product_partition_lower": lower,
    }
    headers = ["quantity", "value"]
    rows = [
        ["d", args.d],
        ["maximum", result.value],
        ["parts", " ".join(str(p) for p in result.parts)],
        ["product_partition_lower", lower],
    ]
    if args.d % 3 == 0 and args.d >= 3:
        growth = partition_growth_check(args.d)
        payload["closed_form"] = _fraction_str(growth.closed_form)
        payload["meets_closed_form"] = growth.meets_closed_form
        payload["all_threes_value"] = growth.all_threes_value
        payload["all_threes_attains"] = growth.all_threes_attains
        rows.append(["closed_form", _fraction_str(growth.closed_form)])
        rows.append(["meets_closed_form", growth.meets_closed_form])
        rows.append(["all_threes_value", growth.all_threes_value])
        rows.append(["all_threes_attains", growth.all_threes_attains])
    _emit(args, payload, headers, rows)
    return EXIT_OK


def _construct_code(args) -> tuple:
    """Build the requested code; returns (code, residue, extras)."""
    if args.construction == "layered":
        layers = build_layer_vectors(args.n, seed=args.seed)
        policy = RetryPolicy(strict=args.strict)
        code = layered_basis_code(layers, retry=policy)
        extras = {"construction": "layered", "seed": args.seed,
                  "size_before_residue": len(code)}
        residue = None
        if args.modulus:
            if args.modulus < 2:
                raise ValueError("modulus must be at least 2")
            if args.residue is not None:
                code = residue_subcode(code, args.modulus, args.residue)
                residue = args.residue
            else:
                selection = best_residue_subcode(code, args.modulus)
                code = selection.code
                residue = selection.residue
        return code, residue, extras
    if not args.modulus or args.modulus < 2:
        raise ValueError("weight-class construction needs --modulus >= 2")
    residue = args.residue if args.residue is not None else 0
    code = weight_class_code(args.n, args.modulus, residue)
    extras = {"construction": "weight-class", "seed": args.seed,
              "size_before_residue": len(code)}
    return code, residue, extras


def _code_summary_rows(code: Code, residue, extras: dict,
                       modulus: Optional[int]) -> list:
    rows = [
        ["n", code.n],
        ["construction", extras["construction"]],
        ["seed", extras["seed"]],
        ["modulus", modulus if modulus else None],
        ["residue", residue],
        ["size", len(code)],
        ["density", _fraction_str(code.density())],
        ["density_float", float(code.density())],
    ]
    return rows


def cmd_build(args) -> int:
    """Construct a code and optionally write it to a file."""
    code, residue, extras = _construct_code(args)
    if args.out:
        save_code(args.out, code)
    payload = {
        "command": "build",
        "n": code.n,
        "modulus": args.modulus if args.modulus else None,
        "residue": residue,
        "size": len(code),
        "density": _fraction_str(code.density()),
        "density_float": float(code.density()),
        **extras,
    }
    if args.out:
        payload["out"] = args.out
    _emit(args, payload, ["quantity", "value"],
          _code_summary_rows(code, residue, extras, args.modulus))
    return EXIT_OK


def cmd_load(args) -> int:
    """Read a code file and report its size and density."""
    code = load_code(args.in_path)
    payload = {
        "command": "load",
        "in": args.in_path,
        "n": code.n,
        "size": len(code),
        "density": _fraction_str(code.density()),
        "density_float": float(code.density()),
    }
    rows = [
        ["n", code.n],
        ["size", len(code)],
        ["density", _fraction_str(code.density())],
        ["density_float", float(code.density())],
    ]
    _emit(args, payload, ["quantity", "value"], rows)
    return EXIT_OK


def cmd_save(args) -> int:
    """Rewrite a code file in canonical sorted form."""
    code = load_code(args.in_path)
    save_code(args.out, code)
    payload = {
        "command": "save",
        "in": args.in_path,
        "out": args.out,
        "n": code.n,
        "size": len(code),
    }
    rows = [["n", code.n], ["size", len(code)], ["out", args.out]]
    _emit(args, payload, ["quantity", "value"], rows)
    return EXIT_OK


def cmd_build_verify(args) -> int:
    """Construct a code and scan every d-subcube for its occupancy."""
    code, residue, extras = _construct_code(args)
    report = max_subcube_count(code, args.d, threads=args.threads,
                               budget=args.budget)
    if args.out:
        save_code(args.out, code)
    construction_upper = None
    if args.d <= 8:
        construction_upper = max_basis_subsets_any_k(args.d).value
    within_upper = (None if construction_upper is None
                    else report.max_count <= construction_upper)
    ok = None
    if args.list_size is not None:
        ok = report.max_count <= args.list_size
    payload = {
        "command": "build-verify",
        "n": code.n,
        "d": args.d,
        "modulus": args.modulus if args.modulus else None,
        "residue": residue,
        "size": len(code),
        "density": _fraction_str(code.density()),
        "density_float": float(code.density()),
        "max_count": report.max_count,
        "subcubes_at_max": report.histogram[report.max_count],
        "witness": _subcube_pattern(report.witness),
        "construction_upper": construction_upper,
        "within_construction_upper": within_upper,
        **extras,
    }
    if args.list_size is not None:
        payload["list_size"] = args.list_size
        payload["within_list_size"] = ok
    rows = _code_summary_rows(code, residue, extras, args.modulus)
    rows += [
        ["d", args.d],
        ["max_count", report.max_count],
        ["subcubes_at_max", report.histogram[report.max_count]],
        ["witness", _subcube_pattern(report.witness)],
        ["construction_upper", construction_upper],
        ["within_construction_upper", within_upper],
    ]
    if args.list_size is not None:
        rows.append(["within_list_size", ok])
    _emit(args, payload, ["quantity", "value"], rows)
    if ok is False:
        print(f"verification failed: max_count {report.max_count} exceeds "
              f"list size {args.list_size}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_verify(args) -> int:
    """Scan a code file for the maximum occupancy of a d-subcube."""
    code = load_code(args.in_path)
    report = max_subcube_count(code, args.d, threads=args.threads,
                               budget=args.budget)
    ok = None
    if args.list_size is not None:
        ok = report.max_count <= args.list_size
    payload = {
        "command": "verify",
        "in": args.in_path,
        "n": code.n,
        "d": args.d,
        "size": len(code),
        "max_count": report.max_count,
        "subcubes_at_max": report.histogram[report.max_count],
        "witness": _subcube_pattern(report.witness),
    }
    rows = [
        ["n", code.n],
        ["size", len(code)],
        ["d", args.d],
        ["max_count", report.max_count],
        ["subcubes_at_max", report.histogram[report.max_count]],
        ["witness", _subcube_pattern(report.witness)],
    ]
    if args.list_size is not None:
        payload["list_size"] = args.list_size
        payload["within_list_size"] = ok
        rows.append(["within_list_size", ok])
    _emit(args, payload, ["quantity", "value"], rows)
    if ok is False:
        print(f"verification failed: max_count {report.max_count} exceeds "
              f"list size {args.list_size}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_search_max_code(args) -> int:
    """Exact maximum code size under a per-subcube word limit."""
    result = max_code_search(args.n, args.d, args.list_size,
                             node_budget=args.budget)
    words = sorted(BitWord(w, args.n).to01() for w in result.witness.words)
    payload = {
        "command": "search-max-code",
        "n": args.n,
        "d": args.d,
        "list_size": args.list_size,
        "max_size": result.max_size,
        "certified": result.certified,
        "witness": words,
    }
    rows = [
        ["n", args.n],
        ["d", args.d],
        ["list_size", args.list_size],
        ["max_size", result.max_size],
        ["certified", result.certified],
        ["witness", " ".join(words)],
    ]
    _emit(args, payload, ["quantity", "value"], rows)
    return EXIT_OK


def _load_hypergraph(path) -> UniformHypergraph:
    """Read a hypergraph file: first line `r=<int> n=<int>`, then one
    edge per line as space-separated 0-based vertex indices."""
    with open(path, "r", encoding="utf-8") as handle:
        lines = handle.read().splitlines()
    if not lines:
        raise ValueError("line 1: empty hypergraph file")
    head = lines[0].split()
    if len(head) != 2 or not head[0].startswith("r=") \
            or not head[1].startswith("n="):
        raise ValueError("line 1: expected `r=<int> n=<int>`")
    try:
        r = int(head[0][2:])
        n = int(head[1][2:])
    except ValueError:
        raise ValueError("line 1: expected `r=<int> n=<int>`") from None
    edges = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        try:
            vertices = tuple(sorted(int(tok) for tok in line.split()))
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer vertex") from None
        if len(vertices) != r or len(set(vertices)) != r:
            raise ValueError(f"line {lineno}: expected {r} distinct vertices")
        if vertices and not 0 <= vertices[0] <= vertices[-1] < n:
            raise ValueError(f"line {lineno}: vertex out of range")
        edges.append(vertices)
    return UniformHypergraph(r, n, frozenset(edges))


def cmd_lagrangian(args) -> int:
    """Lagrangian of a hypergraph (built-in basis family or a file)."""
    if (args.t is None) == (args.in_path is None):
        raise ValueError("give exactly one of --t and --in")
    if args.t is not None:
        graph = basis_hypergraph(args.t)
        source = f"basis_hypergraph({args.t})"
    else:
        graph = _load_hypergraph(args.in_path)
        source = args.in_path
    result = lagrangian(graph, restarts=args.restarts, seed=args.seed)
    payload = {
        "command": "lagrangian",
        "source": source,
        "r": graph.r,
        "n_vertices": graph.n_vertices,
        "edge_count": graph.edge_count(),
        "value": result.value,
        "point": list(result.point),
        "restarts_used": result.restarts_used,
    }
    rows = [
        ["source", source],
        ["r", graph.r],
        ["n_vertices", graph.n_vertices],
        ["edge_count", graph.edge_count()],
        ["value", f"{result.value:.12g}"],
        ["point", " ".join(f"{x:.6f}" for x in result.point)],
        ["restarts_used", result.restarts_used],
    ]
    _emit(args, payload, ["quantity", "value"], rows)
    return EXIT_OK


def cmd_density(args) -> int:
    """Exact edge density of the linear-independence hypergraph."""
    value = linear_independence_density(args.r, args.k)
    threshold = 1 - Fraction(1, 1 << args.k)
    payload = {
        "command": "density",
        "r": args.r,
        "k": args.k,
        "density": _fraction_str(value),
        "density_float": float(value),
        "threshold": _fraction_str(threshold),
        "exceeds_threshold": value > threshold,
    }
    rows = [
        ["r", args.r],
        ["k", args.k],
        ["density", _fraction_str(value)],
        ["density_float", float(value)],
        ["threshold", _fraction_str(threshold)],
        ["exceeds_threshold", value > threshold],
    ]
    _emit(args, payload, ["quantity", "value"], rows)
    return EXIT_OK


def cmd_hitting(args) -> int:
    """Build a small set meeting subcubes; optionally verify coverage."""
    result = subcube_hitting_set(args.n, args.k, seed=args.seed)
    code = result.code
    if args.out:
        save_code(args.out, code)
    payload = {
        "command": "hitting",
        "n": args.n,
        "k": args.k,
        "seed": args.seed,
        "size": len(code),
        "target_size": result.target_size,
        "met_target": result.met_target,
        "small_layer_cutoff": result.small_layer_cutoff,
        "density_float": float(code.density()),
    }
    rows = [
        ["n", args.n],
        ["k", args.k],
        ["seed", args.seed],
        ["size", len(code)],
        ["target_size", result.target_size],
        ["met_target", result.met_target],
        ["small_layer_cutoff", result.small_layer_cutoff],
        ["density_float", float(code.density())],
    ]
    failed = False
    if args.d is not None:
        report = verify_hitting(code, args.d, budget=args.budget)
        payload["d"] = args.d
        payload["hits_all"] = report.hits_all
        payload["missed"] = (None if report.missed is None
                             else _subcube_pattern(report.missed))
        rows.append(["d", args.d])
        rows.append(["hits_all", report.hits_all])
        rows.append(["missed", payload["missed"]])
        failed = not report.hits_all
    _emit(args, payload, ["quantity", "value"], rows)
    if failed:
        print(f"verification failed: some {args.d}-subcube is missed",
              file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypercube-codes",
        description="Construct, verify and bound binary codes with "
                    "few words in every subcube.")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json", "csv"),
                     default="text", help="output format (default text)")

    threads = argparse.ArgumentParser(add_help=False)
    threads.add_argument("--threads", type=int, default=_default_threads(),
                         help="worker threads for subcube scans; never "
                              "changes the numbers")

    build_flags = argparse.ArgumentParser(add_help=False)
    build_flags.add_argument("--n", type=int, required=True,
                             help="number of coordinates")
    build_flags.add_argument("--seed", type=int, default=0,
                             help="construction seed (default 0)")
    build_flags.add_argument("--construction",
                             choices=("layered", "weight-class"),
                             default="layered")
    build_flags.add_argument("--modulus", type=int, default=0,
                             help="weight modulus; 0 keeps the whole code")
    build_flags.add_argument("--residue", type=int, default=None,
                             help="weight residue; default picks the "
                                  "largest residue class")
    build_flags.add_argument("--strict", action="store_true",
                             help="fail instead of keeping deficient layers")

    p = sub.add_parser("constants", parents=[fmt],
                       help="basis probabilities and their limit")
    p.add_argument("--t-max", type=int, default=8)
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("bounds-table", parents=[fmt],
                       help="lower and upper bounds on the maximum "
                            "erasure list size")
    p.add_argument("--d-max", type=int, default=8)
    p.set_defaults(func=cmd_bounds_table)

    p = sub.add_parser("basis-subsets", parents=[fmt],
                       help="maximum number of basis-forming column "
                            "subsets of a k x d matrix")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_WORK_BUDGET,
                   help="work budget for the exact search")
    p.set_defaults(func=cmd_basis_subsets)

    p = sub.add_parser("partition-max", parents=[fmt],
                       help="partition maximum of the sum of products "
                            "with one part left out")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_partition_max)

    p = sub.add_parser("build", parents=[fmt, build_flags],
                       help="construct a code; --out writes it")
    p.add_argument("--out", default=None, help="write the code here")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("load", parents=[fmt],
                       help="read a code file and summarize it")
    p.add_argument("--in", dest="in_path", required=True)
    p.set_defaults(func=cmd_load)

    p = sub.add_parser("save", parents=[fmt],
                       help="rewrite a code file in canonical form")
    p.add_argument("--in", dest="in_path", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_save)

    p = sub.add_parser("build-verify", parents=[fmt, threads, build_flags],
                       help="construct a code and scan all d-subcubes")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_SCAN_BUDGET,
                   help="max number of subcubes to scan")
    p.add_argument("--list-size", type=int, default=None,
                   help="exit 2 if some d-subcube holds more words")
    p.add_argument("--out", default=None, help="write the code here")
    p.set_defaults(func=cmd_build_verify)

    p = sub.add_parser("verify", parents=[fmt, threads],
                       help="scan a code file for d-subcube occupancy")
    p.add_argument("--in", dest="in_path", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_SCAN_BUDGET)
    p.add_argument("--list-size", type=int, default=None,
                   help="exit 2 if some d-subcube holds more words")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search-max-code", parents=[fmt],
                       help="exact maximum code size with at most "
                            "list-size words per d-subcube")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--list-size", type=int, required=True)
    p.add_argument("--budget", type=int, default=2_000_000,
                   help="search node budget")
    p.set_defaults(func=cmd_search_max_code)

    p = sub.add_parser("lagrangian", parents=[fmt],
                       help="hypergraph Lagrangian by multiplicative ascent")
    p.add_argument("--t", type=int, default=None,
                   help="use the built-in basis hypergraph on 2^t - 1 "
                        "vertices")
    p.add_argument("--in", dest="in_path", default=None,
                   help="read a hypergraph file instead")
    p.add_argument("--restarts", type=int, default=64)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_lagrangian)

    p = sub.add_parser("density", parents=[fmt],
                       help="edge density of the linear-independence "
                            "hypergraph")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("hitting", parents=[fmt],
                       help="small set meeting subcubes of codimension k")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--d", type=int, default=None,
                   help="also verify that every d-subcube is met")
    p.add_argument("--budget", type=int, default=DEFAULT_SCAN_BUDGET)
    p.add_argument("--out", default=None, help="write the set here")
    p.set_defaults(func=cmd_hitting)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OutOfRegimeError, ConstructionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
