"""Command line front end.

Every subcommand reads a ring (--ring takes a spec file path or a bundled
corpus label), emits either an aligned table or --json (a single document
with a "schema" tag and a "timestamp"; identical argv and seed give
byte-identical JSON apart from the timestamp), and exits 0 on
pass/success, 1 on a failed check, 2 on usage errors, 3 when a resource
cap aborted the computation.
"""

from __future__ import annotations

import argparse
import datetime
import json
import os
import sys

from .algebra import AlgebraError, ParseError, Polynomial
from .corpus import (
    RingSpecError,
    corpus_labels,
    corpus_spec,
    corpus_specs,
    load_corpus_ring,
    load_ring_spec,
    ring_from_spec,
)
from .filterreg import (
    is_filter_regular_sequence,
    is_system_of_parameters,
    make_sequence,
    random_filter_regular_sop,
)
from .frobenius import (
    frobenius_closure,
    frobenius_power,
    fte_of_ideal,
    fte_scan,
    qpower_preimage,
)
from .groebner import (
    GBConfig,
    QuotientRing,
    ResourceCapExceeded,
    colon,
    dimension,
    ideal,
    saturation,
)
from .localcoh import hsl_estimate, ns_consistency_check, prop34_check, verify_inequality
from .seeding import derive_seed

EXIT_OK = 0
EXIT_CHECK = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _timestamp() -> str:
    return datetime.datetime.now(datetime.timezone.utc).isoformat()


def _emit(args, name: str, payload: dict, lines: list[str]) -> None:
    if args.json:
        doc = {"schema": f"frobex/{name}/1", "timestamp": _timestamp()}
        doc.update(payload)
        print(json.dumps(doc, indent=2))
    else:
        for line in lines:
            print(line)


def _emit_error(args, exc: Exception, code: int) -> None:
    if getattr(args, "json", False):
        doc = {
            "schema": "frobex/error/1",
            "timestamp": _timestamp(),
            "error": {"type": type(exc).__name__, "message": str(exc)},
            "exit_code": code,
        }
        print(json.dumps(doc, indent=2))
    else:
        print(f"error: {exc}", file=sys.stderr)


def _rows(header: list[str], body: list[list[str]]) -> list[str]:
    """Aligned plain-text table."""
    table = [header] + body
    widths = [max(len(row[c]) for row in table) for c in range(len(header))]
    out = []
    for r, row in enumerate(table):
        out.append("  ".join(cell.ljust(widths[c]) for c, cell in enumerate(row)).rstrip())
        if r == 0:
            out.append("  ".join("-" * widths[c] for c in range(len(header))))
    return out


def _gb_config(args) -> GBConfig:
    return GBConfig(max_pairs=args.max_pairs, max_degree=args.max_degree)


def _load_ring(args, config: GBConfig) -> QuotientRing:
    spec = args.ring
    if spec is None:
        raise RingSpecError("this command needs --ring (a spec file or corpus label)")
    if os.path.exists(spec):
        return load_ring_spec(spec, config)
    if spec in corpus_labels():
        return load_corpus_ring(spec, config)
    raise RingSpecError(
        f"{spec!r} is neither a readable file nor a corpus label "
        f"(bundled: {', '.join(corpus_labels())})")


def _parse_polys(R: QuotientRing, text: str) -> list[Polynomial]:
    parts = [s.strip() for s in text.split(",") if s.strip()]
    return [R.parse(s) for s in parts]


def _require_jobs(args) -> int:
    return args.jobs if args.jobs > 0 else (os.cpu_count() or 1)


# ---------------------------------------------------------------------------
# subcommands


def cmd_gb(args) -> int:
    config = _gb_config(args)
    R = _load_ring(args, config)
    I = ideal(R, _parse_polys(R, args.ideal), config=config)
    gens = [str(g) for g in I.groebner_basis(config)]
    stats = I.gb_stats
    payload = {"ring_label": R.label, "generators": gens,
               "stats": stats.to_dict(include_time=False)}
    lines = ["reduced Groebner basis (with ring relations):"]
    lines += [f"  {g}" for g in gens]
    lines.append(f"pairs={stats.pairs_processed} zero_reductions={stats.zero_reductions} "
                 f"max_degree={stats.max_degree_seen} size={stats.basis_size} "
                 f"time={stats.wall_seconds:.3f}s")
    _emit(args, "gb", payload, lines)
    return EXIT_OK


def cmd_nf(args) -> int:
    config = _gb_config(args)
    R = _load_ring(args, config)
    I = ideal(R, _parse_polys(R, args.ideal), config=config)
    f = R.parse(args.poly)
    w = I.normal_form(f, config)
    payload = {"ring_label": R.label, "poly": str(f), "normal_form": str(w),
               "is_member": not w.terms}
    _emit(args, "nf", payload, [f"normal form: {w}"])
    return EXIT_OK


def cmd_dim(args) -> int:
    config = _gb_config(args)
    R = _load_ring(args, config)
    gens = _parse_polys(R, args.ideal) if args.ideal else []
    d = dimension(ideal(R, gens, config=config), config)
    payload = {"ring_label": R.label, "ideal": [str(g) for g in gens], "dimension": d}
    _emit(args, "dim", payload, [f"dimension = {d}"])
    return EXIT_OK


def cmd_colon(args) -> int:
    config = _gb_config(args)
    R = _load_ring(args, config)
    I = ideal(R, _parse_polys(R, args.ideal), config=config)
    K = ideal(R, _parse_polys(R, args.by), config=config)
    Q = colon(I, K, config)
    gens = [str(g) for g in Q.groebner_basis(config)]
    payload = {"ring_label": R.label, "generators": gens}
    _emit(args, "colon", payload, ["colon ideal:"] + [f"  {g}" for g in gens])
    return EXIT_OK


def cmd_sat(args) -> int:
    config = _gb_config(args)
    R = _load_ring(args, config)
    I = ideal(R, _parse_polys(R, args.ideal), config=config)
    K = ideal(R, _parse_polys(R, args.by), config=config) if args.by else R.maximal_ideal()
    S, steps = saturation(I, K, config=config)
    gens = [str(g) for g in S.groebner_basis(config)]
    payload = {"ring_label": R.label, "generators": gens, "exponent": steps}
    _emit(args, "sat", payload,
          ["saturation:"] + [f"  {g}" for g in gens] + [f"stabilized after {steps} colon steps"])
    return EXIT_OK


def cmd_filter_check(args) -> int:
    config = _gb_config(args)
    R = _load_ring(args, config)
    elements = _parse_polys(R, args.elements)
    seq = make_sequence(R, elements)
    ok, bad = is_filter_regular_sequence(seq, config)
    sop = is_system_of_parameters(R, elements, config)
    payload = {"ring_label": R.label, "elements": [str(f) for f in elements],
               "filter_regular": ok, "first_failure": bad,
               "system_of_parameters": sop}
    verdict = "pass" if ok else f"fail at position {bad}"
    _emit(args, "filter-check", payload,
          [f"filter regular: {verdict}", f"system of parameters: {sop}"])
    return EXIT_OK if ok else EXIT_CHECK


def cmd_sop_random(args) -> int:
    config = _gb_config(args)
    R = _load_ring(args, config)
    seq = random_filter_regular_sop(R, args.seed, config=config)
    payload = {"ring_label": R.label, "seed": args.seed,
               "elements": seq.element_strings()}
    _emit(args, "sop-random", payload,
          ["filter regular system of parameters:"] +
          [f"  {s}" for s in seq.element_strings()])
    return EXIT_OK


def cmd_frobenius_power(args) -> int:
    config = _gb_config(args)
    R = _load_ring(args, config)
    I = ideal(R, _parse_polys(R, args.ideal), config=config)
    P = frobenius_power(I, args.e)
    gens = [str(g) for g in P.own_gens]
    payload = {"ring_label": R.label, "e": args.e, "generators": gens}
    _emit(args, "frobenius-power", payload,
          [f"bracket power, e = {args.e}:"] + [f"  {g}" for g in gens])
    return EXIT_OK


def cmd_frobenius_preimage(args) -> int:
    config = _gb_config(args)
    R = _load_ring(args, config)
    K = ideal(R, _parse_polys(R, args.ideal), config=config)
    P = qpower_preimage(K, args.e, config)
    gens = [str(g) for g in P.groebner_basis(config)]
    payload = {"ring_label": R.label, "e": args.e, "generators": gens}
    _emit(args, "frobenius-preimage", payload,
          [f"q-power preimage, e = {args.e}:"] + [f"  {g}" for g in gens])
    return EXIT_OK


def cmd_frobenius_closure(args) -> int:
    config = _gb_config(args)
    R = _load_ring(args, config)
    I = ideal(R, _parse_polys(R, args.ideal), config=config)
    result = frobenius_closure(I, args.emax, args.window, config)
    payload = {"ring_label": R.label, **result.to_dict()}
    gens = [str(g) for g in result.closure.groebner_basis(config)]
    lines = ["Frobenius closure:"] + [f"  {g}" for g in gens]
    lines.append(f"stabilized_at={result.stabilized_at} certified={result.certified} "
                 f"stable={result.stable}")
    _emit(args, "frobenius-closure", payload, lines)
    return EXIT_OK


def cmd_frobenius_fte(args) -> int:
    config = _gb_config(args)
    R = _load_ring(args, config)
    I = ideal(R, _parse_polys(R, args.ideal), config=config)
    result = frobenius_closure(I, args.emax, args.window, config)
    fte = fte_of_ideal(I, result.closure, args.emax, config)
    payload = {"ring_label": R.label, "ideal": [str(g) for g in I.own_gens],
               "fte": fte, "closure": result.to_dict()}
    _emit(args, "frobenius-fte", payload,
          [f"Fte = {fte}" if fte is not None else "Fte not determined within e_max"])
    return EXIT_OK if fte is not None else EXIT_CHECK


def cmd_fte_scan(args) -> int:
    config = _gb_config(args)
    R = _load_ring(args, config)
    report = fte_scan(R, n_random=args.samples, seed=args.seed, e_max=args.emax,
                      window=args.window, jobs=_require_jobs(args), config=config)
    payload = report.to_dict()
    body = []
    for s in report.samples:
        body.append([s.kind, json.dumps(s.descriptor), str(s.fte),
                     "yes" if s.nontrivial else "no", s.error or ""])
    lines = _rows(["kind", "descriptor", "fte", "nontrivial", "error"], body)
    lines.append(f"max_fte = {report.max_fte}")
    _emit(args, "fte-scan", payload, lines)
    return EXIT_OK if report.max_fte is not None else EXIT_CHECK


def cmd_hsl(args) -> int:
    config = _gb_config(args)
    R = _load_ring(args, config)
    if args.sequence:
        seq = make_sequence(R, _parse_polys(R, args.sequence))
        ok, bad = is_filter_regular_sequence(seq, config)
        if not ok:
            raise AlgebraError(f"--sequence is not filter regular at position {bad}")
    else:
        seq = random_filter_regular_sop(R, derive_seed(args.seed, "hsl-sop"),
                                        config=config)
    report = hsl_estimate(R, seq, N=args.trunc, e_max=args.emax,
                          jobs=_require_jobs(args), config=config)
    payload = {
        "ring_label": report.ring_label,
        "per_i": {str(i): v for i, v in report.per_index.items()},
        "overall": report.overall,
        "stable": report.stable,
        "params": {
            "seed": args.seed,
            "N": report.N,
            "e_max": report.e_max,
            "probe_N": report.probe_N,
            "probe_e_max": report.probe_e_max,
            "sequence": report.sequence,
            "fingerprint": report.fingerprint,
            "per_i_stable": {str(i): v for i, v in report.per_index_stable.items()},
            "witnesses": {str(i): [w.to_dict() for w in ws]
                          for i, ws in report.witnesses.items()},
            "undetermined": {str(i): v for i, v in report.undetermined.items()},
        },
    }
    body = [[str(i), str(report.per_index[i]),
             "yes" if report.per_index_stable[i] else "no"]
            for i in sorted(report.per_index)]
    lines = _rows(["i", "order", "stable"], body)
    lines.append(f"HSL = {report.overall} ({'stable' if report.stable else 'unstable'})")
    _emit(args, "hsl", payload, lines)
    return EXIT_OK


def cmd_ns_check(args) -> int:
    config = _gb_config(args)
    R = _load_ring(args, config)
    seq_a = random_filter_regular_sop(R, derive_seed(args.seed, "ns", 0), config=config)
    seq_b = random_filter_regular_sop(R, derive_seed(args.seed, "ns", 1), config=config)
    report = ns_consistency_check(R, seq_a, seq_b, N=args.trunc, config=config)
    payload = report.to_dict()
    body = []
    for i in sorted(report.tables):
        body.append([str(i), str(report.tables[i]["a"]), str(report.tables[i]["b"]),
                     str(report.stabilized.get(i))])
    lines = _rows(["i", "lengths (seq a)", "lengths (seq b)", "stabilized"], body)
    lines.append(f"status: {report.status}")
    if report.first_disagreement:
        lines.append(f"first disagreement: {report.first_disagreement}")
    _emit(args, "ns-check", payload, lines)
    return EXIT_OK if report.status == "pass" else EXIT_CHECK


def cmd_prop34_check(args) -> int:
    config = _gb_config(args)
    R = _load_ring(args, config)
    report = prop34_check(R, _parse_polys(R, args.prefix), n=args.n, e=args.e,
                          N=args.trunc, e_max=args.emax, config=config)
    payload = report.to_dict()
    lines = [f"forward (closure classes nilpotent of order <= {args.e}): "
             f"{'pass' if report.forward_ok else 'fail'}"]
    lines += [f"  {entry}" for entry in report.forward]
    lines.append(f"backward (nilpotent witnesses lie in the closure): "
                 f"{'pass' if report.backward_ok else 'fail'}")
    lines += [f"  {entry}" for entry in report.backward]
    _emit(args, "prop34-check", payload, lines)
    return EXIT_OK if report.ok else EXIT_CHECK


def cmd_verify_inequality(args) -> int:
    config = _gb_config(args)
    R = _load_ring(args, config)
    jobs = _require_jobs(args)
    scan = fte_scan(R, n_random=args.samples, seed=args.seed, e_max=args.emax,
                    window=args.window, jobs=jobs, config=config)
    base_seq = make_sequence(R, scan.base_sop)
    ok, bad = is_filter_regular_sequence(base_seq, config)
    if not ok:
        raise AlgebraError(f"scan base sequence failed re-verification at {bad}")
    hsl = hsl_estimate(R, base_seq, N=args.trunc, e_max=args.emax, jobs=jobs,
                       config=config)
    report = verify_inequality(R, scan, hsl, config)
    payload = {**report.to_dict(), "scan": scan.to_dict(), "hsl": hsl.to_dict()}
    lines = [f"max Fte over samples: {report.max_fte}",
             f"HSL estimate:         {report.hsl_overall}",
             f"inequality holds:     {report.holds}",
             f"mechanism check:      {'pass' if report.mechanism_ok else 'fail'}",
             f"status: {report.status}"]
    for note in report.notes:
        lines.append(f"note: {note}")
    _emit(args, "verify-inequality", payload, lines)
    return EXIT_OK if report.status == "pass" else EXIT_CHECK


def cmd_corpus(args) -> int:
    if args.label:
        spec = corpus_spec(args.label)
        payload = {"spec": spec}
        lines = [json.dumps(spec, indent=2)]
        _emit(args, "corpus-show", payload, lines)
        return EXIT_OK
    specs = corpus_specs()
    entries = []
    body = []
    for spec in specs:
        R = ring_from_spec(spec)
        entries.append({"label": spec["label"], "characteristic": spec["characteristic"],
                        "variables": spec["variables"], "relations": spec["relations"],
                        "dimension": R.dim})
        body.append([spec["label"], str(spec["characteristic"]),
                     " ".join(spec["variables"]), str(len(spec["relations"])),
                     str(R.dim)])
    payload = {"entries": entries}
    _emit(args, "corpus", payload,
          _rows(["label", "p", "variables", "relations", "dim"], body))
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser wiring


def _common() -> argparse.ArgumentParser:
    c = argparse.ArgumentParser(add_help=False)
    c.add_argument("--ring", metavar="PATH_OR_LABEL",
                   help="ring spec file or bundled corpus label")
    c.add_argument("--json", action="store_true", help="emit a single JSON document")
    c.add_argument("--seed", type=int, default=42)
    c.add_argument("--trunc", type=int, default=8, metavar="N",
                   help="limit-system truncation level")
    c.add_argument("--emax", type=int, default=8, metavar="E",
                   help="Frobenius chain depth bound")
    c.add_argument("--window", type=int, default=2, metavar="W",
                   help="stabilization window for closure chains")
    c.add_argument("--samples", type=int, default=5, metavar="K",
                   help="random parameter ideals per scan")
    c.add_argument("--jobs", type=int, default=0, metavar="J",
                   help="worker processes (0 = all cores)")
    c.add_argument("--max-pairs", type=int, default=50_000)
    c.add_argument("--max-degree", type=int, default=120)
    return c


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="frobex",
        description="Frobenius closures, test exponents, and HSL numbers "
                    "for rings of prime characteristic.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("gb", parents=[common], help="reduced Groebner basis")
    sp.add_argument("--ideal", required=True, help="comma-separated generators")
    sp.set_defaults(func=cmd_gb)

    sp = sub.add_parser("nf", parents=[common], help="normal form of a polynomial")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--poly", required=True)
    sp.set_defaults(func=cmd_nf)

    sp = sub.add_parser("dim", parents=[common], help="Krull dimension of R/I")
    sp.add_argument("--ideal", default="", help="defaults to the zero ideal")
    sp.set_defaults(func=cmd_dim)

    sp = sub.add_parser("colon", parents=[common], help="ideal colon (I : K)")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--by", required=True)
    sp.set_defaults(func=cmd_colon)

    sp = sub.add_parser("sat", parents=[common], help="saturation (I : K^inf)")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--by", default="", help="defaults to the maximal ideal")
    sp.set_defaults(func=cmd_sat)

    sp = sub.add_parser("filter-check", parents=[common],
                        help="test a sequence for filter regularity")
    sp.add_argument("--elements", required=True)
    sp.set_defaults(func=cmd_filter_check)

    sp = sub.add_parser("sop-random", parents=[common],
                        help="random filter regular system of parameters")
    sp.set_defaults(func=cmd_sop_random)

    fr = sub.add_parser("frobenius", help="Frobenius powers, preimages, closures")
    frsub = fr.add_subparsers(dest="action", required=True)
    sp = frsub.add_parser("power", parents=[common], help="bracket power I^[p^e]")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--e", type=int, default=1)
    sp.set_defaults(func=cmd_frobenius_power)
    sp = frsub.add_parser("preimage", parents=[common],
                          help="q-power preimage {x : x^q in K}")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--e", type=int, default=1)
    sp.set_defaults(func=cmd_frobenius_preimage)
    sp = frsub.add_parser("closure", parents=[common], help="Frobenius closure I^F")
    sp.add_argument("--ideal", required=True)
    sp.set_defaults(func=cmd_frobenius_closure)
    sp = frsub.add_parser("fte", parents=[common],
                          help="Frobenius test exponent of an ideal")
    sp.add_argument("--ideal", required=True)
    sp.set_defaults(func=cmd_frobenius_fte)

    # top-level shorthand for the most common query
    sp = sub.add_parser("fte", parents=[common],
                        help="shorthand for 'frobenius fte'")
    sp.add_argument("--ideal", required=True)
    sp.set_defaults(func=cmd_frobenius_fte)

    sp = sub.add_parser("fte-scan", parents=[common],
                        help="closure/test-exponent scan over parameter ideals")
    sp.set_defaults(func=cmd_fte_scan)

    sp = sub.add_parser("hsl", parents=[common], help="HSL numbers per degree")
    sp.add_argument("--sequence", default="",
                    help="filter regular system of parameters (default: random)")
    sp.set_defaults(func=cmd_hsl)

    sp = sub.add_parser("ns-check", parents=[common],
                        help="two-seed limit-tower consistency check")
    sp.set_defaults(func=cmd_ns_check)

    sp = sub.add_parser("prop34-check", parents=[common],
                        help="closure/nilpotence correspondence check")
    sp.add_argument("--prefix", required=True,
                    help="comma-separated filter regular prefix")
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--e", type=int, default=1)
    sp.set_defaults(func=cmd_prop34_check)

    sp = sub.add_parser("verify-inequality", parents=[common],
                        help="compare sampled Fte bound against the HSL estimate")
    sp.set_defaults(func=cmd_verify_inequality)

    sp = sub.add_parser("corpus", parents=[common], help="bundled example rings")
    sp.add_argument("label", nargs="?", help="print one spec instead of the list")
    sp.set_defaults(func=cmd_corpus)

    return parser


def _validate_run_config(args) -> None:
    checks = [("--trunc", getattr(args, "trunc", 1), 1),
              ("--emax", getattr(args, "emax", 1), 0),
              ("--window", getattr(args, "window", 1), 1),
              ("--samples", getattr(args, "samples", 0), 0),
              ("--jobs", getattr(args, "jobs", 0), 0),
              ("--max-pairs", getattr(args, "max_pairs", 1), 1),
              ("--max-degree", getattr(args, "max_degree", 1), 1)]
    for flag, value, lo in checks:
        if value < lo:
            raise RingSpecError(f"{flag} must be >= {lo}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        _validate_run_config(args)
        return args.func(args)
    except ResourceCapExceeded as exc:
        _emit_error(args, exc, EXIT_RESOURCE)
        return EXIT_RESOURCE
    except (RingSpecError, ParseError) as exc:
        _emit_error(args, exc, EXIT_USAGE)
        return EXIT_USAGE
    except AlgebraError as exc:
        _emit_error(args, exc, EXIT_CHECK)
        return EXIT_CHECK


if __name__ == "__main__":
    sys.exit(main())
