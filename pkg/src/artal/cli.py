"""Command-line front end.

Exit codes: 0 success, 2 usage error (argparse), 3 unparsable subset or
rational, 4 size k out of range, 5 singular cubic, 6 certificate failed
verification, 7 internal consistency check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .cyclotomic import format_rational, parse_rational
from .enumeration import census, format_table, proposition_table
from .invariants import profile
from .realization import LabelingError, NotSmoothError, arrangement_to_json, realize
from .symmetry import orbit_sizes
from .torsion import PointSubset, collinear_triple_count
from .zariski import (
    ZariskiCertificate,
    certificates_from_document,
    classify,
    default_mus,
    scan,
    verify_certificate,
)

EXIT_OK = 0
EXIT_PARSE = 3
EXIT_RANGE = 4
EXIT_SINGULAR = 5
EXIT_VERIFY = 6
EXIT_INTERNAL = 7

COMMANDS = ("table", "classify", "orbits", "invariants", "realize", "zariski-scan", "zariski-verify")


class ParseError(ValueError):
    pass


class RangeError(ValueError):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def parse_subset(text: str) -> PointSubset:
    try:
        return PointSubset.parse(text)
    except ValueError as e:
        raise ParseError(str(e)) from None


def parse_mus(tokens: Sequence[str] | None) -> list[Fraction]:
    if not tokens:
        return default_mus()
    out = []
    for tok in tokens:
        for part in tok.split(","):
            if part.strip():
                try:
                    out.append(parse_rational(part))
                except ValueError as e:
                    raise ParseError(str(e)) from None
    return out


def _check_k(k: int, lo: int = 0, hi: int = 9) -> int:
    if not lo <= k <= hi:
        raise RangeError(f"k must lie in {lo}..{hi}, got {k}")
    return k


def cmd_table(args) -> tuple[str, int]:
    rows = proposition_table()
    if args.format == "json":
        return _dump([r.to_json() for r in rows]), EXIT_OK
    return format_table(rows), EXIT_OK


def cmd_classify(args) -> tuple[str, int]:
    s = parse_subset(args.subset)
    _check_k(len(s), 3, 9)
    t = classify(s)
    if args.format == "json":
        return _dump({"subset": str(s), **t.to_json()}), EXIT_OK
    return f"{s}  k={t.k}  n={t.n}  {t.tag.value}", EXIT_OK


def cmd_orbits(args) -> tuple[str, int]:
    ks = [_check_k(args.k)] if args.k is not None else list(range(10))
    report = []
    for k in ks:
        reps = [
            {"representative": str(rep), "size": size, "n": collinear_triple_count(rep)}
            for rep, size in orbit_sizes(k).items()
        ]
        report.append({"k": k, "orbits": reps, "census": census(k).to_json()["distribution"]})
    if args.format == "json":
        return _dump(report), EXIT_OK
    lines = []
    for entry in report:
        lines.append(f"k={entry['k']}: {len(entry['orbits'])} orbit(s)")
        for o in entry["orbits"]:
            lines.append(f"  {o['representative']}  size={o['size']}  n={o['n']}")
    return "\n".join(lines), EXIT_OK


def cmd_invariants(args) -> tuple[str, int]:
    s = parse_subset(args.subset)
    _check_k(len(s), 3, 9)
    prof = profile(s)
    if args.format == "json":
        return _dump(prof.to_json()), EXIT_OK
    lines = [f"{s}  k={prof.k}"]
    for t, v in prof.triple_values.items():
        lines.append(f"  {t}  d6={v.d6} alex={v.alex} split={v.split} lks={v.lks}")
    counts = prof.collinear_fibre_counts()
    lines.append(
        "  #d6=1: {d6}  #alex=1: {alex}  #split=3: {split}  #lks=1: {lks}".format(**counts)
    )
    return "\n".join(lines), EXIT_OK


def cmd_realize(args) -> tuple[str, int]:
    mus = parse_mus([args.mu])
    if len(mus) != 1:
        raise ParseError("realize takes exactly one mu")
    s = parse_subset(args.subset)
    doc = arrangement_to_json(realize(mus[0], s))
    if args.format == "json":
        return _dump(doc), EXIT_OK
    lines = [f"cubic: {doc['cubic']}", f"subset: {doc['subset']}"]
    for r in doc["records"]:
        lines.append(f"  {r['kind']:<12} lines={r['lines']}")
    return "\n".join(lines), EXIT_OK


def cmd_zariski_scan(args) -> tuple[str, int]:
    k = _check_k(args.k, 1, 9)
    results = scan(parse_mus(args.mu), k, full=args.full)
    if args.output_dir:
        out = Path(args.output_dir)
        out.mkdir(parents=True, exist_ok=True)
        for res in results:
            tag = format_rational(res.mu).replace("/", "_").replace("-", "m")
            for i, cert in enumerate(res.certificates):
                (out / f"cert_k{k}_mu{tag}_{i:03d}.json").write_text(cert.dumps() + "\n", encoding="utf-8")
    if args.format == "json":
        return _dump({"k": k, "scans": [r.to_json() for r in results]}), EXIT_OK
    lines = []
    for r in results:
        lines.append(
            f"mu={format_rational(r.mu)}  k={k}  concurrent collinear triples={len(r.concurrent_collinear)}"
            f"  certificates={len(r.certificates)}"
        )
        for c in r.certificates:
            lines.append(
                f"  {c.subset_1} (n={c.counts[0]}, {c.type_1.tag.value}) vs "
                f"{c.subset_2} (n={c.counts[1]}, {c.type_2.tag.value})"
            )
    return "\n".join(lines), EXIT_OK


def cmd_zariski_verify(args) -> tuple[str, int]:
    certs: list[ZariskiCertificate] = []
    for name in args.files:
        try:
            doc = json.loads(Path(name).read_text(encoding="utf-8"))
            certs.extend(certificates_from_document(doc))
        except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
            raise ParseError(f"cannot read certificates from {name}: {e}") from None
    results = [(c, verify_certificate(c)) for c in certs]
    status = EXIT_OK if all(ok for _, ok in results) else EXIT_VERIFY
    if args.format == "json":
        body = [
            {"subsets": [str(c.subset_1), str(c.subset_2)], "mu": format_rational(c.mu),
             "ok": v.ok, "reason": v.reason}
            for c, v in results
        ]
        return _dump({"verified": status == EXIT_OK, "results": body}), status
    lines = [
        f"{'PASS' if v else 'FAIL'}  mu={format_rational(c.mu)}  {c.subset_1} vs {c.subset_2}  ({v.reason})"
        for c, v in results
    ]
    lines.append(f"{sum(1 for _, v in results if v)}/{len(results)} certificates verified")
    return "\n".join(lines), status


HANDLERS = {
    "table": cmd_table,
    "classify": cmd_classify,
    "orbits": cmd_orbits,
    "invariants": cmd_invariants,
    "realize": cmd_realize,
    "zariski-scan": cmd_zariski_scan,
    "zariski-verify": cmd_zariski_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--output", "-o", help="write output here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="artal", description="Cubic-plus-inflectional-tangent arrangements: census, invariants, Zariski pairs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("table", parents=[common], help="attained collinear-triple counts for k = 3..9")

    p = sub.add_parser("classify", parents=[common], help="collinear-triple count and Type I/II tag")
    p.add_argument("--subset", required=True, help='torsion points, e.g. "[0,0 1,0 2,0 0,1]"')

    p = sub.add_parser("orbits", parents=[common], help="k-subsets up to affine symmetry")
    p.add_argument("--k", type=int)

    p = sub.add_parser("invariants", parents=[common], help="invariant values on every 3-subarrangement")
    p.add_argument("--subset", required=True)

    p = sub.add_parser("realize", parents=[common], help="exact realization on a Hesse-pencil cubic")
    p.add_argument("--mu", required=True, help='pencil parameter, e.g. "2" or "--mu=-1/2"')
    p.add_argument("--subset", required=True)

    p = sub.add_parser("zariski-scan", parents=[common], help="search for Zariski-pair certificates")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mu", nargs="+", help="pencil parameters (space or comma separated); default small-height list")
    p.add_argument("--full", action="store_true", help="emit every qualifying pair, not one per orbit pair")
    p.add_argument("--output-dir", help="also write each certificate to its own JSON file here")

    p = sub.add_parser("zariski-verify", parents=[common], help="re-check certificates from a JSON file")
    p.add_argument("files", nargs="+")
    return parser


def run(argv: Sequence[str] | None = None) -> tuple[str, int]:
    """Parse ``argv`` and execute; returns (output text, exit status)."""
    args = build_parser().parse_args(argv)
    try:
        return HANDLERS[args.command](args)
    except ParseError as e:
        return f"error: {e}", EXIT_PARSE
    except RangeError as e:
        return f"error: {e}", EXIT_RANGE
    except NotSmoothError as e:
        return f"error: {e}", EXIT_SINGULAR
    except (AssertionError, LabelingError) as e:
        return f"error: internal check failed: {e}", EXIT_INTERNAL


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    text, status = run(argv)
    if status != EXIT_OK and text.startswith("error:"):
        print(text, file=sys.stderr)
        return status
    if args.output:
        Path(args.output).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
