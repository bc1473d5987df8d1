"""Command-line front end.

Exit codes: 0 success / verified, 1 verification failed, 2 input error.
The cache directory comes from --cache-dir or the POLYSPACE_CACHE
environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import bounds as bounds_mod
from . import reports as reports_mod
from .cohomology import build_ring, cup_length, ls_category
from .genetics import GeneticCode, classify, enumerate_genetic_codes, realizable
from .lengths import LengthVector, genetic_code, zero_signed_sum
from .tensor import Certificate, evaluate_certificate

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


@dataclass
class RunConfig:
    command: str
    lengths: tuple[int, ...] = ()
    candidate: str | None = None
    n: int | None = None
    ns: tuple[int, ...] = ()
    ks: tuple[int, ...] = (2,)
    certify: bool = False
    budget: int = 500_000
    cache_dir: Path | None = None
    fmt: str = "text"
    figures: bool = False
    out_dir: Path = field(default_factory=lambda: Path("."))
    path: Path | None = None

    def __post_init__(self) -> None:
        if self.budget <= 0:
            raise ValueError("budget must be positive")
        if any(k < 1 for k in self.ks):
            raise ValueError("k must be >= 1")


def _parse_ks(spec: str) -> tuple[int, ...]:
    if ".." in spec:
        lo, hi = spec.split("..", 1)
        return tuple(range(int(lo), int(hi) + 1))
    return tuple(int(x) for x in spec.replace(",", " ").split())


def _parse_candidate(spec: str, n: int) -> GeneticCode:
    genes = []
    for part in spec.replace("{", "").replace("}", "").split(";"):
        part = part.strip()
        if not part:
            continue
        gene = sorted(int(x) for x in part.replace(",", " ").split())
        if n not in gene:
            gene.append(n)
        genes.append(tuple(sorted(gene)))
    return GeneticCode(n, genes)


def _cache_dir(arg: str | None) -> Path | None:
    if arg:
        return Path(arg)
    env = os.environ.get("POLYSPACE_CACHE")
    return Path(env) if env else None


def cmd_analyze(cfg: RunConfig) -> int:
    try:
        alpha = LengthVector(cfg.lengths)
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    wall = zero_signed_sum(alpha)
    if wall is not None:
        print(
            f"not generic: indices {wall} sum to half the perimeter "
            f"({alpha.subset_sum(wall)} of {alpha.perimeter})",
            file=sys.stderr,
        )
        return EXIT_INPUT
    code = genetic_code(alpha)
    if code.is_empty:
        print("no closed polygon: the longest side exceeds the rest combined",
              file=sys.stderr)
        return EXIT_INPUT
    sig = classify(code)
    ring = build_ring(code)
    length, witness = cup_length(ring)
    cat = ls_category(ring)
    reports = [
        bounds_mod.tc_bounds(code, k, certify=cfg.certify, max_keys=cfg.budget,
                             signature=sig)
        for k in cfg.ks
    ]
    if cfg.fmt == "json":
        payload = {
            "lengths": list(alpha.entries),
            "generic": True,
            "code": code.to_json(),
            "signature": sig.to_json(),
            "dims": list(ring.dims),
            "cup_length": length,
            "category": cat,
            "bounds": [r.to_json() for r in reports],
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"length vector: {alpha.entries}  (n={alpha.n}, generic)")
        print(f"genetic code:  {code.label()}   sizes {sig.sizes}")
        flags = [name for name, v in [("Type 1", sig.type1), ("Type 2", sig.type2)] if v]
        if flags:
            print(f"shape flags:   {', '.join(flags)}")
        print(f"ring dims:     {' '.join(map(str, ring.dims))}  (top degree m={ring.m})")
        r_exp, support = witness
        wtxt = " ".join([f"R^{r_exp}"] + [f"V{i}" for i in support]) if support or r_exp else "1"
        print(f"cup length:    {length}  (witness {wtxt})")
        print(f"category:      {cat}  (exact)")
        print(reports_mod.bounds_text(reports))
    return EXIT_OK


def cmd_code(cfg: RunConfig) -> int:
    if cfg.candidate is not None:
        if cfg.n is None:
            print("input error: --candidate needs --n", file=sys.stderr)
            return EXIT_INPUT
        try:
            code = _parse_candidate(cfg.candidate, cfg.n)
        except ValueError as exc:
            print(f"input error: {exc}", file=sys.stderr)
            return EXIT_INPUT
        ok, witness = realizable(code)
        payload = {
            "code": code.to_json(),
            "realizable": ok,
            "witness": list(witness.entries) if witness else None,
        }
        if cfg.fmt == "json":
            print(json.dumps(payload, indent=2))
        elif ok:
            print(f"{code.label()} realizable by {witness.entries}")
        else:
            print(f"{code.label()} is not realizable")
        return EXIT_OK if ok else EXIT_FAILED
    try:
        alpha = LengthVector(cfg.lengths)
        code = genetic_code(alpha)
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if cfg.fmt == "json":
        print(json.dumps(code.to_json(), indent=2))
    else:
        print(code.label())
    return EXIT_OK


def cmd_enumerate(cfg: RunConfig) -> int:
    n = cfg.n
    if n is None:
        print("input error: enumerate needs --n", file=sys.stderr)
        return EXIT_INPUT
    try:
        entries = enumerate_genetic_codes(n, cache_dir=cfg.cache_dir)
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if cfg.fmt == "json":
        print(json.dumps({"n": n, "codes": [e.to_json() for e in entries]}, indent=1))
    else:
        for e in entries:
            print(f"{e.code.label()}  sizes {e.signature.sizes}  witness {e.witness.entries}")
        print(f"total: {len(entries)} realizable codes for n={n}")
    return EXIT_OK


def cmd_table1(cfg: RunConfig) -> int:
    ns = cfg.ns or (5, 6, 7)
    bad = [n for n in ns if not 5 <= n <= 8]
    if bad:
        print(f"input error: table rows cover n=5..8, got {bad}", file=sys.stderr)
        return EXIT_INPUT
    enums = {n: enumerate_genetic_codes(n, cache_dir=cfg.cache_dir) for n in ns}
    result = reports_mod.build_table1(enums)
    if cfg.fmt == "csv":
        out = cfg.out_dir / "table1.csv"
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(reports_mod.table1_csv(result))
        print(f"wrote {out}")
    elif cfg.fmt == "json":
        print(json.dumps(
            [c.__dict__ for c in result.cells], indent=1, default=str
        ))
    else:
        print(reports_mod.table1_text(result))
    if cfg.figures:
        fig = reports_mod.render_table1_figure(result, cfg.out_dir / "table1.png")
        print(f"wrote {fig}")
    return EXIT_OK if not result.mismatches else EXIT_FAILED


def cmd_bounds(cfg: RunConfig) -> int:
    codes: list[GeneticCode] = []
    if cfg.lengths:
        try:
            codes.append(genetic_code(LengthVector(cfg.lengths)))
        except ValueError as exc:
            print(f"input error: {exc}", file=sys.stderr)
            return EXIT_INPUT
    elif cfg.candidate is not None and cfg.n is not None:
        try:
            code = _parse_candidate(cfg.candidate, cfg.n)
        except ValueError as exc:
            print(f"input error: {exc}", file=sys.stderr)
            return EXIT_INPUT
        ok, _ = realizable(code)
        if not ok:
            print(f"input error: {code.label()} is not realizable", file=sys.stderr)
            return EXIT_INPUT
        codes.append(code)
    elif cfg.n is not None:
        codes.extend(e.code for e in enumerate_genetic_codes(cfg.n, cache_dir=cfg.cache_dir))
    else:
        print("input error: bounds needs lengths, --candidate, or --n", file=sys.stderr)
        return EXIT_INPUT
    reports = [
        bounds_mod.tc_bounds(code, k, certify=cfg.certify, max_keys=cfg.budget)
        for code in codes
        for k in cfg.ks
    ]
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    if cfg.fmt == "json":
        print(json.dumps([r.to_json() for r in reports], indent=1))
    elif cfg.fmt == "csv":
        out = cfg.out_dir / "bounds.csv"
        out.write_text(reports_mod.bounds_csv(reports))
        print(f"wrote {out}")
    else:
        print(reports_mod.bounds_text(reports))
    if cfg.certify:
        certs = [
            mb.certificate
            for r in reports
            for mb in r.methods
            if mb.certificate is not None and mb.verified
        ]
        cert_path = cfg.out_dir / "certificates.json"
        cert_path.write_text(json.dumps([c.to_json() for c in certs], indent=1))
        print(f"wrote {cert_path} ({len(certs)} verified certificates)")
    if cfg.figures:
        fig = reports_mod.render_bounds_figure(reports, cfg.out_dir / "bounds.png")
        print(f"wrote {fig}")
    return EXIT_OK


def cmd_certify(cfg: RunConfig) -> int:
    try:
        data = json.loads(cfg.path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    items = data if isinstance(data, list) else [data]
    worst = EXIT_OK
    for item in items:
        try:
            cert = Certificate.from_json(item)
            result = evaluate_certificate(cert, max_keys=cfg.budget)
        except (ValueError, KeyError) as exc:
            print(f"input error: {exc}", file=sys.stderr)
            return EXIT_INPUT
        verdict = "nonzero" if result.nonzero else "ZERO"
        extra = (
            f", witness multidegree {result.witness_multidegree}"
            if result.nonzero else ""
        )
        print(
            f"{cert.code.label()} k={cert.k} [{cert.label or 'certificate'}] "
            f"length {cert.length}: {verdict}{extra}"
        )
        if not result.nonzero:
            worst = EXIT_FAILED
    return worst


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyspace",
        description="Exact cohomology and motion-planning bounds for polygon spaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, lengths: bool = False) -> None:
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--cache-dir", default=None)
        p.add_argument("--budget", type=int, default=500_000,
                       help="max tensor keys during certificate evaluation")
        p.add_argument("--out-dir", default=".")
        if lengths:
            p.add_argument("lengths", nargs="*", type=int)

    p = sub.add_parser("analyze", help="full report for one length vector")
    common(p, lengths=True)
    p.add_argument("--k", default="2", help="k or range, e.g. 3 or 2..5")
    p.add_argument("--certify", action="store_true")

    p = sub.add_parser("code", help="genetic code of a vector, or realizability of a candidate")
    common(p, lengths=True)
    p.add_argument("--candidate", help="genes, e.g. '2,4;5' (n added automatically)")
    p.add_argument("--n", type=int)

    p = sub.add_parser("enumerate", help="all realizable codes for one n")
    common(p)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("table1", help="occurrence counts vs the reference table")
    common(p)
    p.add_argument("--n", type=int, nargs="+", dest="ns", default=[5, 6, 7])
    p.add_argument("--figures", action="store_true")

    p = sub.add_parser("bounds", help="TC_k bound reports")
    common(p, lengths=True)
    p.add_argument("--candidate")
    p.add_argument("--n", type=int)
    p.add_argument("--k", default="2", help="k or range, e.g. 3 or 2..5")
    p.add_argument("--certify", action="store_true")
    p.add_argument("--figures", action="store_true")

    p = sub.add_parser("certify", help="re-verify a stored certificate file")
    common(p)
    p.add_argument("path")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(
            command=args.command,
            lengths=tuple(getattr(args, "lengths", ()) or ()),
            candidate=getattr(args, "candidate", None),
            n=getattr(args, "n", None) if args.command != "table1" else None,
            ns=tuple(getattr(args, "ns", ()) or ()),
            ks=_parse_ks(getattr(args, "k", "2")),
            certify=getattr(args, "certify", False),
            budget=args.budget,
            cache_dir=_cache_dir(args.cache_dir),
            fmt=args.format,
            figures=getattr(args, "figures", False),
            out_dir=Path(args.out_dir),
            path=Path(args.path) if hasattr(args, "path") else None,
        )
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    handler = {
        "analyze": cmd_analyze,
        "code": cmd_code,
        "enumerate": cmd_enumerate,
        "table1": cmd_table1,
        "bounds": cmd_bounds,
        "certify": cmd_certify,
    }[cfg.command]
    return handler(cfg)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
