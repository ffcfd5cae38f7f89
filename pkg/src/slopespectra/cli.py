"""Command-line interface.

Subcommands: analyze, verify, generate, render, case.  Exit codes are
stable: 0 for success (verify: certificate), 3 for a refutation or a
report-level precondition refusal, 1 for input or parse errors, 2 for
usage errors (argparse).  SLOPESPECTRA_EPS overrides the default float
tolerance when --eps is not given.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import report as rep
from .errors import SlopeSpectraError
from .generators import GeneratorSpec
from .geometry import Configuration
from .pointfile import _parse_token, parse_point_text, serialize_points
from .regularity import AffineMap
from .render import render_svg
from .scalars import DEFAULT_EPS_REL, EXACT, float_backend
from .slopes import classify_criticality, forbidden_slope_table, slope_spectrum
from .verifier import Certificate, classify_proof_case, verify_theorem

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_REFUTED = 3

ENV_EPS = "SLOPESPECTRA_EPS"


def _default_eps() -> float:
    raw = os.environ.get(ENV_EPS)
    if raw:
        try:
            return float(raw)
        except ValueError:
            pass
    return DEFAULT_EPS_REL


def _resolve_backend(args):
    if args.backend == "rational":
        return EXACT
    if args.backend == "float":
        return float_backend(args.eps)
    return None  # infer from the file


def _load(path: str, args) -> tuple[Configuration, str]:
    data = Path(path).read_bytes()
    config = parse_point_text(data.decode(), _resolve_backend(args), args.eps)
    return config, rep.input_digest(data)


def _emit(report: dict, args) -> None:
    out = rep.to_json(report) if args.json else rep.to_text(report)
    sys.stdout.write(out)


def _add_common(sub):
    sub.add_argument("--backend", choices=["rational", "float"],
                     help="force the scalar backend (default: infer from the file)")
    sub.add_argument("--eps", type=float, default=_default_eps(),
                     help="relative tolerance for the float backend")
    sub.add_argument("--json", action="store_true", help="emit JSON instead of text")


def cmd_analyze(args) -> int:
    t0 = time.perf_counter()
    config, digest = _load(args.file, args)
    spectrum = slope_spectrum(config)
    table = forbidden_slope_table(config, spectrum)
    crit = classify_criticality(config)
    payload = {
        "n": len(config),
        "spectrum": rep.spectrum_json(spectrum),
        "forbidden": {
            str(i): [rep.direction_json(d) for d in dirs]
            for i, dirs in enumerate(table.per_point)
        },
        "criticality": crit.verdict.value,
        "general_position": crit.general_position,
    }
    _emit(rep.build_report("analyze", config.backend.kind, config.backend.eps_rel,
                           digest, payload, (time.perf_counter() - t0) * 1e3), args)
    return EXIT_OK


def _verify_one(path: str, args) -> tuple[dict, bool]:
    t0 = time.perf_counter()
    config, digest = _load(path, args)
    verdict = verify_theorem(config)
    payload = {"n": len(config), "file": path, "verdict": rep.verdict_json(verdict)}
    report = rep.build_report("verify", config.backend.kind, config.backend.eps_rel,
                              digest, payload, (time.perf_counter() - t0) * 1e3)
    return report, isinstance(verdict, Certificate)


def _verify_worker(item):
    path, args = item
    return _verify_one(path, args)


def cmd_verify(args) -> int:
    items = [(path, args) for path in args.files]
    if args.jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_verify_worker, items))
    else:
        results = [_verify_one(path, args) for path, args in items]
    all_ok = True
    for report, ok in results:
        _emit(report, args)
        all_ok = all_ok and ok
    return EXIT_OK if all_ok else EXIT_REFUTED


def _parse_affine(text: str) -> AffineMap:
    parts = [t.strip() for t in text.split(",")]
    if len(parts) != 6:
        raise SlopeSpectraError(f"--affine needs 6 comma-separated values, got {len(parts)}")
    a, b, c, d, e, f = (_parse_token(t, 0)[0] for t in parts)
    return AffineMap(((a, b), (c, d)), (e, f))


def cmd_generate(args) -> int:
    delete = tuple(int(t) for t in args.delete.split(",")) if args.delete else ()
    spec = GeneratorSpec(
        polygon=args.polygon,
        random=args.random,
        delete=delete,
        affine=_parse_affine(args.affine) if args.affine else None,
        perturb_delta=args.perturb,
        seed=args.seed,
        bound=args.bound,
    )
    config = spec.build()
    sys.stdout.write(serialize_points(config))
    return EXIT_OK


def cmd_render(args) -> int:
    config, _ = _load(args.file, args)
    svg = render_svg(config, args.highlight)
    if args.out:
        Path(args.out).write_text(svg)
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def cmd_case(args) -> int:
    t0 = time.perf_counter()
    config, digest = _load(args.file, args)
    try:
        case = classify_proof_case(config)
    except SlopeSpectraError as exc:
        payload = {"n": len(config), "refusal": f"{type(exc).__name__}: {exc}"}
        _emit(rep.build_report("case", config.backend.kind, config.backend.eps_rel,
                               digest, payload, (time.perf_counter() - t0) * 1e3), args)
        return EXIT_REFUTED
    payload = {"n": len(config), "proof_case": rep.case_json(case)}
    _emit(rep.build_report("case", config.backend.kind, config.backend.eps_rel,
                           digest, payload, (time.perf_counter() - t0) * 1e3), args)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slopespectra",
        description="Slope spectra, conic group law, and (n+1)-slope certificates "
                    "for planar point configurations.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("analyze", help="slope spectrum, forbidden slopes, criticality")
    p.add_argument("file")
    _add_common(p)
    p.set_defaults(func=cmd_analyze)

    p = subs.add_parser("verify", help="certify or refute the (n+1)-slope property")
    p.add_argument("files", nargs="+")
    p.add_argument("--jobs", type=int, default=1,
                   help="verify files in parallel processes")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("generate", help="emit a point file from a generator pipeline")
    p.add_argument("--polygon", type=int, help="regular m-gon source")
    p.add_argument("--random", type=int, help="random general-position source of n points")
    p.add_argument("--delete", help="comma-separated vertex indices to drop")
    p.add_argument("--affine", help="a,b,c,d,e,f for x'=ax+by+e, y'=cx+dy+f")
    p.add_argument("--perturb", type=float, help="uniform perturbation radius")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=1000,
                   help="numerator/denominator bound for random rationals")
    p.set_defaults(func=cmd_generate)

    p = subs.add_parser("render", help="emit a deterministic SVG figure")
    p.add_argument("file")
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--highlight",
                   help="'conic', 'forbidden <i>', 'parallel (dx,dy)' or 'parallel all'")
    _add_common(p)
    p.set_defaults(func=cmd_render)

    p = subs.add_parser("case", help="structural case classification")
    p.add_argument("file")
    _add_common(p)
    p.set_defaults(func=cmd_case)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SlopeSpectraError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
