"""Command-line front end.

Subcommands:

    boundary   trace the region boundary for one parameter set (CSV or SVG)
    sample     draw seeded class members and report their W values
    verify     run the oracle + bounds suites; nonzero exit on violation
    diskbound  enclosing-disk center/radius and the containment margin
    lemma      zero count of the auxiliary double-zero function
    figures    render the eight bundled parameter sets to SVG + CSV

Exit codes: 0 success, 2 invalid parameters, 3 quadrature/counting accuracy
failure, 4 verification found a violated invariant. All output is
deterministic for a fixed command line and seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import backend, bounds, oracle, region
from .core import ExtremalParam, GeneralParam, RegionParams
from .errors import (
    AccuracyError,
    DegenerateRegionError,
    DomainError,
    GeometryError,
    InconclusiveError,
)
from .quad import QuadConfig, w_value, w_values

# the eight bundled (z0, lambda) parameter sets rendered by `figures`
FIGURE_PARAMS = (
    (0.0230875 + 0.00517512j, 0.175557 - 0.225417j),
    (0.147076 + 0.0913164j, 0.0748874 + 0.0476965j),
    (-0.819143 - 0.551002j, 0.722765 + 0.433556j),
    (0.757794 - 0.598957j, -0.308071 - 0.32103j),
    (-0.414782 - 0.377338j, 0.196381 - 0.500501j),
    (0.386456 - 0.316514j, -0.236285 + 0.235873j),
    (0.419565 + 0.478471j, 0.242605 + 0.097106j),
    (0.754872 + 0.0830025j, 0.130907 + 0.931628j),
)


def parse_complex(text: str) -> complex:
    """Parse 'a+bi' / 'a-bi' literals (spaces and scientific notation ok)."""
    s = "".join(text.split())
    if not s:
        raise ValueError("empty complex literal")
    try:
        value = complex(s.replace("i", "j").replace("I", "j"))
    except ValueError:
        raise ValueError(f"unparsable complex literal: {text!r}") from None
    if not (np.isfinite(value.real) and np.isfinite(value.imag)):
        raise ValueError(f"non-finite complex literal: {text!r}")
    return value


def format_complex(z: complex) -> str:
    re, im = z.real, z.imag
    sign = "+" if im >= 0 else "-"
    # repr is the shortest representation that round-trips the double
    return f"{re!r}{sign}{abs(im)!r}i"


def _fmt(x: float) -> str:
    return f"{x:.17g}"


# ---------------------------------------------------------------------------
# output writers


def boundary_csv(thetas, values) -> str:
    lines = ["theta,re,im"]
    for th, w in zip(thetas, values):
        lines.append(f"{_fmt(th)},{_fmt(w.real)},{_fmt(w.imag)}")
    return "\n".join(lines) + "\n"


def parse_boundary_csv(text: str):
    rows = text.strip().splitlines()
    if rows[0] != "theta,re,im":
        raise ValueError("unexpected CSV header")
    data = np.array([[float(c) for c in row.split(",")] for row in rows[1:]])
    return data[:, 0], data[:, 1] + 1j * data[:, 2]


def boundary_svg(thetas, values, center, meta: dict) -> str:
    """Single stroked closed path with a center marker, autoscaled with a 5%
    margin. No external assets; byte-stable for identical inputs."""
    xs = np.concatenate([np.asarray(values).real, [center.real]])
    ys = np.concatenate([-np.asarray(values).imag, [-center.imag]])
    x0, x1 = float(xs.min()), float(xs.max())
    y0, y1 = float(ys.min()), float(ys.max())
    span = max(x1 - x0, y1 - y0, 1e-300)
    pad = 0.05 * span
    x0, y0, w, h = x0 - pad, y0 - pad, (x1 - x0) + 2 * pad, (y1 - y0) + 2 * pad
    stroke = 0.004 * span
    marker = 0.008 * span

    def c(v):
        return f"{v:.9g}"

    pieces = [f"M {c(values[0].real)},{c(-values[0].imag)}"]
    pieces += [f"L {c(w_.real)},{c(-w_.imag)}" for w_ in values[1:]]
    path = " ".join(pieces) + " Z"
    comment = " ".join(f"{k}={v}" for k, v in meta.items())
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{c(x0)} {c(y0)} {c(w)} {c(h)}">\n'
        f"<!-- {comment} -->\n"
        f'<path d="{path}" fill="none" stroke="#000" stroke-width="{c(stroke)}"/>\n'
        f'<circle cx="{c(center.real)}" cy="{c(-center.imag)}" r="{c(marker)}" fill="#000"/>\n'
        f"</svg>\n"
    )


def _emit(text: str, out_path):
    if out_path is None:
        sys.stdout.write(text)
    else:
        Path(out_path).write_text(text)


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    return obj


def _json_dumps(obj) -> str:
    return json.dumps(_jsonable(obj), sort_keys=True, indent=2) + "\n"


def _describe_param(p) -> dict:
    if isinstance(p, ExtremalParam):
        return {"kind": "extremal", "a": format_complex(p.a)}
    return {
        "kind": "general",
        "scale": p.scale,
        "rotation": p.rotation,
        "vanishing_order": p.vanishing_order,
        "zeros": [format_complex(b) for b in p.zeros],
    }


# ---------------------------------------------------------------------------
# verification suites (oracle + bounds for one parameter set)


def run_verification(params: RegionParams, cfg: QuadConfig, seed: int = 0,
                     n_members: int = 64) -> dict:
    """Residual report for every checkable claim at these parameters."""
    rng = np.random.default_rng(seed)
    members = [oracle.sample_param(seed * 100003 + i) for i in range(n_members)]
    suites = {}

    bad = sum(not oracle.verify_membership(p, params.lam, grid_size=24) for p in members)
    suites["membership"] = {
        "pass": bad == 0,
        "residuals": {"failed_fraction": bad / n_members},
    }

    worst = {}
    for p in members[: min(n_members, 32)]:
        rep = oracle.coefficient_report(p, params, cfg)
        for k, v in rep.residuals.items():
            worst[k] = max(worst.get(k, 0.0), v)
    suites["coefficients"] = {
        "pass": all(v <= 1e-8 for v in worst.values()),
        "residuals": worst,
    }

    slacks = []
    eq_resid = 0.0
    for p in members:
        z = 0.9 * np.sqrt(rng.random()) * np.exp(1j * rng.uniform(-np.pi, np.pi))
        slacks.append(bounds.envelope_check(p, params.lam, z))
        th = rng.uniform(-np.pi, np.pi)
        eq_resid = max(eq_resid, abs(bounds.envelope_check(
            ExtremalParam(a=np.exp(1j * th)), params.lam, z)))
    suites["envelope"] = {
        "pass": min(slacks) >= -1e-9 and eq_resid <= 1e-10,
        "residuals": {"min_slack": min(slacks), "extremal_equality": eq_resid},
    }

    hs = []
    for _ in range(256):
        z = 0.95 * np.sqrt(rng.random()) * np.exp(1j * rng.uniform(-np.pi, np.pi))
        lam_h = 0.95 * np.sqrt(rng.random()) * np.exp(1j * rng.uniform(-np.pi, np.pi))
        hs.append(oracle.h_identity_check(z, lam_h))
    suites["h_identity"] = {
        "pass": max(hs) <= 1e-12,
        "residuals": {"max_residual": max(hs)},
    }

    if params.degenerate:
        curve = region.boundary_curve(params, cfg=cfg)
        point_err = abs(curve.values[0] - (region.interior_center(params)
                                           if abs(params.z0) > 0 else 0.0))
        suites["region"] = {
            "pass": curve.degenerate and point_err == 0.0,
            "residuals": {"point_error": point_err},
        }
    else:
        curve = region.boundary_curve(params, cfg=cfg)
        poly = region.to_polygon(curve)
        turn = abs(poly.total_turning() - 2.0 * np.pi)
        margin = poly.edge_margin(poly.center)
        ws = w_values(params, members, cfg)
        excess = max(
            0.0 if poly.contains(w, 1e-6 * poly.diameter) else
            poly.boundary_distance(w) / poly.diameter
            for w in ws
        )
        suites["region"] = {
            "pass": (poly.convexity_defect >= -1e-9 * poly.diameter
                     and turn <= 1e-6 and margin > 0.0 and excess == 0.0),
            "residuals": {
                "convexity_defect_rel": poly.convexity_defect / poly.diameter,
                "turning_residual": turn,
                "center_margin": margin,
                "containment_excess_rel": excess,
            },
        }

        db = bounds.disk_bound(params, cfg)
        vertex_margin = min(db.margin(w) for w in poly.vertices)
        suites["disk_bound"] = {
            "pass": vertex_margin >= -1e-8,
            "residuals": {"min_vertex_margin": vertex_margin},
        }

    if abs(params.lam) < 1.0 - 1e-12:
        counts = []
        for _ in range(4):
            th = rng.uniform(-np.pi, np.pi)
            counts.append(oracle.lemma_g_zero_count(th, params.lam, 0.7, cfg))
        suites["lemma_double_zero"] = {
            "pass": all(c == 2 for c in counts),
            "residuals": {"max_count_error": max(abs(c - 2) for c in counts)},
        }

    report = {
        "schema": 1,
        "backend": backend.backend_name(),
        "params": {
            "z0": format_complex(params.z0),
            "lambda": format_complex(params.lam),
            "alpha": format_complex(params.alpha),
        },
        "suites": suites,
        "pass": all(s["pass"] for s in suites.values()),
    }
    return report


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_boundary(args) -> int:
    params = RegionParams(z0=args.z0, lam=args.lam, alpha=args.alpha)
    cfg = _cfg(args)
    curve = region.boundary_curve(params, n_samples=args.n_samples, cfg=cfg)
    if args.format == "csv":
        _emit(boundary_csv(curve.thetas, curve.values), args.output)
    elif args.format == "svg":
        meta = {"z0": format_complex(params.z0), "lambda": format_complex(params.lam),
                "n": len(curve.values)}
        _emit(boundary_svg(curve.thetas, curve.values,
                           region.interior_center(params), meta), args.output)
    else:
        raise DomainError(f"boundary supports csv or svg, not {args.format}")
    return 0


def _cmd_sample(args) -> int:
    params = RegionParams(z0=args.z0, lam=args.lam, alpha=args.alpha)
    cfg = _cfg(args)
    rows = []
    for i in range(args.n_samples):
        p = oracle.sample_param(args.seed + i)
        w = w_value(params, p, cfg)
        rows.append((args.seed + i, p, w))
    if args.format == "json":
        payload = {
            "schema": 1,
            "params": {"z0": format_complex(params.z0),
                       "lambda": format_complex(params.lam)},
            "samples": [
                {"seed": s, "param": _describe_param(p), "w": format_complex(w)}
                for s, p, w in rows
            ],
        }
        _emit(_json_dumps(payload), args.output)
    elif args.format == "csv":
        lines = ["seed,kind,descriptor,re,im"]
        for s, p, w in rows:
            desc = json.dumps(_describe_param(p), sort_keys=True).replace('"', "'")
            lines.append(f'{s},{_describe_param(p)["kind"]},"{desc}",{_fmt(w.real)},{_fmt(w.imag)}')
        _emit("\n".join(lines) + "\n", args.output)
    else:
        raise DomainError(f"sample supports csv or json, not {args.format}")
    return 0


def _cmd_verify(args) -> int:
    params = RegionParams(z0=args.z0, lam=args.lam, alpha=args.alpha)
    report = run_verification(params, _cfg(args), seed=args.seed,
                              n_members=args.n_samples)
    _emit(_json_dumps(report), args.output)
    return 0 if report["pass"] else 4


def _cmd_diskbound(args) -> int:
    params = RegionParams(z0=args.z0, lam=args.lam, alpha=args.alpha)
    cfg = _cfg(args)
    db = bounds.disk_bound(params, cfg)
    payload = {
        "schema": 1,
        "center": format_complex(db.center),
        "radius": db.radius,
        "path": db.path,
    }
    if not params.degenerate:
        poly = region.to_polygon(region.boundary_curve(params, args.n_samples, cfg))
        payload["containment_margin"] = min(db.margin(w) for w in poly.vertices)
    _emit(_json_dumps(payload), args.output)
    return 0


def _cmd_lemma(args) -> int:
    count = oracle.lemma_g_zero_count(args.theta, args.lam, args.radius, _cfg(args))
    payload = {
        "schema": 1,
        "theta": args.theta,
        "lambda": format_complex(args.lam),
        "radius": args.radius,
        "zero_count": count,
    }
    _emit(_json_dumps(payload), args.output)
    return 0


def _cmd_figures(args) -> int:
    outdir = Path(args.output or "figs")
    outdir.mkdir(parents=True, exist_ok=True)
    cfg = _cfg(args)
    for i, (z0, lam) in enumerate(FIGURE_PARAMS, start=1):
        params = RegionParams(z0=z0, lam=lam)
        curve = region.boundary_curve(params, n_samples=args.n_samples, cfg=cfg)
        (outdir / f"fig{i}.csv").write_text(boundary_csv(curve.thetas, curve.values))
        meta = {"figure": i, "z0": format_complex(z0), "lambda": format_complex(lam),
                "n": len(curve.values)}
        svg = boundary_svg(curve.thetas, curve.values,
                           region.interior_center(params), meta)
        (outdir / f"fig{i}.svg").write_text(svg)
    return 0


# ---------------------------------------------------------------------------
# argument plumbing


def _cfg(args) -> QuadConfig:
    return QuadConfig(rel_tol=args.rel_tol, abs_tol=args.abs_tol,
                      max_subdivisions=args.max_subdivisions,
                      panel_order=args.panel_order)


def _add_common(p, need_params=True):
    if need_params:
        p.add_argument("--z0", type=parse_complex, default=0.5 + 0j,
                       help="evaluation point, |z0| < 1 (literal like 0.5+0.25i)")
        p.add_argument("--lambda", dest="lam", type=parse_complex, default=0j,
                       help="second-coefficient parameter, |lambda| <= 1")
        p.add_argument("--alpha", type=parse_complex, default=1 + 0j,
                       help="convexity parameter, 0 < |alpha| <= 2; the region "
                            "itself does not depend on it (default 1+0i)")
    p.add_argument("--rel-tol", type=float, default=1e-10)
    p.add_argument("--abs-tol", type=float, default=1e-12)
    p.add_argument("--max-subdivisions", type=int, default=2**14)
    p.add_argument("--panel-order", type=int, default=16)
    p.add_argument("--out", dest="output", default=None,
                   help="output file (or directory for figures); default stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="varregion",
        description="Variability region of log f' + alpha*f over exponentially "
                    "convex univalent functions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("boundary", help="trace the region boundary")
    _add_common(p)
    p.add_argument("-n", "--samples", dest="n_samples", type=int, default=512)
    p.add_argument("--format", choices=("csv", "svg"), default="csv")
    p.set_defaults(func=_cmd_boundary)

    p = sub.add_parser("sample", help="seeded class members and their W values")
    _add_common(p)
    p.add_argument("-n", "--samples", dest="n_samples", type=int, default=16)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("csv", "json"), default="json")
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("verify", help="run the oracle and bounds suites")
    _add_common(p)
    p.add_argument("-n", "--samples", dest="n_samples", type=int, default=64,
                   help="number of sampled members per suite")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("diskbound", help="enclosing disk and containment margin")
    _add_common(p)
    p.add_argument("-n", "--samples", dest="n_samples", type=int, default=512)
    p.set_defaults(func=_cmd_diskbound)

    p = sub.add_parser("lemma", help="zero count of the auxiliary function")
    _add_common(p, need_params=False)
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--lambda", dest="lam", type=parse_complex, required=True)
    p.add_argument("--radius", type=float, default=0.7)
    p.set_defaults(func=_cmd_lemma)

    p = sub.add_parser("figures", help="render the bundled parameter sets")
    _add_common(p, need_params=False)
    p.add_argument("-n", "--samples", dest="n_samples", type=int, default=512)
    p.set_defaults(func=_cmd_figures)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DegenerateRegionError, GeometryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (AccuracyError, InconclusiveError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
