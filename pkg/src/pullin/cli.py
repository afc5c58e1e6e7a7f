"""Command-line front end.

Seven subcommands cover the library surface: ``timemap`` samples the time
map and its derivatives over a deflection grid, ``gcurve`` samples the
endpoint curve, ``lstar`` locates its peak, ``critical`` classifies one
half-width, ``diagram`` sweeps solution branches, ``solve`` lists the
deflections at one (L, lambda), and ``verify`` runs the acceptance registry.

Output is CSV (default), JSON, or, for diagrams, a standalone SVG.  Every
numeric value is printed with 12 significant digits and repeated runs of the
same configuration produce byte-identical output.  A key=value config file
may supply any flag's value; explicit flags win.  Exit codes: 0 success,
1 domain/regime/usage errors, 2 numerical non-convergence.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .acceptance import CHECKS
from .bifurcation import (
    BifurcationDiagram,
    critical_set,
    solve_alphas,
    sweep_diagram,
)
from .endpoint import compute_L_star, g_closed, g_prime
from .errors import BadBracket, DomainError, NonConvergence, NonFinite, RegimeError
from .timemap import alpha_limit, sample_time_map


class ConfigError(ValueError):
    """Invalid or incomplete command-line / config-file input."""


@dataclass(frozen=True)
class RunConfig:
    command: str
    L: Optional[float] = None
    lam: Optional[float] = None
    lambda_range: Optional[Tuple[float, float, int]] = None
    alpha_range: Optional[Tuple[float, float, int]] = None
    tol: float = 1e-10
    output_format: str = "csv"
    output_path: Optional[str] = None


def _fmt(x: float) -> str:
    return format(float(x), ".12g")


def _jnum(x: float) -> float:
    # round-trip through the 12-digit text form so JSON and CSV agree exactly
    return float(_fmt(x))


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse default exits with code 2
        raise ConfigError(message)


def _read_config_file(path: str) -> dict:
    table = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for line_no, raw in enumerate(fh, 1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise ConfigError(f"{path}:{line_no}: expected key=value, got {line!r}")
                key, value = line.split("=", 1)
                table[key.strip()] = value.strip()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    return table


_FLOAT_KEYS = ("L", "lambda", "lambda-min", "lambda-max", "alpha-min", "alpha-max", "tol")
_INT_KEYS = ("n",)
_STR_KEYS = ("format", "out")


def _merge(flag_value, cfg: dict, key: str):
    if flag_value is not None:
        return flag_value
    if key not in cfg:
        return None
    raw = cfg[key]
    try:
        if key in _FLOAT_KEYS:
            return float(raw)
        if key in _INT_KEYS:
            return int(raw)
        return raw
    except ValueError as exc:
        raise ConfigError(f"config value {key}={raw!r} is not a number") from exc


def parse_args(argv: Optional[Sequence[str]] = None) -> RunConfig:
    parser = _Parser(prog="pullin", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    specs = {
        "timemap": "sample the time map over a deflection grid",
        "gcurve": "sample the endpoint curve g and its derivative",
        "lstar": "locate the peak of the endpoint curve",
        "critical": "critical forcing strengths and regime for one half-width",
        "diagram": "sweep solution branches over a forcing-strength grid",
        "solve": "deflections solving the problem at one (L, lambda)",
        "verify": "run the full self-verification registry",
    }
    for name, help_text in specs.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--L", type=float, default=None)
        p.add_argument("--lambda", dest="lam", type=float, default=None)
        p.add_argument("--lambda-min", dest="lambda_min", type=float, default=None)
        p.add_argument("--lambda-max", dest="lambda_max", type=float, default=None)
        p.add_argument("--alpha-min", dest="alpha_min", type=float, default=None)
        p.add_argument("--alpha-max", dest="alpha_max", type=float, default=None)
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--tol", type=float, default=None)
        p.add_argument("--format", dest="output_format", choices=("csv", "json", "svg"), default=None)
        p.add_argument("--out", dest="output_path", default=None)
        p.add_argument("--config", dest="config_path", default=None)
    args = parser.parse_args(argv)

    cfg = _read_config_file(args.config_path) if args.config_path else {}
    L = _merge(args.L, cfg, "L")
    lam = _merge(args.lam, cfg, "lambda")
    lam_min = _merge(args.lambda_min, cfg, "lambda-min")
    lam_max = _merge(args.lambda_max, cfg, "lambda-max")
    a_min = _merge(args.alpha_min, cfg, "alpha-min")
    a_max = _merge(args.alpha_max, cfg, "alpha-max")
    n = _merge(args.n, cfg, "n")
    tol = _merge(args.tol, cfg, "tol")
    out_format = _merge(args.output_format, cfg, "format")
    out_path = _merge(args.output_path, cfg, "out")
    if out_format is not None and out_format not in ("csv", "json", "svg"):
        raise ConfigError(f"unknown format {out_format!r}")

    lambda_range = None
    if lam_min is not None or lam_max is not None:
        if lam_min is None or lam_max is None:
            raise ConfigError("--lambda-min and --lambda-max must be given together")
        lambda_range = (lam_min, lam_max, n if n is not None else 200)
    alpha_range = None
    if a_min is not None or a_max is not None:
        if a_min is None or a_max is None:
            raise ConfigError("--alpha-min and --alpha-max must be given together")
        alpha_range = (a_min, a_max, n if n is not None else 50)
    if lambda_range is None and n is not None and args.command in ("gcurve", "diagram"):
        lambda_range = (None, None, n)  # placeholder; filled per command
    if alpha_range is None and n is not None and args.command == "timemap":
        alpha_range = (None, None, n)

    return RunConfig(
        command=args.command,
        L=L,
        lam=lam,
        lambda_range=lambda_range,
        alpha_range=alpha_range,
        tol=tol if tol is not None else 1e-10,
        output_format=out_format if out_format is not None else "csv",
        output_path=out_path,
    )


def _emit(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _csv(rows: List[List[str]], header: str) -> str:
    return "\n".join([header] + [",".join(r) for r in rows]) + "\n"


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _require(config: RunConfig, **fields) -> None:
    for name, value in fields.items():
        if value is None:
            raise ConfigError(f"command {config.command!r} requires --{name}")


def _run_timemap(config: RunConfig) -> str:
    _require(config, **{"lambda": config.lam})
    a_lim = alpha_limit(config.lam)
    if config.alpha_range is None:
        lo, hi, n = 0.02 * a_lim, a_lim, 50
    else:
        lo, hi, n = config.alpha_range
        lo = 0.02 * a_lim if lo is None else lo
        hi = a_lim if hi is None else hi
    if not (0.0 < lo <= hi <= a_lim):
        raise DomainError(
            f"alpha range [{lo!r}, {hi!r}] must sit inside (0, {a_lim!r}]"
        )
    if n < 1:
        raise ConfigError("--n must be at least 1")
    tol = config.tol
    samples = [
        sample_time_map(float(a), config.lam, abs_tol=tol, rel_tol=tol)
        for a in np.linspace(lo, hi, int(n))
    ]
    if config.output_format == "json":
        rows = [
            [
                _jnum(s.alpha),
                _jnum(s.T),
                None if s.T_prime is None else _jnum(s.T_prime),
                None if s.T_second is None else _jnum(s.T_second),
            ]
            for s in samples
        ]
        return _json_text({"lambda": _jnum(config.lam), "rows": rows})
    rows = [
        [
            _fmt(s.alpha),
            _fmt(s.T),
            "" if s.T_prime is None else _fmt(s.T_prime),
            "" if s.T_second is None else _fmt(s.T_second),
        ]
        for s in samples
    ]
    return _csv(rows, "alpha,T,T_prime,T_second")


def _run_gcurve(config: RunConfig) -> str:
    if config.lambda_range is None:
        lo, hi, n = 0.01, 10.0, 200
    else:
        lo, hi, n = config.lambda_range
        lo = 0.01 if lo is None else lo
        hi = 10.0 if hi is None else hi
    if not (0.0 < lo < hi):
        raise DomainError("need 0 < lambda-min < lambda-max")
    if n < 2:
        raise ConfigError("--n must be at least 2")
    grid = np.geomspace(lo, hi, int(n))
    triples = [(float(x), g_closed(float(x)), g_prime(float(x))) for x in grid]
    if config.output_format == "json":
        return _json_text(
            {"rows": [[_jnum(x), _jnum(g), _jnum(dg)] for x, g, dg in triples]}
        )
    return _csv(
        [[_fmt(x), _fmt(g), _fmt(dg)] for x, g, dg in triples], "lambda,g,g_prime"
    )


def _run_lstar(config: RunConfig) -> str:
    c, l_star = compute_L_star(config.tol)
    if config.output_format == "json":
        return _json_text({"c": _jnum(c), "L_star": _jnum(l_star)})
    return _csv([[_fmt(c), _fmt(l_star)]], "c,L_star")


def _critical_payload(L: float, tol: float) -> dict:
    cs = critical_set(L, tol)
    critical = {}
    if cs.lambda_low is not None:
        critical["lambda_low"] = _jnum(cs.lambda_low)
    if cs.lambda_mid is not None:
        critical["lambda_mid"] = _jnum(cs.lambda_mid)
    critical["lambda_sup"] = _jnum(cs.lambda_sup)
    return {"L": _jnum(L), "regime": cs.regime, "critical": critical}


def _run_critical(config: RunConfig) -> str:
    _require(config, L=config.L)
    payload = _critical_payload(config.L, config.tol)
    if config.output_format == "json":
        return _json_text(payload)
    crit = payload["critical"]
    row = [
        _fmt(payload["L"]),
        payload["regime"],
        _fmt(crit["lambda_low"]) if "lambda_low" in crit else "",
        _fmt(crit["lambda_mid"]) if "lambda_mid" in crit else "",
        _fmt(crit["lambda_sup"]),
    ]
    return _csv([row], "L,regime,lambda_low,lambda_mid,lambda_sup")


def _diagram_rows_csv(diagram: BifurcationDiagram) -> str:
    rows = []
    for lam, alphas in diagram.rows:
        first = _fmt(alphas[0]) if len(alphas) > 0 else ""
        second = _fmt(alphas[1]) if len(alphas) > 1 else ""
        rows.append([_fmt(lam), first, second])
    return _csv(rows, "lambda,alpha_1,alpha_2")


def _svg_text(diagram: BifurcationDiagram) -> str:
    if not diagram.rows:
        raise DomainError("cannot render an empty diagram")
    width, height = 800, 600
    ml, mr, mt, mb = 70, 20, 20, 50
    plot_w, plot_h = width - ml - mr, height - mt - mb
    lams = [lam for lam, _ in diagram.rows]
    x_lo, x_hi = np.log(min(lams)), np.log(max(lams))
    if x_hi == x_lo:
        x_hi = x_lo + 1.0
    all_alphas = [a for _, alphas in diagram.rows for a in alphas]
    y_hi = 1.05 * max(all_alphas) if all_alphas else 1.0

    def px(lam: float) -> float:
        return ml + (np.log(lam) - x_lo) / (x_hi - x_lo) * plot_w

    def py(alpha: float) -> float:
        return mt + (1.0 - alpha / y_hi) * plot_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{ml}" y1="{mt + plot_h}" x2="{ml + plot_w}" y2="{mt + plot_h}" '
        'stroke="black" stroke-width="1"/>',
        f'<line x1="{ml}" y1="{mt}" x2="{ml}" y2="{mt + plot_h}" '
        'stroke="black" stroke-width="1"/>',
    ]
    for frac in (0.0, 0.25, 0.5, 0.75, 1.0):
        lam = float(np.exp(x_lo + frac * (x_hi - x_lo)))
        x = px(lam)
        parts.append(
            f'<line x1="{x:.2f}" y1="{mt + plot_h}" x2="{x:.2f}" y2="{mt + plot_h + 5}" '
            'stroke="black" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{x:.2f}" y="{mt + plot_h + 20}" font-size="11" '
            f'text-anchor="middle" font-family="monospace">{_fmt(lam)}</text>'
        )
        alpha = frac * y_hi
        y = py(alpha)
        parts.append(
            f'<line x1="{ml - 5}" y1="{y:.2f}" x2="{ml}" y2="{y:.2f}" '
            'stroke="black" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{ml - 8}" y="{y + 4:.2f}" font-size="11" '
            f'text-anchor="end" font-family="monospace">{_fmt(alpha)}</text>'
        )
    parts.append(
        f'<text x="{ml + plot_w / 2:.2f}" y="{height - 12}" font-size="13" '
        'text-anchor="middle" font-family="monospace">lambda</text>'
    )
    parts.append(
        f'<text x="18" y="{mt + plot_h / 2:.2f}" font-size="13" text-anchor="middle" '
        f'font-family="monospace" transform="rotate(-90 18 {mt + plot_h / 2:.2f})">'
        "max deflection</text>"
    )
    parts.append(
        f'<text x="{ml + plot_w / 2:.2f}" y="{mt + 2}" font-size="13" '
        f'text-anchor="middle" font-family="monospace">branch diagram, L={_fmt(diagram.L)}</text>'
    )

    colors = ("#1f77b4", "#d62728")
    for branch in (0, 1):
        run: List[str] = []
        prev_count = None
        for lam, alphas in diagram.rows:
            count = len(alphas)
            if count != prev_count and run:
                if len(run) > 1:
                    parts.append(
                        f'<polyline points="{" ".join(run)}" fill="none" '
                        f'stroke="{colors[branch]}" stroke-width="1.5"/>'
                    )
                run = []
            if count > branch:
                run.append(f"{px(lam):.2f},{py(alphas[branch]):.2f}")
            prev_count = count
        if len(run) > 1:
            parts.append(
                f'<polyline points="{" ".join(run)}" fill="none" '
                f'stroke="{colors[branch]}" stroke-width="1.5"/>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def emit_diagram_svg(diagram: BifurcationDiagram, path: str) -> None:
    """Write the diagram as a standalone 800x600 SVG file."""
    text = _svg_text(diagram)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _run_diagram(config: RunConfig) -> str:
    _require(config, L=config.L)
    if config.lambda_range is None or config.lambda_range[0] is None:
        raise ConfigError("command 'diagram' requires --lambda-min and --lambda-max")
    lo, hi, n = config.lambda_range
    diagram = sweep_diagram(config.L, lo, hi, int(n))
    if config.output_format == "svg":
        return _svg_text(diagram)
    if config.output_format == "json":
        payload = _critical_payload(config.L, config.tol)
        payload["rows"] = [
            {"lambda": _jnum(lam), "alphas": [_jnum(a) for a in alphas]}
            for lam, alphas in diagram.rows
        ]
        return _json_text(payload)
    return _diagram_rows_csv(diagram)


def _run_solve(config: RunConfig) -> str:
    _require(config, L=config.L, **{"lambda": config.lam})
    alphas = solve_alphas(config.lam, config.L, max(config.tol, 1e-12))
    if config.output_format == "json":
        return _json_text(
            {
                "L": _jnum(config.L),
                "lambda": _jnum(config.lam),
                "alphas": [_jnum(a) for a in alphas],
            }
        )
    first = _fmt(alphas[0]) if len(alphas) > 0 else ""
    second = _fmt(alphas[1]) if len(alphas) > 1 else ""
    return _csv([[_fmt(config.lam), first, second]], "lambda,alpha_1,alpha_2")


def run(config: RunConfig) -> int:
    """Execute one configured command; returns the process exit code."""
    try:
        if config.command == "verify":
            lines = []
            all_ok = True
            for name, fn in CHECKS:
                ok, msg = fn()
                all_ok &= ok
                lines.append(f"{'PASS' if ok else 'FAIL'} {name}: {msg}")
            _emit("\n".join(lines) + "\n", config.output_path)
            return 0 if all_ok else 1
        if config.output_format == "svg" and config.command != "diagram":
            raise ConfigError("svg output is only available for the diagram command")
        runners = {
            "timemap": _run_timemap,
            "gcurve": _run_gcurve,
            "lstar": _run_lstar,
            "critical": _run_critical,
            "diagram": _run_diagram,
            "solve": _run_solve,
        }
        text = runners[config.command](config)
        _emit(text, config.output_path)
        return 0
    except (ConfigError, DomainError, RegimeError, BadBracket, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (NonConvergence, NonFinite) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        config = parse_args(argv)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
