"""Command-line driver.

    sl2n-howe verify --n 2 --a1 1/2 --a2 1/3
    sl2n-howe hwv --n 3 --a1 1/2 --a2 1/3 --b 0 --c 2 --oracle
    sl2n-howe branch --n 2 --a1 1/2 --a2 1/2
    sl2n-howe series --n 3 --a1 3/2 --a2 1/2 --b -1
    sl2n-howe table --n 3 --a1 3/2 --a2 1/2 --variant ss --format md

Exit status: 0 success, 1 a verification failed, 2 invalid configuration.
Reports go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional

from .branching import build_table, series_detail
from .exactnum import format_scalar, is_integer, parse_rational
from .singular import StructuralError, hwv_bruteforce, hwv_closed_form, hwv_to_json, singular_kernel
from .suite import SuiteConfig, run_suite
from .weylmodule import ModuleParams

log = logging.getLogger("sl2n_howe")

COMMANDS = ("verify", "hwv", "branch", "series", "table")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    n: int = 2
    a1: Fraction = Fraction(1, 2)
    a2: Fraction = Fraction(1, 3)
    b_min: int = -3
    b_max: int = 3
    c_max: int = 4
    depth: int = 5
    box: int = 3
    samples: int = 30
    seed: int = 0
    format: str = "json"
    variant: str = "plain"
    oracle: bool = False
    b: int = 0
    c: int = 0
    workers: int = 1

    @property
    def params(self) -> ModuleParams:
        return ModuleParams(self.n, self.a1, self.a2)

    def suite_config(self) -> SuiteConfig:
        return SuiteConfig(
            n=self.n,
            a1=self.a1,
            a2=self.a2,
            b_min=self.b_min,
            b_max=self.b_max,
            c_max=self.c_max,
            depth=self.depth,
            box=self.box,
            samples=self.samples,
            seed=self.seed,
        )


def parse_parameter(text: str) -> Fraction:
    try:
        value = parse_rational(text)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    if is_integer(value):
        raise ConfigError(f"parameter must be a non-integer rational, got {text!r}")
    return value


_INT_KEYS = ("n", "b_min", "b_max", "c_max", "depth", "box", "samples", "seed", "b", "c", "workers")


def read_config_file(path: str) -> Dict[str, str]:
    """key=value lines; '#' starts a comment; keys mirror the long flags."""
    out = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config file: {exc}") from None
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        out[key.lstrip("-").replace("-", "_")] = value
    return out


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sl2n-howe", description=__doc__.split("\n\n")[0])
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--config", help="key=value file; flags override it")
    ap.add_argument("--n", type=int)
    ap.add_argument("--a1")
    ap.add_argument("--a2")
    ap.add_argument("--b-min", type=int)
    ap.add_argument("--b-max", type=int)
    ap.add_argument("--c-max", type=int)
    ap.add_argument("--depth", type=int)
    ap.add_argument("--box", type=int)
    ap.add_argument("--samples", type=int)
    ap.add_argument("--seed", type=int)
    ap.add_argument("--format", choices=("json", "md"))
    ap.add_argument("--variant", choices=("plain", "s", "ss"))
    ap.add_argument("--oracle", action="store_true", default=None)
    ap.add_argument("--b", type=int)
    ap.add_argument("--c", type=int)
    ap.add_argument("--workers", type=int, help="worker processes for independent cells")
    return ap


def make_config(argv: Optional[List[str]] = None) -> RunConfig:
    ap = build_parser()
    ns = ap.parse_args(argv)
    raw: Dict[str, object] = {}
    if ns.config:
        raw.update(read_config_file(ns.config))
    for f in fields(RunConfig):
        v = getattr(ns, f.name, None)
        if v is not None:
            raw[f.name] = v
    raw["command"] = ns.command
    known = {f.name for f in fields(RunConfig)}
    unknown = set(raw) - known
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    try:
        for key in _INT_KEYS:
            if key in raw:
                raw[key] = int(raw[key])
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    for key in ("a1", "a2"):
        if key in raw:
            raw[key] = parse_parameter(str(raw[key]))
    if isinstance(raw.get("oracle"), str):
        raw["oracle"] = raw["oracle"].lower() in ("1", "true", "yes", "on")
    cfg = RunConfig(**raw)
    if cfg.n < 2:
        raise ConfigError("n must be >= 2")
    if cfg.b_min > cfg.b_max:
        raise ConfigError("b_min must be <= b_max")
    for key in ("c_max", "depth", "box", "samples", "c"):
        if getattr(cfg, key) < 0:
            raise ConfigError(f"{key} must be >= 0")
    if cfg.depth < 1:
        raise ConfigError("depth must be >= 1")
    if cfg.format not in ("json", "md") or cfg.variant not in ("plain", "s", "ss"):
        raise ConfigError("bad format or variant")
    return cfg


def _header(cfg: RunConfig) -> Dict:
    p = cfg.params
    return {
        "command": cfg.command,
        "seed": cfg.seed,
        "params": {"n": p.n, "a1": format_scalar(p.a1), "a2": format_scalar(p.a2), "generic": p.generic},
    }


def _md_header(cfg: RunConfig) -> List[str]:
    p = cfg.params
    return [
        f"# {cfg.command}",
        "",
        f"seed {cfg.seed}; n={p.n}, a1={format_scalar(p.a1)}, a2={format_scalar(p.a2)} "
        f"({'generic' if p.generic else 'non-generic'})",
        "",
    ]


def cmd_verify(cfg: RunConfig):
    checks = run_suite(cfg.suite_config(), workers=cfg.workers)
    ok = all(c.passed for c in checks)
    report = _header(cfg)
    report["config"] = cfg.suite_config().to_json()
    report["checks"] = [c.to_json() for c in checks]
    report["pass"] = ok
    if cfg.format == "md":
        lines = _md_header(cfg) + ["| check | status | detail |", "|---|---|---|"]
        lines += [f"| {c.name} | {'pass' if c.passed else 'FAIL'} | {c.detail} |" for c in checks]
        return "\n".join(lines) + "\n", ok
    return report, ok


def cmd_hwv(cfg: RunConfig):
    p = cfg.params
    v = hwv_closed_form(p, (cfg.b, cfg.c))
    report = _header(cfg)
    report["hwv"] = hwv_to_json(p, (cfg.b, cfg.c), v)
    ok = True
    if cfg.oracle:
        dim = len(singular_kernel(p, (cfg.b, cfg.c)))
        try:
            match = hwv_bruteforce(p, (cfg.b, cfg.c)) == v
        except StructuralError as exc:
            log.error("%s", exc)
            match = False
        report["oracle"] = {"kernel_dim": dim, "match": match}
        ok = match
    if cfg.format == "md":
        lines = _md_header(cfg) + [f"x({cfg.b},{cfg.c}) = sum over k of coeff * x_k:", "", "| k | coeff |", "|---|---|"]
        lines += [f"| {t['k']} | {t['coeff']} |" for t in report["hwv"]["terms"]]
        if cfg.oracle:
            lines += ["", f"kernel dimension {report['oracle']['kernel_dim']}, oracle match: {report['oracle']['match']}"]
        return "\n".join(lines) + "\n", ok
    return report, ok


def _table(cfg: RunConfig, variant: str):
    b_range = range(cfg.b_min, cfg.b_max + 1)
    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            rep = build_table(cfg.params, b_range, cfg.c_max, variant, cfg.depth, map_fn=pool.map)
    else:
        rep = build_table(cfg.params, b_range, cfg.c_max, variant, cfg.depth)
    if cfg.format == "md":
        return "\n".join(_md_header(cfg)) + rep.to_markdown(), rep.passed
    report = _header(cfg)
    report.update(rep.to_json())
    report["pass"] = rep.passed
    return report, rep.passed


def cmd_branch(cfg: RunConfig):
    return _table(cfg, "plain")


def cmd_table(cfg: RunConfig):
    return _table(cfg, cfg.variant)


def cmd_series(cfg: RunConfig):
    d = series_detail(cfg.params, cfg.b, cfg.depth)
    if cfg.format == "md":
        lines = _md_header(cfg) + [
            f"b={d['b']}, regime {d['regime']}, critical value {d['critical_value']}",
            "",
            f"- a-module U(a)x(b,0): {json.dumps(d['a_module'])}",
            f"- b-module U(b)x(b,0): {json.dumps(d['b_module'])}",
            "",
        ]
        lines += [f"- {c['name']}: {'pass' if c['pass'] else 'FAIL'} {c['detail']}" for c in d["checks"]]
        return "\n".join(lines) + "\n", d["pass"]
    report = _header(cfg)
    report["series"] = d
    report["pass"] = d["pass"]
    return report, d["pass"]


HANDLERS = {"verify": cmd_verify, "hwv": cmd_hwv, "branch": cmd_branch, "series": cmd_series, "table": cmd_table}


def render(report) -> str:
    if isinstance(report, str):
        return report
    return json.dumps(report, indent=2) + "\n"


def run(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    report, ok = HANDLERS[cfg.command](cfg)
    out.write(render(report))
    if not ok:
        log.error("%s: verification failed", cfg.command)
    return 0 if ok else 1


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        cfg = make_config(argv)
        return run(cfg)
    except ConfigError as exc:
        print(f"sl2n-howe: invalid configuration: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # argparse usage errors
        return 2 if exc.code not in (0, None) else 0


if __name__ == "__main__":
    sys.exit(main())
