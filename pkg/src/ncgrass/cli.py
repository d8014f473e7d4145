"""Command-line entry point.

Exit codes: 0 when no check failed, 1 when some check failed, 2 on a
configuration error (reported before any suite runs).
"""

from __future__ import annotations

import argparse
import configparser
import os
import sys
from typing import Dict, List, Optional

from .report import ConfigError, SuiteConfig, parse_dims, render, run
from .suites import SUITES

SEED_ENV = "NCGRASS_SEED"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ncgrass", description="Run exact identity verification suites.")
    p.add_argument("--suite", choices=SUITES + ("all",), help="suite to run (default: all)")
    p.add_argument("--seed", type=int, help="64-bit seed (default: $%s or 0)" % SEED_ENV)
    p.add_argument("--dims", help="comma list of n:d pairs, e.g. 4:2,5:3")
    p.add_argument("--trials", type=int, help="random trials per size")
    p.add_argument("--max-n", dest="max_n", type=int, help="largest square quantum context")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--format", choices=("json", "text"))
    p.add_argument("--config", help="key = value file; command-line flags take precedence")
    p.add_argument("--timing", action="store_true", default=None,
                   help="record elapsed_ms (makes the report run-dependent)")
    p.add_argument("--jobs", type=int, help="worker processes, one suite each")
    return p


def read_config_file(path: str) -> Dict[str, str]:
    parser = configparser.ConfigParser()
    try:
        with open(path) as fh:
            parser.read_string("[run]\n" + fh.read())
    except (OSError, configparser.Error) as exc:
        raise ConfigError("cannot read config file %s: %s" % (path, exc)) from exc
    return {k.replace("-", "_"): v for k, v in parser["run"].items()}


def _int(value, key: str) -> int:
    try:
        return int(value)
    except (TypeError, ValueError) as exc:
        raise ConfigError("%s must be an integer, got %r" % (key, value)) from exc


def config_from_args(args: argparse.Namespace, environ=os.environ) -> SuiteConfig:
    values: Dict[str, object] = {}
    if args.config:
        values.update(read_config_file(args.config))
    for key in ("suite", "seed", "dims", "trials", "max_n", "out", "format", "timing", "jobs"):
        v = getattr(args, key)
        if v is not None:
            values[key] = v
    cfg = SuiteConfig()
    known = set(cfg.__dataclass_fields__)
    unknown = set(values) - known
    if unknown:
        raise ConfigError("unknown config keys: %s" % ", ".join(sorted(unknown)))
    if "seed" not in values and environ.get(SEED_ENV):
        values["seed"] = environ[SEED_ENV]
    for key in ("seed", "trials", "max_n", "jobs"):
        if key in values:
            setattr(cfg, key, _int(values[key], key))
    if "dims" in values:
        dims = values["dims"]
        cfg.dims = parse_dims(dims) if isinstance(dims, str) else list(dims)
    for key in ("suite", "out", "format"):
        if key in values:
            setattr(cfg, key, str(values[key]))
    if "timing" in values:
        t = values["timing"]
        cfg.timing = t if isinstance(t, bool) else str(t).lower() in ("1", "true", "yes", "on")
    return cfg


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        cfg.validate()
    except ConfigError as exc:
        print("config error: %s" % exc, file=sys.stderr)
        return 2
    report = run(cfg)
    doc = render(report, cfg.format)
    if cfg.out and cfg.out != "-":
        with open(cfg.out, "w") as fh:
            fh.write(doc)
    else:
        sys.stdout.write(doc)
    for c in report.failures():
        print("FAILED %s/%s [%s] %s" % (c.suite, c.identity, c.anchor, c.params), file=sys.stderr)
    return 0 if report.ok else 1


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
