"""Run configuration, report assembly and rendering.

JSON schema::

    {
      "summary": {"pass": int, "fail": int, "undefined": int, "degenerate": int, "total": int},
      "checks": [{"suite", "identity", "anchor", "params", "status", "elapsed_ms"}, ...],
      "config": {"suite", "seed", "dims", "trials", "max_n"},
      "version": str
    }

``checks`` is sorted by suite, identity and params, so the document only
depends on the configuration.  ``elapsed_ms`` is ``null`` unless timing was
requested.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from . import __version__
from .suites import STATUSES, SUITE_RUNNERS, SUITES, CheckRecord


class ConfigError(ValueError):
    pass


@dataclass
class SuiteConfig:
    suite: str = "all"
    seed: int = 0
    dims: List[Tuple[int, int]] = field(default_factory=lambda: [(3, 2), (4, 2), (5, 2), (4, 3), (5, 3)])
    trials: int = 10
    max_n: int = 3
    out: Optional[str] = None
    format: str = "json"
    timing: bool = False
    jobs: int = 1

    def validate(self) -> None:
        if self.suite != "all" and self.suite not in SUITES:
            raise ConfigError("unknown suite %r (choose from %s or all)" % (self.suite, ", ".join(SUITES)))
        if not 0 <= self.seed < 2 ** 64:
            raise ConfigError("seed must fit in 64 unsigned bits")
        if not self.dims:
            raise ConfigError("dims must name at least one n:d pair")
        for n, d in self.dims:
            if not 1 <= d < n:
                raise ConfigError("dims entry %d:%d needs 1 <= d < n" % (n, d))
        if self.trials < 0:
            raise ConfigError("trials must be non-negative")
        if self.max_n < 1:
            raise ConfigError("max_n must be at least 1")
        if self.format not in ("json", "text"):
            raise ConfigError("format must be json or text")
        if self.jobs < 1:
            raise ConfigError("jobs must be at least 1")
        if self.out not in (None, "-"):
            parent = os.path.dirname(os.path.abspath(self.out))
            if not os.path.isdir(parent):
                raise ConfigError("output directory %s does not exist" % parent)
            target = self.out if os.path.exists(self.out) else parent
            if os.path.isdir(self.out) or not os.access(target, os.W_OK):
                raise ConfigError("cannot write to %s" % self.out)

    def selected(self) -> List[str]:
        return list(SUITES) if self.suite == "all" else [self.suite]

    def echo(self) -> Dict:
        return {"suite": self.suite, "seed": self.seed, "dims": [list(nd) for nd in self.dims],
                "trials": self.trials, "max_n": self.max_n}


def parse_dims(text: str) -> List[Tuple[int, int]]:
    """``"4:2,5:3"`` -> ``[(4, 2), (5, 3)]``."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            n, d = part.split(":")
            out.append((int(n), int(d)))
        except ValueError as exc:
            raise ConfigError("bad dims entry %r; expected n:d" % part) from exc
    return out


@dataclass
class VerificationReport:
    checks: List[CheckRecord]
    config: Dict
    version: str = __version__

    def summary(self) -> Dict[str, int]:
        counts = {s: 0 for s in STATUSES}
        for c in self.checks:
            counts[c.status] += 1
        counts["total"] = len(self.checks)
        return counts

    @property
    def ok(self) -> bool:
        return self.summary()["fail"] == 0

    def failures(self) -> List[CheckRecord]:
        return [c for c in self.checks if c.status == "fail"]


def _sortable(v):
    if v is None:
        return (0,)
    if isinstance(v, bool):
        return (1, int(v))
    if isinstance(v, (int, float)):
        return (1, v)
    if isinstance(v, str):
        return (2, v)
    if isinstance(v, (list, tuple)):
        return (3, tuple(_sortable(x) for x in v))
    return (4, json.dumps(v, sort_keys=True))


# tally counts are outcomes, not coordinates, so they do not take part in ordering
_COUNT_KEYS = ("instances", "undefined")


def record_key(c: CheckRecord):
    coords = sorted((k, v) for k, v in c.params.items() if k not in _COUNT_KEYS)
    return (c.suite, c.identity, tuple((k, _sortable(v)) for k, v in coords))


def _run_one(args):
    name, config = args
    return SUITE_RUNNERS[name](config)


def run(config: SuiteConfig) -> VerificationReport:
    config.validate()
    names = config.selected()
    if config.jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            chunks = list(pool.map(_run_one, [(n, config) for n in names]))
    else:
        chunks = [_run_one((n, config)) for n in names]
    checks = sorted((c for chunk in chunks for c in chunk), key=record_key)
    return VerificationReport(checks, config.echo())


def render(report: VerificationReport, format: str = "json") -> str:
    if format == "json":
        doc = {"summary": report.summary(), "checks": [c.as_dict() for c in report.checks],
               "config": report.config, "version": report.version}
        return json.dumps(doc, indent=1) + "\n"
    if format == "text":
        return _render_text(report)
    raise ValueError("format must be json or text")


def _render_text(report: VerificationReport) -> str:
    rows = [("suite", "identity", "status", "params")]
    for c in report.checks:
        params = " ".join("%s=%s" % (k, _compact(v)) for k, v in sorted(c.params.items()))
        rows.append((c.suite, c.identity, c.status, params))
    widths = [max(len(r[k]) for r in rows) for k in range(3)]
    lines = ["  ".join(r[k].ljust(widths[k]) for k in range(3)) + "  " + r[3] for r in rows]
    s = report.summary()
    lines.append("")
    lines.append("total %(total)d: %(pass)d pass, %(fail)d fail, %(undefined)d undefined, "
                 "%(degenerate)d degenerate" % s)
    for c in report.failures():
        lines.append("FAILED %s/%s [%s] %s" % (c.suite, c.identity, c.anchor, _compact(c.params)))
    return "\n".join(lines) + "\n"


def _compact(v) -> str:
    if isinstance(v, (list, tuple)):
        return "(" + ",".join(_compact(x) for x in v) + ")"
    if isinstance(v, dict):
        return "{" + ",".join("%s=%s" % (k, _compact(x)) for k, x in sorted(v.items())) + "}"
    return str(v)
