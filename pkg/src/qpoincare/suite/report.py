"""Machine-readable run reports."""

from __future__ import annotations

import json
from collections import Counter

from .registry import CheckReport, RunConfig

__all__ = ["run_document", "dumps_report", "summary_line"]


def _config_dict(config: RunConfig) -> dict:
    caps = config.caps
    return {
        "mode": config.mode,
        "samples": config.samples,
        "seed": config.seed,
        "precedence": config.precedence,
        "withT": config.with_t,
        "caps": None if caps is None else {"maxDegree": caps.max_degree, "maxSteps": caps.max_steps},
    }


def run_document(reports: list[CheckReport], config: RunConfig, timing: bool = True) -> dict:
    counts = Counter(r.status for r in reports)
    certs = {}
    for r in reports:
        certs.update(r.certificates)
    return {
        "config": _config_dict(config),
        "summary": {"total": len(reports), "pass": counts.get("pass", 0),
                    "fail": counts.get("fail", 0), "inconclusive": counts.get("inconclusive", 0),
                    "allPassed": all(r.passed for r in reports)},
        "checks": [r.to_dict(timing) for r in reports],
        "certificates": {k: certs[k] for k in sorted(certs)},
    }


def dumps_report(reports: list[CheckReport], config: RunConfig, timing: bool = True) -> str:
    """JSON text; with ``timing=False`` identical configs give identical bytes."""
    return json.dumps(run_document(reports, config, timing), indent=2, sort_keys=True) + "\n"


def summary_line(r: CheckReport) -> str:
    tail = ""
    if r.status != "pass":
        w = r.witness
        tail = f"  witness: {json.dumps(w, sort_keys=True, default=str)[:300]}" if w is not None else ""
    return f"{r.status.upper():<12} {r.name:<34} {r.mode:<8} {r.wall_millis:>7} ms{tail}"
