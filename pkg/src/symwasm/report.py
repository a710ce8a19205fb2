"""JSON report: one file per terminal state plus a run summary."""

import collections
import json
import os

from symwasm._kernels import BACKEND


def summarize(engine, solutions):
    kinds = collections.Counter(s.status["kind"] for s in solutions)
    traps = collections.Counter(s.status.get("detail") for s in solutions
                                if s.status["kind"] == "trapped")
    return {
        "paths": len(solutions),
        "status": dict(sorted(kinds.items())),
        "traps": dict(sorted(traps.items())),
        "instructions": sum(s.instructions for s in solutions),
        "cache": engine.solver.stats(),
        "export_solves": engine.export_solves,
        "explore_time": round(engine.stats.get("explore_time", 0.0), 6),
        "wall_time": round(engine.stats.get("wall_time", 0.0), 6),
        "selector": engine.config.selector,
        "seed": engine.config.seed,
        "kernels": BACKEND,
    }


def write_report(out_dir, solutions, summary):
    """Write ``<out_dir>/<n>.json`` for each solution and ``summary.json``."""
    os.makedirs(out_dir, exist_ok=True)
    for n, sol in enumerate(solutions):
        with open(os.path.join(out_dir, f"{n}.json"), "w") as f:
            json.dump(sol.to_json(), f, indent=2)
            f.write("\n")
    with open(os.path.join(out_dir, "summary.json"), "w") as f:
        json.dump(summary, f, indent=2)
        f.write("\n")
