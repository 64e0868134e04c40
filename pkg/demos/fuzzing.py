"""
Move-invariance battery
=======================

Random diagrams, every applicable move, and a check that nothing the theory
says is invariant actually moves.
"""

import json
import time

from welded.fuzz import run_battery

t = time.perf_counter()
report = run_battery(200, seed=1)
print(json.dumps(report.to_json(), indent=2))
print(f"{time.perf_counter() - t:.1f} s")
