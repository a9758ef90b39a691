#!/usr/bin/env python3
"""Check that CLI report output validates against the published JSON schemas.

Usage: validate_schema.py <genera-binary> <docs-dir>
Exits 0 on success, 1 on any schema violation, 77 (ctest skip) if the
jsonschema package is unavailable.
"""

import json
import subprocess
import sys

try:
    from jsonschema import Draft202012Validator
except ImportError:
    print("jsonschema not installed; skipping")
    sys.exit(77)

GENERA, DOCS = sys.argv[1], sys.argv[2]

scenario_schema = json.load(open(f"{DOCS}/scenario.schema.json"))
report_schema = json.load(open(f"{DOCS}/report.schema.json"))
Draft202012Validator.check_schema(scenario_schema)
Draft202012Validator.check_schema(report_schema)
report_v = Draft202012Validator(report_schema)
scenario_v = Draft202012Validator(scenario_schema)

CASES = [
    ("genus", '{"space":{"type":"cp","n":2},"genus":"signature"}'),
    ("genus", '{"space":{"type":"hypersurface","m":2,"d":4},"genus":"loop_signature"}'),
    ("genus", '{"space":{"type":"cp","n":2},"genus":"chi_y","y":{"minus_zeta_pow":[3,1]}}'),
    ("genus", '{"space":{"type":"cp","n":2},"genus":"chi_y"}'),
    ("genus", '{"space":{"type":"hypersurface","m":2,"d":4},"genus":"cusp_values","level":2}'),
    ("genus", '{"space":{"type":"cp","n":3},"genus":"level_n_loop","level":2}'),
    ("genus", '{"space":{"type":"cp","n":5},"genus":"level_n_cusp","level":3,"alpha":1,"beta":0}'),
    ("genus", '{"space":{"type":"cp","n":3},"genus":"todd","bundle":{"line":[-2]}}'),
    ("genus", '{"space":{"type":"product","factors":[{"type":"cp","n":1},'
              '{"type":"cp","n":2}]},"genus":"signature"}'),
    ("genus", '{"space":{"type":"cp","n":3},"genus":"todd","bundle":{"extpower":[2,"T"]}}'),
    ("genus", '{"space":{"type":"cp","n":3},"genus":"dirac_cusp"}'),
    ("equivariant", '{"space":{"type":"cp","n":2},'
                    '"action":{"type":"linear_cp","weights":[0,1,2]},"genus":"signature"}'),
    ("equivariant", '{"space":{"type":"cp","n":2},"action":{"type":"linear_cp",'
                    '"weights":[0,1,2]},"genus":"signature","bundle":"T_C"}'),
    ("equivariant", '{"space":{"type":"cp","n":3},"action":{"type":"linear_cp",'
                    '"weights":[0,1,2,3]},"genus":"loop_signature","options":{"q_order":2}}'),
    ("equivariant", '{"space":{"type":"cp","n":3},"action":{"type":"linear_cp",'
                    '"weights":[0,1,3,7]},"genus":"ahat"}'),
    ("equivariant", '{"space":{"type":"cp","n":5},"action":{"type":"linear_cp",'
                    '"weights":[0,1,2,3,4,5]},"genus":"level_n_loop","level":3,'
                    '"options":{"q_order":1}}'),
    ("equivariant", '{"space":{"type":"cp","n":2},"action":{"type":"linear_cp",'
                    '"weights":[0,1,2]},"genus":"chi_y","y":{"minus_zeta_pow":[3,1]}}'),
]

failures = 0
for command, scenario in CASES:
    run = subprocess.run([GENERA, command, scenario], capture_output=True, text=True)
    if run.returncode != 0:
        print(f"FAIL run ({run.returncode}): {command} {scenario}\n  {run.stderr.strip()}")
        failures += 1
        continue
    report = json.loads(run.stdout)
    errors = list(report_v.iter_errors(report))
    errors += list(scenario_v.iter_errors(report["scenario"]))
    if errors:
        failures += 1
        print(f"FAIL schema: {command} {scenario}")
        for e in errors[:3]:
            print(f"  at {list(e.absolute_path)}: {e.message[:160]}")
    else:
        print(f"ok {command} {scenario[:64]}")

for suite in ["classical", "vanishing", "structure"]:
    run = subprocess.run([GENERA, "verify", suite], capture_output=True, text=True)
    report = json.loads(run.stdout)
    errors = list(report_v.iter_errors(report))
    for check in report["checks"]:
        if "counterexample" in check:
            errors += list(scenario_v.iter_errors(check["counterexample"]))
    if errors or run.returncode != 0:
        failures += 1
        print(f"FAIL verify {suite} ({run.returncode})")
        for e in errors[:3]:
            print(f"  at {list(e.absolute_path)}: {e.message[:160]}")
    else:
        print(f"ok verify {suite}")

sys.exit(1 if failures else 0)
