"""Regenerate audit_records.json.  Run once; the output is frozen into the test suite.

    python tests/fixtures/generate_fixtures.py
"""

import json
from pathlib import Path

from arcorder.audit import (
    AuditConfig,
    TrialRecord,
    power_range,
    trial_closure,
    trial_theorem1,
    trial_theorem2,
    trial_theorem3,
    trial_theorem4,
)
from arcorder.graph import cycle_graph, serialize_graph, star_graph

CASES = {"C4": cycle_graph(4), "K13": star_graph(3)}


def records_for(g, cfg):
    out = []
    for reading in cfg.readings:
        out.extend(trial_theorem1(g, reading, cfg))
        out.extend(trial_theorem3(g, reading, cfg))
        for k in power_range(g, cfg.max_k):
            out.append(trial_theorem2(g, k, reading, cfg))
            out.append(trial_theorem4(g, k, reading, cfg))
            out.append(trial_closure(g, k, reading, cfg))
    return sorted(out, key=TrialRecord.sort_key)


def main():
    cfg = AuditConfig()
    data = {
        name: {"graph": serialize_graph(g), "lines": [r.line() for r in records_for(g, cfg)]}
        for name, g in CASES.items()
    }
    path = Path(__file__).with_name("audit_records.json")
    path.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
