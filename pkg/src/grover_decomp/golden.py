"""Checked-in golden fixtures: closed-form matrices and states for the
n=3 single-target exact search (k=2).

Fixture files are JSON with a header {n, targets, k, alpha, theta,
source} and row-major entries as {re, im} pairs; regenerate with
scripts/generate_golden.py.
"""

import json
from importlib import resources

import numpy as np

_FILES = {
    "shortcut_matrix": "shortcut_matrix_n3.json",
    "iterated_kernel": "iterated_kernel_n3.json",
    "final_state": "final_state_n3.json",
}


def load_fixture(name: str) -> dict:
    """Return the parsed fixture; `matrix` holds the complex array."""
    path = resources.files("grover_decomp") / "golden" / _FILES[name]
    payload = json.loads(path.read_text())
    entries = np.array([complex(e["re"], e["im"])
                        for e in payload["entries"]])
    payload["matrix"] = entries.reshape(payload["rows"], payload["cols"])
    return payload
