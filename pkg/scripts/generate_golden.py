"""Regenerate the checked-in golden fixtures from closed forms.

All values are exact rationals over square roots, evaluated in double
precision and written with 15 significant digits.  Run from the repo
root:  python scripts/generate_golden.py
"""

import json
import math
import pathlib

S5 = math.sqrt(5)
ALPHA = math.acos(-5 + 2 * S5)
THETA = math.pi / 5
ROOT = math.sqrt(-11 + 5 * S5)

V_T = complex(2 * (S5 - 1), ROOT * (S5 + 1)) / math.sqrt(8)

OUT = pathlib.Path(__file__).resolve().parent.parent / "src" / "grover_decomp" / "golden"


def sig15(x: float) -> float:
    return float(f"{x:.15g}")


def entries(matrix) -> list:
    return [{"re": sig15(z.real), "im": sig15(z.imag)}
            for row in matrix for z in row]


def header(source: str) -> dict:
    return {"n": 3, "targets": [0], "k": 2,
            "alpha": sig15(ALPHA), "theta": sig15(THETA), "source": source}


def shortcut_matrix() -> list:
    rows = [[V_T / math.sqrt(8)] * 8]
    for i in range(1, 8):
        lead = math.sqrt((8 - i) / (9 - i))
        tail = -1.0 / math.sqrt((8 - i) * (9 - i))
        rows.append([0.0] * (i - 1) + [lead] + [tail] * (8 - i))
    return [[complex(z) for z in row] for row in rows]


def iterated_kernel_matrix() -> list:
    a = V_T / math.sqrt(8)
    b = complex(2 - 2 * S5, ROOT * (1 + S5)) / 8
    c = complex(610 - 274 * S5, ROOT * (137 - 55 * S5)) / 8
    d = complex(-102 + 46 * S5, -ROOT * (23 - 9 * S5)) / 8
    rows = [[a] * 8]
    for i in range(1, 8):
        rows.append([b] + [c if j == i else d for j in range(1, 8)])
    return rows


def final_state() -> list:
    return [[V_T] + [complex(0.0)] * 7]


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    files = {
        "shortcut_matrix_n3.json":
            (shortcut_matrix(), "closed-form shortcut matrix, n=3 single target"),
        "iterated_kernel_n3.json":
            (iterated_kernel_matrix(), "closed-form squared kernel, n=3 single target"),
        "final_state_n3.json":
            (final_state(), "closed-form exact final state, n=3 single target"),
    }
    for name, (matrix, source) in files.items():
        payload = header(source)
        payload["rows"] = len(matrix)
        payload["cols"] = len(matrix[0])
        payload["entries"] = entries(matrix)
        (OUT / name).write_text(json.dumps(payload, indent=1) + "\n")
        print(f"wrote {OUT / name}")


if __name__ == "__main__":
    main()
