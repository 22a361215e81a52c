"""0/1 integer program export (LP file format) and a brute-force checker for it.

Variables ``y0 .. y{n-1}`` select vertices.  The objective is their sum and
every element pair ``j < l`` of the variant's universe gives a row
``sum_i |D[i, j] - D[i, l]| y_i >= 1`` named ``p_j_l`` (element positions).
"""

from __future__ import annotations

import itertools
import re

from .graph import DistanceTable, Graph, all_pairs_distances
from .metrics import Variant

_TERMS_PER_LINE = 8


def _expr(terms: list[tuple[int, str]]) -> list[str]:
    pieces = []
    for idx, (coef, var) in enumerate(terms):
        token = var if coef == 1 else f"{coef} {var}"
        pieces.append(token if idx == 0 else f"+ {token}")
    return [" ".join(pieces[k : k + _TERMS_PER_LINE]) for k in range(0, len(pieces), _TERMS_PER_LINE)]


def export_ilp(g: Graph, variant: Variant = Variant.MDIM, table: DistanceTable | None = None) -> str:
    t = table if table is not None else all_pairs_distances(g)
    D = t.matrix
    cols = variant.columns(g)
    names = [f"y{i}" for i in range(g.n)]
    out = [
        f"\\ {variant.value} model: n={g.n} m={g.m}",
        "Minimize",
    ]
    obj = _expr([(1, v) for v in names])
    out.append(" obj: " + obj[0])
    out.extend("   " + line for line in obj[1:])
    out.append("Subject To")
    for j, l in itertools.combinations(cols, 2):
        diff = abs(D[:, j] - D[:, l])
        terms = [(int(c), names[i]) for i, c in enumerate(diff) if c]
        lines = _expr(terms)
        lines[-1] += " >= 1"
        out.append(f" p_{j}_{l}: " + lines[0])
        out.extend("   " + line for line in lines[1:])
    if len(cols) < 2:
        # no pairs to separate; a generator still needs one vertex
        lines = _expr([(1, v) for v in names])
        lines[-1] += " >= 1"
        out.append(" nonempty: " + lines[0])
        out.extend("   " + line for line in lines[1:])
    out.append("Binary")
    out.extend(" " + " ".join(names[k : k + _TERMS_PER_LINE]) for k in range(0, g.n, _TERMS_PER_LINE))
    out.append("End")
    return "\n".join(out) + "\n"


_TERM = re.compile(r"([+-])?\s*(\d+)?\s*([A-Za-z_][A-Za-z0-9_]*)")


def _parse_linear(text: str) -> dict[str, int]:
    coeffs: dict[str, int] = {}
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TERM.match(text, pos)
        if m is None:
            raise ValueError(f"cannot parse linear expression near {text[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = int(m.group(2)) if m.group(2) else 1
        coeffs[m.group(3)] = coeffs.get(m.group(3), 0) + sign * coef
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return coeffs


def parse_lp(text: str) -> tuple[dict[str, int], list[tuple[str, dict[str, int], int]], list[str]]:
    """Parse the subset of LP format that :func:`export_ilp` writes.

    Returns ``(objective, rows, binaries)`` with rows as
    ``(name, coefficients, rhs)`` for ``>=`` constraints.
    """
    section = None
    chunks: dict[str, list[str]] = {"obj": [], "st": [], "bin": []}
    for raw in text.splitlines():
        line = raw.split("\\", 1)[0].strip()
        if not line:
            continue
        low = line.lower()
        if low in ("minimize", "minimise", "min"):
            section = "obj"
        elif low in ("subject to", "st", "s.t."):
            section = "st"
        elif low in ("binary", "binaries", "bin"):
            section = "bin"
        elif low == "end":
            section = None
        elif section is None:
            raise ValueError(f"text outside any section: {line!r}")
        else:
            chunks[section].append(line)

    obj_text = " ".join(chunks["obj"])
    objective = _parse_linear(obj_text.split(":", 1)[1] if ":" in obj_text else obj_text)

    rows = []
    pending = ""
    for line in chunks["st"]:
        pending = f"{pending} {line}".strip()
        if ">=" in pending:
            head, rhs = pending.split(">=")
            name, expr = head.split(":", 1)
            rows.append((name.strip(), _parse_linear(expr), int(rhs)))
            pending = ""
    if pending:
        raise ValueError(f"unterminated constraint {pending!r}")
    binaries = " ".join(chunks["bin"]).split()
    return objective, rows, binaries


def brute_force_optimum(text: str) -> tuple[int, tuple[str, ...]]:
    """Minimum objective over all 0/1 assignments of the binaries.

    Assignments are tried by increasing support size, so with a positive
    objective the search stops at the first feasible size.
    """
    objective, rows, binaries = parse_lp(text)
    best = None
    best_set: tuple[str, ...] = ()
    for k in range(len(binaries) + 1):
        for chosen in itertools.combinations(binaries, k):
            on = set(chosen)
            if all(sum(c for v, c in coeffs.items() if v in on) >= rhs for _, coeffs, rhs in rows):
                value = sum(c for v, c in objective.items() if v in on)
                if best is None or value < best:
                    best, best_set = value, chosen
        if best is not None and all(c >= 0 for c in objective.values()) and best <= k:
            break
    if best is None:
        raise ValueError("model is infeasible")
    return best, best_set
