"""Report objects shared by the CLI: a human-readable rendering plus a
deterministic machine-readable JSON document.

JSON schema (fixed): a top-level object with `input`, `computed`,
optional `paper_claim`, optional `agrees`, and a `warnings` array.
Key order is insertion order and all rationals are serialised as exact
strings, so identical inputs give byte-identical output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .cochain import wedge_basis
from .linalg import Poly, poly_str


@dataclass
class Report:
    input: dict
    computed: dict
    paper_claim: dict | None = None
    agrees: bool | None = None
    warnings: list = field(default_factory=list)
    human: str = ""

    def to_json(self) -> str:
        doc = {"input": self.input, "computed": self.computed}
        if self.paper_claim is not None:
            doc["paper_claim"] = self.paper_claim
        if self.agrees is not None:
            doc["agrees"] = self.agrees
        doc["warnings"] = list(self.warnings)
        return json.dumps(doc, indent=2)


def format_table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    def fmt(cells):
        return "  ".join(str(c).ljust(w) for c, w in zip(cells, widths)).rstrip()
    lines = [fmt(headers), fmt(["-" * w for w in widths])]
    lines.extend(fmt(row) for row in rows)
    return "\n".join(lines)


def yesno(flag) -> str:
    if flag is None:
        return "-"
    return "yes" if flag else "NO"


def _scalar_term(c, name: str) -> str:
    if c == 1:
        return name
    if c == -1:
        return "-" + name
    return f"{c}*{name}"


def _coeff_term(c, name: str) -> str:
    if not isinstance(c, Poly):
        return _scalar_term(c, name)
    if c.is_constant():
        return _scalar_term(c.coefficient(0), name)
    nonzero = sum(1 for x in c.coeffs if x)
    text = poly_str(c)
    return f"{text}*{name}" if nonzero == 1 else f"({text})*{name}"


def _is_nonzero(c) -> bool:
    return not c.is_zero() if isinstance(c, Poly) else bool(c)


def relation_strings(sc: dict, names) -> list[str]:
    """Human bracket lines like '[X,Y] = Z' in a fixed order."""
    out = []
    for (i, j) in sorted(sc):
        terms = [
            _coeff_term(c, names[k])
            for k, c in enumerate(sc[(i, j)])
            if _is_nonzero(c)
        ]
        joined = terms[0] if terms else "0"
        for t in terms[1:]:
            joined += " - " + t[1:] if t.startswith("-") else " + " + t
        out.append(f"[{names[i]},{names[j]}] = {joined}")
    return out


def cochain_string(n: int, p: int, vec, basis_names, component_names) -> str:
    """Readable form of a flat cochain vector in the fixed layout."""
    m = len(component_names)
    tuples = wedge_basis(n, p).tuples
    terms = []
    for r, S in enumerate(tuples):
        for a in range(m):
            c = vec[r * m + a]
            if not c:
                continue
            wedge = "^".join(f"{basis_names[i]}*" for i in S) if S else "1"
            coeff = "" if c == 1 else ("-" if c == -1 else f"{c}*")
            terms.append(f"{coeff}{wedge}->{component_names[a]}")
    if not terms:
        return "0"
    joined = terms[0]
    for t in terms[1:]:
        joined += " - " + t[1:] if t.startswith("-") else " + " + t
    return joined


def algebra_input_doc(path: str, L) -> dict:
    return {
        "path": path,
        "dim": L.dim,
        "names": list(L.names),
        "relations": relation_strings(L.sc, L.names),
    }


def family_input_doc(path: str, F) -> dict:
    return {
        "path": path,
        "dim": F.dim,
        "names": list(F.names),
        "relations": relation_strings(F.sc_t, F.names),
    }
