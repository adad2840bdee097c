"""
Report rendering: JSON for scripts, aligned text tables for people.
"""
import json
import sys
from typing import Mapping, Optional, TextIO

import pandas as pd

from ..state import BoundedValue, GraphInfo


def describe_value(field: Optional[BoundedValue]) -> str:
    if not field:
        return "-"
    if field.get("value") is not None:
        return f"{field['value']} ({field.get('proof', 'exhausted')})"
    upper = field.get("upper")
    text = f"unknown, bounds [{field.get('lower')}, {'?' if upper is None else upper}]"
    if field.get("note"):
        text += f" ({field['note']})"
    return text


def _graph_line(info: GraphInfo) -> str:
    return f"graph {info['source']} (n={info['n']}, m={info['m']}, hash={info['graph_hash']})"


def _forest_lines(cover: Optional[dict]) -> list[str]:
    if not cover:
        return []
    forests = cover.get("forests", [])
    lines = [f"cover: {len(forests)} forest(s) at k={cover.get('k')}"]
    lines += [f"  F{i}: {' '.join(map(str, f))}" for i, f in enumerate(forests, start=1)]
    return lines


def stats_table(report: Mapping) -> pd.DataFrame:
    """One row per parameter with value, bounds and how it was settled."""
    rows = []
    for key, label in (
        ("treewidth", "tree-width"),
        ("tree_depth", "tree-depth"),
        ("acyclic_chromatic", "acyclic chromatic number"),
        ("arboricity", "arboricity"),
    ):
        field = report.get(key) or {}
        rows.append({
            "parameter": label,
            "value": field.get("value"),
            "lower": field.get("lower"),
            "upper": field.get("upper"),
            "proof": field.get("proof"),
        })
    df = pd.DataFrame(rows)
    return df.astype(object).where(df.notna(), "-")


def valid_profile_table(report: Mapping) -> pd.DataFrame:
    counts = report.get("valid_edge_counts", {})
    return pd.DataFrame({"k": list(counts.keys()), "k-valid edges": list(counts.values())})


def claims_table(claims: list) -> pd.DataFrame:
    df = pd.DataFrame(claims, columns=["claim", "mode", "observed", "holds"])
    return df.astype(object).where(df.notna(), "?")


def format_report(report: Mapping) -> str:
    command = report.get("command")
    lines: list[str] = []
    if "graph" in report:
        lines.append(_graph_line(report["graph"]))

    if command == "fk":
        lines.append(f"f_{report['k']} = {describe_value(report.get('result'))}")
        lines.append(f"k-valid edges: {report.get('valid_edges')}")
        lines += _forest_lines(report.get("cover"))

    elif command == "cover":
        bound = report.get("bound")
        verdict = "within bound" if report.get("within_bound") else "ABOVE BOUND"
        params = ", ".join(f"{k}={v}" for k, v in report.get("parameters", {}).items())
        lines.append(
            f"method {report['method']}"
            + (f" ({params})" if params else "")
            + f": {report['size']} forest(s), bound {bound}, {verdict}"
        )
        if report.get("optimum"):
            lines.append(f"optimum f_{report['k']} = {describe_value(report['optimum'])}")
        lines += _forest_lines(report.get("cover"))

    elif command == "stats":
        lines.append(stats_table(report).to_string(index=False))
        twins = report.get("twin_edges", [])
        lines.append(f"twin edges (not 2-valid): {len(twins)}" + (f" {twins}" if twins else ""))
        lines.append(valid_profile_table(report).to_string(index=False))

    elif command == "gen":
        if report.get("output"):
            lines.append(f"{report['family']} written to {report['output']}")
        if report.get("claims"):
            lines.append(claims_table(report["claims"]).to_string(index=False))

    elif command == "verify":
        if report.get("valid"):
            lines.append(f"cover valid: {report['forests']} forest(s) at k={report['k']}")
        else:
            lines.append(f"cover INVALID ({len(report.get('violations', []))} problem(s))")
            lines += [f"  - {v}" for v in report.get("violations", [])]

    return "\n".join(lines)


def emit(report: Mapping, as_json: bool, stream: Optional[TextIO] = None) -> None:
    out = stream or sys.stdout
    if as_json:
        print(json.dumps(report, indent=2), file=out)
    else:
        print(format_report(report), file=out)
