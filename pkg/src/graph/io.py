"""
Edge-list text format and DOT export.

Edge-list format: the first non-comment line is "n m", followed by m lines
"u v" with 0-based indices. Lines starting with "#" and blank lines are ignored.
"""
from __future__ import annotations

from pathlib import Path
from typing import Iterable, Optional, Sequence

from ..utils.error_handler import InputError, ParseError
from .core import DEFAULT_MAX_VERTICES, Graph, as_mask, build_graph

# Edge colors for forest overlays, cycled when a cover has more forests.
_PALETTE = (
    "red", "blue", "forestgreen", "orange", "purple",
    "brown", "deeppink", "darkcyan", "goldenrod", "slateblue",
)


def parse_edge_list(text: str, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    """
    Parse edge-list text.

    Raises:
        ParseError: malformed header or edge line, wrong edge count, bad index
    """
    header: Optional[tuple[int, int]] = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"expected two integers, got {line!r}", line=lineno)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"expected two integers, got {line!r}", line=lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError("header counts must be nonnegative", line=lineno)
            header = (a, b)
            continue
        n = header[0]
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(f"vertex index outside 0..{n - 1}", line=lineno)
        if a == b:
            raise ParseError(f"self-loop at vertex {a}", line=lineno)
        pairs.append((a, b))

    if header is None:
        raise ParseError("missing 'n m' header line")
    n, m = header
    if len(pairs) != m:
        raise ParseError(f"header announces {m} edges but {len(pairs)} were given")
    try:
        return build_graph(n, pairs, max_vertices=max_vertices)
    except InputError as e:
        raise ParseError(str(e), details=e.details) from None


def format_edge_list(g: Graph, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {part}" for part in comment.splitlines())
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(path: str | Path, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    return parse_edge_list(text, max_vertices=max_vertices)


def write_edge_list(g: Graph, path: str | Path, comment: Optional[str] = None) -> None:
    Path(path).write_text(format_edge_list(g, comment), encoding="utf-8")


def to_dot(
    g: Graph,
    forests: Optional[Sequence[Iterable[int] | int]] = None,
    name: str = "G",
) -> str:
    """
    Graphviz source for g.

    With `forests`, every edge inside forest i is drawn in palette color i
    (the first forest containing it wins) and labelled with its forest indices.
    """
    masks = [as_mask(f) for f in forests] if forests is not None else []
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for u, v in g.edges:
        owners = [i for i, mask in enumerate(masks) if mask >> u & 1 and mask >> v & 1]
        if owners:
            color = _PALETTE[owners[0] % len(_PALETTE)]
            label = ",".join(f"F{i + 1}" for i in owners)
            lines.append(f'  {u} -- {v} [color={color}, penwidth=2, label="{label}"];')
        else:
            lines.append(f"  {u} -- {v} [color=gray, style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"
