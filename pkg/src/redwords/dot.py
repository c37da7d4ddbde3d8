"""Minimal DOT (graphviz) digraph emitter."""

from __future__ import annotations

from typing import Iterable, Mapping


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def digraph(
    name: str,
    nodes: Iterable[tuple[str, str]],
    edges: Iterable[tuple[str, str, Mapping[str, str] | None]],
) -> str:
    """Render a digraph; nodes are (id, label), edges (src, dst, attrs)."""
    lines = [f"digraph {_quote(name)} {{"]
    for node_id, label in nodes:
        lines.append(f"  {_quote(node_id)} [label={_quote(label)}];")
    for src, dst, attrs in edges:
        if attrs:
            body = ", ".join(f"{key}={_quote(str(val))}" for key, val in attrs.items())
            lines.append(f"  {_quote(src)} -> {_quote(dst)} [{body}];")
        else:
            lines.append(f"  {_quote(src)} -> {_quote(dst)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
