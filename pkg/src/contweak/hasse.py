"""Cover relations of finite posets and their Graphviz rendering."""
from __future__ import annotations

from typing import Callable, Sequence

__all__ = ["cover_pairs", "to_dot"]


def cover_pairs(elements: Sequence, leq: Callable) -> list[tuple[int, int]]:
    """Index pairs ``(a, b)`` with ``a < b`` and nothing strictly between."""
    n = len(elements)
    below = [[a != b and leq(elements[a], elements[b]) for b in range(n)] for a in range(n)]
    return [
        (a, b) for a in range(n) for b in range(n)
        if below[a][b] and not any(below[a][c] and below[c][b] for c in range(n))
    ]


def to_dot(elements: Sequence, leq: Callable, label: Callable = str, name: str = "lattice") -> str:
    """Digraph with one node per element and an edge from each element to each of its upper covers."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for k, e in enumerate(elements):
        text = label(e).replace("\\", "\\\\").replace('"', '\\"')
        lines.append(f'  n{k} [label="{text}"];')
    for a, b in cover_pairs(elements, leq):
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
