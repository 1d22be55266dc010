"""Rotation graphs on the expressions with a fixed leaf count, as DOT."""

from __future__ import annotations

from typing import NamedTuple

from .expr import enumerate_exprs, format_address, render
from .moves import STANDARD, rotate_at, rotation_addresses, spine_index


class Edge(NamedTuple):
    source: str
    target: str
    label: str


def rotation_graph(n: int, full: bool = False, cap: int | None = None) -> tuple[list[str], list[Edge]]:
    """Nodes and edges of the ``a<i>`` move graph on ``n`` leaves.

    With ``full`` the rotations off the left spine are added, labelled
    ``rot@<address>``.
    """
    exprs = enumerate_exprs(n, cap=cap)
    edges: list[Edge] = []
    for e in exprs:
        for i in range(n):
            if STANDARD.can_apply(i, e):
                edges.append(Edge(render(e), render(STANDARD.alpha(i, e)), f"a{i}"))
        if full:
            for addr in rotation_addresses(e):
                if spine_index(addr) is None:
                    edges.append(Edge(render(e), render(rotate_at(e, addr)), f"rot@{format_address(addr)}"))
    return [render(e) for e in exprs], sorted(edges)


def to_dot(nodes: list[str], edges: list[Edge], name: str = "rotations") -> str:
    lines = [f"digraph {name} {{"]
    lines += [f'  "{v}";' for v in nodes]
    lines += [f'  "{s}" -> "{t}" [label="{lab}"];' for s, t, lab in edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def rotation_dot(n: int, full: bool = False, cap: int | None = None) -> str:
    nodes, edges = rotation_graph(n, full, cap)
    return to_dot(nodes, edges, f"{'full' if full else 'restricted'}_n{n}")
