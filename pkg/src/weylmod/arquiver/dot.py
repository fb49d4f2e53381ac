"""Graphviz export of the first slices of the preinjective component.

Each slice becomes a ``rank = same`` group so that ``dot`` draws the τ-orbits
as columns. Render with, e.g.::

    weylmod ar-dot exweyl --slices 3 > ar.gv
    dot -Tpng -O ar.gv
"""

from __future__ import annotations

from typing import List

from ..grid import Vertex
from .quiver import ARQuiver


def _label(quiver: ARQuiver, vertex: Vertex) -> str:
    if not quiver.cartan.is_quiver:
        return vertex.token()
    dims = " ".join(str(x) for x in quiver.dim_vector(vertex))
    return f"{vertex.token()} [{dims}]"


def to_dot(quiver: ARQuiver, slices: int) -> str:
    """Return a DOT digraph of the existing vertices with r < ``slices``.

    Nodes are labeled ``"r:i [dims]"`` (without dims in valued mode); every
    irreducible map becomes one edge labeled with its multiplicity.
    """
    vertices = quiver.existing_vertices(slices - 1) if slices > 0 else []
    lines: List[str] = ["digraph preinjective {", "\trankdir = RL;"]
    for r in sorted({v.r for v in vertices}):
        lines.append("\t{")
        lines.append("\t\trank = same;")
        for vertex in (v for v in vertices if v.r == r):
            lines.append(f'\t\t"{vertex.token()}" [label="{_label(quiver, vertex)}"];')
        lines.append("\t}")
    for vertex in vertices:
        for target, mult in sorted(quiver.irreducible_arrows(vertex).items()):
            lines.append(f'\t"{vertex.token()}" -> "{target.token()}" [label="{mult}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dims_table(quiver: ARQuiver, slices: int) -> str:
    """One line ``r:i [d_1 ... d_n]`` per existing vertex with r < ``slices``."""
    vertices = quiver.existing_vertices(slices - 1) if slices > 0 else []
    return "".join(f"{_label(quiver, v)}\n" for v in vertices)
