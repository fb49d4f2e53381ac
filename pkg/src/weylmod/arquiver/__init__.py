"""Preinjective component of the Auslander–Reiten quiver.

Exposes:
- `Vertex`, `ModMultiset`: grid positions and direct sums of preinjectives
- `ARQuiver`: AR-sequences, vertex existence, knitted dimension vectors
- `SliceCache`: memo of completed slices
- `to_dot`, `dims_table`: text exports
"""

from ..grid import ModMultiset, Vertex
from .dot import dims_table, to_dot
from .quiver import ARQuiver, DimVector, SliceCache

__all__ = ["Vertex", "ModMultiset", "ARQuiver", "DimVector", "SliceCache", "to_dot", "dims_table"]
