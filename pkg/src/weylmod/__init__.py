"""WeylMod package public API and version.

Exposes convenient imports for external consumers:
- `Settings`: library and command line configuration
- `CartanData`, `CartanRegistry`: Cartan data and built-in presets
- `HereditaryAlgebra`: Coxeter matrix, AR quiver, engine and caches of one datum
- `ARQuiver`, `EmbeddingEngine`: the preinjective component and the embedding decision
- `Vertex`, `ModMultiset`: preinjective modules and their direct sums
"""

__version__ = "0.1.0"

from .algebra import CartanRegistry, HereditaryAlgebra
from .arquiver import ARQuiver
from .config.settings import Settings
from .coxeter import CartanData
from .embedding import EmbeddingEngine
from .grid import ModMultiset, Vertex

__all__ = [
    "Settings",
    "CartanData",
    "CartanRegistry",
    "HereditaryAlgebra",
    "ARQuiver",
    "EmbeddingEngine",
    "ModMultiset",
    "Vertex",
]
