"""Command line surface of WeylMod.

Exposes:
- `dispatch`, `build_parser`, `CommandResult` and the exit code constants
- `parse_quiver_text`, `load_cartan`, `parse_word`, `parse_module`, `parse_indices`
"""

from .commands import EXIT_FALSE, EXIT_INPUT, EXIT_OK, EXIT_RESOURCE, HANDLERS, CommandResult, build_parser, dispatch
from .parser import load_cartan, parse_indices, parse_module, parse_quiver_text, parse_vertex, parse_word

__all__ = [
    "EXIT_FALSE",
    "EXIT_INPUT",
    "EXIT_OK",
    "EXIT_RESOURCE",
    "HANDLERS",
    "CommandResult",
    "build_parser",
    "dispatch",
    "load_cartan",
    "parse_indices",
    "parse_module",
    "parse_quiver_text",
    "parse_vertex",
    "parse_word",
]
