"""Configuration package exports.

Exposes:
- `Settings`: Pydantic settings for library and CLI configuration
"""

from .settings import Settings

__all__ = ["Settings"]
