"""Configuration settings for WeylMod.

This module defines a Pydantic ``BaseSettings`` model used to configure the
library and the command line tool via environment variables and a ``.env``
file. Environment variables are read with the ``WEYLMOD_`` prefix
(case-insensitive), and field descriptions serve as the authoritative
documentation for each setting.
"""

from __future__ import annotations

from typing import List

import sympy
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Settings with environment variable support and validation.

    Notes:
    - Values can be provided via environment variables with prefix ``WEYLMOD_``
      (e.g., ``WEYLMOD_BFS_NODE_CAP=50000``), or from a ``.env`` file.
    - Configuration is case-insensitive and validates assignments at runtime.
    - See ``model_config`` for environment loading behavior.
    """

    app_name: str = Field(default="weylmod", description="Program name used in diagnostics")
    debug: bool = Field(default=False, description="Enable debug logging")
    log_level: str = Field(default="WARNING", description="Root log level for the command line tool")

    bfs_node_cap: int = Field(default=1_000_000, ge=1, description="Maximum number of words explored by leftmost_bfs")
    trace_limit: int = Field(default=10_000, ge=1, description="Maximum number of engine steps per decision branch")
    search_limit: int = Field(default=100_000, ge=1, description="Maximum number of states visited per decision")
    choice_rule: str = Field(default="smallest", description="Which eligible vertex the engine replaces first")
    check_invariants: bool = Field(default=True, description="Assert conservation and termination after every step")
    max_slices: int = Field(default=500, ge=1, description="Maximum number of knitted slices of the AR quiver")

    oracle_primes: List[int] = Field(default=[2, 3], description="Prime fields used by the monomorphism search")
    oracle_hom_cap: int = Field(default=12, ge=1, le=20, description="Largest Hom dimension enumerated by the oracle")
    oracle_multiplicity_slack: int = Field(
        default=0, ge=0, description="Added to the composition length bound in brute_closed"
    )

    @field_validator("choice_rule")
    @classmethod
    def validate_choice_rule(cls, value: str) -> str:
        """Validate the canonical choice rule of the embedding engine.

        Args:
            value: Rule name supplied via settings/env (e.g., "smallest").

        Returns:
            The validated, lower-cased rule name.

        Raises:
            ValueError: If the rule is not one of the supported options.
        """
        supported_rules = ["smallest", "largest"]
        normalized = value.lower()
        if normalized not in supported_rules:
            raise ValueError(f"Unsupported choice rule: {value}. " f"Supported rules: {', '.join(supported_rules)}")
        return normalized

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, value: str) -> str:
        supported_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        normalized = value.upper()
        if normalized not in supported_levels:
            raise ValueError(f"Unsupported log level: {value}. " f"Supported levels: {', '.join(supported_levels)}")
        return normalized

    @field_validator("oracle_primes")
    @classmethod
    def validate_oracle_primes(cls, value: List[int]) -> List[int]:
        """Ensure the oracle fields are given by a nonempty list of primes.

        Args:
            value: Field characteristics, e.g. ``[2, 3]``.

        Returns:
            The primes, deduplicated and sorted.

        Raises:
            ValueError: If the list is empty or contains a non-prime.
        """
        if not value:
            raise ValueError("At least one prime field is required")
        not_prime = [p for p in value if not sympy.isprime(p)]
        if not_prime:
            raise ValueError(f"Oracle fields must have prime order, got: {', '.join(map(str, not_prime))}")
        return sorted(set(value))

    def effective_log_level(self) -> str:
        """Return the log level after applying the ``debug`` switch."""
        return "DEBUG" if self.debug else self.log_level

    model_config = {
        "env_file": ".env",
        "env_prefix": "WEYLMOD_",
        "case_sensitive": False,
        "validate_assignment": True,
        "extra": "ignore",
    }
