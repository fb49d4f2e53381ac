"""Logging mixin shared by the stateful WeylMod components."""

import logging


class Loggable:
    """Attach a class-scoped ``logger`` named ``"{module}.{ClassName}"``."""

    def __init__(self) -> None:
        self.logger = logging.getLogger(f"{self.__class__.__module__}.{self.__class__.__name__}")
