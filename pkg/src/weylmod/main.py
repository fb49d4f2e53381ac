"""Application entrypoint for the ``weylmod`` command line tool.

Defines the `WeylModApplication` which:

- Configures logging on stderr, so that stdout carries only command output
- Resolves `Settings` from the environment and the ``.env`` file
- Dispatches the subcommand and returns its exit code
"""

import argparse
import logging
import sys
from typing import Optional, Sequence

from .cli import build_parser, dispatch
from .config.settings import Settings


class WeylModApplication:
    """Run ``weylmod`` subcommands.

    Responsibilities:
    - Apply ``--debug`` and ``--log-level`` on top of ``Settings``
    - Hand the arguments to the command dispatcher
    """

    def __init__(self, settings: Settings | None = None):
        self.settings = settings or Settings()
        self.parser = build_parser(self.settings.app_name)
        self.logger = logging.getLogger(__name__)

    @staticmethod
    def _setup_logging(level: str) -> None:
        """Configure application logging."""
        logging.basicConfig(
            level=getattr(logging, level, logging.WARNING),
            format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
            stream=sys.stderr,
        )

    def _log_level(self, argv: Sequence[str]) -> str:
        """Read the logging switches without requiring a complete command line."""
        switches = argparse.ArgumentParser(add_help=False)
        switches.add_argument("--debug", action="store_true")
        switches.add_argument("--log-level", default=None)
        known, _ = switches.parse_known_args(list(argv))
        if known.debug:
            return "DEBUG"
        if known.log_level:
            return known.log_level.upper()
        return self.settings.effective_log_level()

    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        """Run one command line and return the exit code."""
        arguments = list(sys.argv[1:] if argv is None else argv)
        self._setup_logging(self._log_level(arguments))
        self.logger.debug(f"Running {self.settings.app_name} with {arguments}")
        return dispatch(arguments, settings=self.settings, parser=self.parser)


def main() -> None:
    """Main entry point for the application."""
    sys.exit(WeylModApplication().run())


if __name__ == "__main__":
    main()
