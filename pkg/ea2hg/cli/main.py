"""Command-line front end for elementary abelian 2-hypergroups.

Usage:
ea2hg --sig p=2,thick=2 table
ea2hg --sig p=3,thick=1 enumerate --size 2 --format structured
ea2hg verify --max-p 3 --num-workers 4

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 guard violation.
"""

import logging
import sys
from typing import List, Optional

from ea2hg.cli.classify_handler import (cmd_aut, cmd_basis, cmd_classes,
                                        cmd_count, cmd_enumerate, cmd_iso)
from ea2hg.cli.cli_args import RunConfig, parse_args
from ea2hg.cli.table_handler import cmd_table
from ea2hg.cli.verify_handler import cmd_verify
from ea2hg.errors import Ea2hgError

logger = logging.getLogger(__name__)

HANDLERS = {
    "table": cmd_table,
    "enumerate": cmd_enumerate,
    "count": cmd_count,
    "iso": cmd_iso,
    "aut": cmd_aut,
    "classes": cmd_classes,
    "basis": cmd_basis,
    "verify": cmd_verify,
}


def configure_logging(config: RunConfig) -> None:
    root = logging.getLogger()
    if not root.handlers:
        logging.basicConfig(
            stream=sys.stderr,
            format="[%(levelname)s] %(name)s: %(message)s",
        )
    root.setLevel(config.log_level.upper())


def run(argv: Optional[List[str]] = None) -> int:
    try:
        config = parse_args(argv)
        configure_logging(config)
        logger.debug("running %s", config)
        return HANDLERS[config.command](config)
    except Ea2hgError as e:
        print(f"ea2hg: {e.message}", file=sys.stderr)
        return e.code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
