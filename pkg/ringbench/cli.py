"""`ringbench` console entry point: runs the app's management commands."""
import os
import sys
from typing import List, Optional

import django
from django.conf import settings as django_settings
from django.core.management import load_command_class

from ringbench.conf import get_cli_settings

SUBCOMMANDS = ('construct', 'classify', 'radicals', 'decompose', 'verify', 'catalog')

USAGE = """usage: ringbench <subcommand> [options]

subcommands:
  construct <recipe> [-o file]
  classify <ring-file|catalog-name|recipe> [--json]
  radicals <ring> [--oracle]
  decompose <ring> --element i --mode potent|euw
  verify <check-id|all> [--catalog NAME ...] [--output file]
  catalog list|show <name>

common options: --no-cache, --max-order N, --seed N
"""


def setup() -> None:
    if not django_settings.configured and 'DJANGO_SETTINGS_MODULE' not in os.environ:
        django_settings.configure(**get_cli_settings())
    django.setup()


def cli_main(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] not in SUBCOMMANDS:
        if argv and argv[0] in ('-h', '--help'):
            sys.stdout.write(USAGE)
            return 0
        sys.stderr.write(USAGE)
        return 2
    setup()
    command = load_command_class('ringbench', argv[0])
    try:
        command.run_from_argv(['ringbench', *argv])
    except SystemExit as exit_:
        if exit_.code is None:
            return 0
        return exit_.code if isinstance(exit_.code, int) else 1
    return 0


def main() -> None:
    sys.exit(cli_main())
