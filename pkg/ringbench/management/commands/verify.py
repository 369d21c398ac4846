from pathlib import Path

from django.core.management.base import CommandParser

from ringbench.catalog import ENTRIES, get_entry
from ringbench.checks import CheckConfig, get_check, run_suite
from ringbench.management.base import RingCommand


class Command(RingCommand):
    help = 'Run a theorem check, or all of them, over catalog rings.'

    def add_arguments(self, parser: CommandParser) -> None:
        super().add_arguments(parser)
        parser.add_argument('check', help='check id such as T3.10, or "all"')
        parser.add_argument(
            '--catalog', nargs='+', metavar='NAME',
            help='catalog entries to check (default: the whole catalog)',
        )
        parser.add_argument('--output', help='write the JSON suite report to this file')

    def handle(self, *args, **options):
        check_ids = None
        if options['check'] != 'all':
            check_ids = [self.guarded(get_check, options['check']).id]
        entries = (
            [self.guarded(get_entry, name) for name in options['catalog']]
            if options['catalog'] else ENTRIES
        )
        config = CheckConfig.from_settings(
            seed=options['seed'],
            max_order=options['max_order'],
        )
        suite = self.guarded(run_suite, entries, config, check_ids)
        document = suite.to_json(indent=2, sort_keys=True)
        if options['output']:
            Path(options['output']).write_text(document, encoding='utf-8')
        else:
            self.stdout.write(document)
        counts = suite.counts()
        self.stderr.write(', '.join(f'{count} {status}' for status, count in counts.items()))
        if suite.failures:
            failed = sorted({report.check_id for report in suite.failures})
            raise self.failed(f'failed checks: {", ".join(failed)}')
