from django.core.management.base import CommandParser

from ringbench.catalog import ENTRIES, expectation_mismatches
from ringbench.classify import classification_report
from ringbench.management.base import RingCommand


class Command(RingCommand):
    help = 'Classify a ring against every class the workbench decides.'

    def add_arguments(self, parser: CommandParser) -> None:
        super().add_arguments(parser)
        self.add_ring_argument(parser)
        parser.add_argument('--json', action='store_true', help='print the full JSON report')

    def handle(self, *args, **options):
        subject = self.resolve(options['ring'], options['max_order'])
        ring = subject.ring
        report = self.get_cache(options).get_or_compute(
            ring.content_hash, 'classify', {},
            lambda: self.guarded(classification_report, ring).as_dict(),
        )
        bits = report['bits']
        if options['json']:
            self.write_json(report)
        else:
            self.stdout.write(f'Ring {ring.content_hash[:12]} of order {ring.order}')
            width = max(len(name) for name in bits)
            for name, holds in bits.items():
                self.stdout.write(f'  {name:<{width}}  {"yes" if holds else "no"}')
        entry = next((entry for entry in ENTRIES if entry.name == subject.name), None)
        if entry is not None:
            mismatches = expectation_mismatches(entry, ring, bits)
            if mismatches:
                raise self.failed(f'{entry.name} disagrees with its expected classes: {mismatches}')
