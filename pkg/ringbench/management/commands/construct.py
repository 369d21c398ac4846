from django.core.management.base import CommandParser

from ringbench.documents import dumps_ring, save_ring
from ringbench.management.base import RingCommand


class Command(RingCommand):
    help = 'Build a ring from a catalog name or a JSON recipe and write its document.'

    def add_arguments(self, parser: CommandParser) -> None:
        super().add_arguments(parser)
        parser.add_argument('recipe', help='catalog name or JSON recipe')
        parser.add_argument('-o', '--output', help='write the ring document to this file')

    def handle(self, *args, **options):
        subject = self.resolve(options['recipe'], options['max_order'])
        ring = subject.ring
        if options['output']:
            save_ring(ring, options['output'])
            self.stderr.write(
                f'Wrote ring of order {ring.order} ({ring.content_hash[:12]})'
                f' to {options["output"]}',
            )
        else:
            self.stdout.write(dumps_ring(ring))
