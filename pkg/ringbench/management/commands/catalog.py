from django.core.management.base import CommandParser

from ringbench.catalog import ENTRIES, build_entry, get_entry
from ringbench.management.base import RingCommand


class Command(RingCommand):
    help = 'List the catalog or show one entry.'

    def add_arguments(self, parser: CommandParser) -> None:
        super().add_arguments(parser)
        parser.add_argument('action', choices=('list', 'show'))
        parser.add_argument('name', nargs='?', help='entry to show')

    def handle(self, *args, **options):
        if options['action'] == 'list':
            width = max(len(entry.name) for entry in ENTRIES)
            for entry in ENTRIES:
                self.stdout.write(f'{entry.name:<{width}}  {entry.description}')
            return
        if not options['name']:
            raise self.invalid('catalog show needs an entry name')
        entry = self.guarded(get_entry, options['name'])
        built = self.guarded(build_entry, entry.name)
        self.write_json({
            **entry.as_dict(),
            'content_hash': built.ring.content_hash,
            'order': built.ring.order,
            'has_context': built.context is not None,
        })
