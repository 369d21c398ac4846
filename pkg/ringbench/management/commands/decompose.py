from django.core.management.base import CommandParser

from ringbench.classify import euw_decomposition, verify_euw
from ringbench.management.base import RingCommand


class Command(RingCommand):
    help = 'Decompose an element as potent + nilpotent, or as eu + w.'

    def add_arguments(self, parser: CommandParser) -> None:
        super().add_arguments(parser)
        self.add_ring_argument(parser)
        parser.add_argument('--element', type=int, required=True, help='element index')
        parser.add_argument('--mode', choices=('potent', 'euw'), default='potent')

    def compute(self, ring, a: int, mode: str):
        if mode == 'potent':
            decomposition = ring.potent_decomposition(a)
            return {**decomposition.as_dict(), 'n': ring.power_cycle(a).n}
        euw = euw_decomposition(ring, a)
        if euw is None:
            return None
        assert verify_euw(ring, euw)
        return euw.as_dict()

    def handle(self, *args, **options):
        ring = self.resolve(options['ring'], options['max_order']).ring
        a, mode = options['element'], options['mode']
        self.guarded(ring.check, a)
        result = self.get_cache(options).get_or_compute(
            ring.content_hash, 'decompose', {'element': a, 'mode': mode},
            lambda: {'decomposition': self.guarded(self.compute, ring, a, mode)},
        )
        if result['decomposition'] is None:
            raise self.failed(f'{a} has no decomposition eu + w with commuting parts')
        self.write_json(result['decomposition'])
