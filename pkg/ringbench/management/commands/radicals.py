from django.core.management.base import CommandParser

from ringbench.ideals import (
    jacobson_radical,
    jacobson_radical_oracle,
    nilpotency_index,
    prime_radical,
    prime_radical_oracle,
    strongly_nilpotent_elements,
)
from ringbench.management.base import RingCommand


class Command(RingCommand):
    help = 'Print N(R), P(R) and J(R), optionally checked against the brute-force oracles.'

    def add_arguments(self, parser: CommandParser) -> None:
        super().add_arguments(parser)
        self.add_ring_argument(parser)
        parser.add_argument(
            '--oracle', action='store_true',
            help='cross-check against prime and maximal right ideal enumeration',
        )

    def compute(self, ring, oracle: bool):
        radical, jacobson = prime_radical(ring), jacobson_radical(ring)
        result = {
            'ring': ring.content_hash,
            'order': ring.order,
            'nil_elements': sorted(ring.nil_elements()),
            'prime_radical': radical.indices.tolist(),
            'prime_radical_index': nilpotency_index(radical),
            'jacobson_radical': jacobson.indices.tolist(),
            'jacobson_radical_index': nilpotency_index(jacobson),
        }
        if oracle:
            result['oracle'] = {
                'prime_radical': prime_radical_oracle(ring).indices.tolist(),
                'jacobson_radical': jacobson_radical_oracle(ring).indices.tolist(),
                'strongly_nilpotent': sorted(strongly_nilpotent_elements(ring)),
            }
        return result

    def handle(self, *args, **options):
        ring = self.resolve(options['ring'], options['max_order']).ring
        result = self.get_cache(options).get_or_compute(
            ring.content_hash, 'radicals', {'oracle': options['oracle']},
            lambda: self.guarded(self.compute, ring, options['oracle']),
        )
        self.write_json(result)
        oracle = result.get('oracle')
        if oracle is not None:
            disagreements = [
                name for name in ('prime_radical', 'jacobson_radical')
                if oracle[name] != result[name]
            ]
            if oracle['strongly_nilpotent'] != result['prime_radical']:
                disagreements.append('strongly_nilpotent')
            if disagreements:
                raise self.failed(f'oracle disagreement: {", ".join(disagreements)}')
