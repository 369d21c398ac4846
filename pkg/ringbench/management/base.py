import json
from pathlib import Path
from typing import Any, Callable, Dict, NamedTuple, Optional

from django.core.management.base import BaseCommand, CommandError, CommandParser

from ringbench.cache import ResultCache, json_default
from ringbench.catalog import ENTRIES, build, build_entry, parse_recipe
from ringbench.constructions import MoritaContextSpec
from ringbench.core import FiniteRing
from ringbench.documents import RingDocument
from ringbench.exceptions import OracleCapExceeded, OrderCapExceeded, RingBenchError

INVALID_INPUT = 2
PROPERTY_FAILED = 1


class Subject(NamedTuple):
    name: str
    ring: FiniteRing
    context: Optional[MoritaContextSpec] = None


class RingCommand(BaseCommand):
    """Shared flags plus ring resolution from a file, a catalog name or a recipe."""

    requires_system_checks: Any = []

    def add_arguments(self, parser: CommandParser) -> None:
        parser.add_argument('--no-cache', action='store_true', help='bypass the result cache')
        parser.add_argument('--max-order', type=int, help='order cap for constructions')
        parser.add_argument('--seed', type=int, help='seed for randomised sampling')

    def add_ring_argument(self, parser: CommandParser) -> None:
        parser.add_argument('ring', help='ring document path, catalog name or JSON recipe')

    def invalid(self, message: Any) -> CommandError:
        return CommandError(str(message), returncode=INVALID_INPUT)

    def failed(self, message: Any) -> CommandError:
        return CommandError(str(message), returncode=PROPERTY_FAILED)

    def guarded(self, function: Callable[..., Any], *args: Any, **kwargs: Any) -> Any:
        """Run `function`, reporting library errors as invalid input."""
        try:
            return function(*args, **kwargs)
        except (OrderCapExceeded, OracleCapExceeded) as error:
            raise self.invalid(error) from error
        except RingBenchError as error:
            raise self.invalid(f'{type(error).__name__}: {error}') from error

    def resolve(self, spec: str, max_order: Optional[int] = None) -> Subject:
        names = {entry.name for entry in ENTRIES}
        if Path(spec).is_file():
            return self.resolve_file(spec, max_order)
        if spec in names and max_order is None:
            built = self.guarded(build_entry, spec)
        else:
            built = self.guarded(build, self.guarded(parse_recipe, spec), max_order)
        return Subject(spec, built.ring, built.context)

    def resolve_file(self, path: str, max_order: Optional[int]) -> Subject:
        """A ring document, or a file holding a JSON recipe."""
        try:
            data = json.loads(Path(path).read_text(encoding='utf-8'))
        except (OSError, ValueError) as error:
            raise self.invalid(f'cannot read {path}: {error}') from error
        if isinstance(data, dict) and 'constructor' in data:
            built = self.guarded(build, data, max_order)
            return Subject(path, built.ring, built.context)
        document = self.guarded(RingDocument.from_dict, data)
        return Subject(path, self.guarded(document.to_ring, max_order))

    def get_cache(self, options: Dict[str, Any]) -> ResultCache:
        return ResultCache(enabled=not options['no_cache'])

    def write_json(self, data: Any) -> None:
        self.stdout.write(json.dumps(data, indent=2, sort_keys=True, default=json_default))
