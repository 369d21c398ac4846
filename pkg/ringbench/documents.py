"""JSON ring documents: full Cayley tables, row-major."""
from dataclasses import dataclass
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import numpy as np

from ringbench.conf import settings
from ringbench.core import FiniteRing, Provenance, check_order, find_violations, validate_ring
from ringbench.exceptions import DocumentError, RingValidationError

logger = logging.getLogger(__name__)

FORMAT = 'ringbench-ring'
VERSION = 1

PathLike = Union[str, Path]


@dataclass(frozen=True)
class RingDocument:
    order: int
    add: List[int]
    mul: List[int]
    one: int
    labels: Optional[List[str]] = None
    provenance: Provenance = Provenance.RAW_IMPORT
    zero: int = 0

    @classmethod
    def from_ring(cls, ring: FiniteRing) -> 'RingDocument':
        return cls(
            order=ring.order,
            add=ring.add_table.ravel().tolist(),
            mul=ring.mul_table.ravel().tolist(),
            one=ring.one,
            labels=ring.labels,
            provenance=ring.provenance,
        )

    @classmethod
    def from_dict(cls, data: Any) -> 'RingDocument':
        if not isinstance(data, dict):
            raise DocumentError('a ring document is a JSON object')
        if data.get('format') != FORMAT:
            raise DocumentError(f'unknown document format {data.get("format")!r}')
        if data.get('version') != VERSION:
            raise DocumentError(f'unsupported document version {data.get("version")!r}')
        missing = [key for key in ('order', 'add', 'mul', 'one') if key not in data]
        if missing:
            raise DocumentError(f'missing fields: {", ".join(missing)}')
        order = data['order']
        if not isinstance(order, int) or order < 1:
            raise DocumentError(f'order must be a positive integer, got {order!r}')
        for key in ('add', 'mul'):
            values = data[key]
            if not isinstance(values, list) or len(values) != order * order:
                raise DocumentError(f'{key} must hold exactly {order * order} integers')
            if not all(isinstance(value, int) for value in values):
                raise DocumentError(f'{key} must hold integers only')
        labels = data.get('labels')
        if labels is not None and (not isinstance(labels, list) or len(labels) != order):
            raise DocumentError(f'labels must hold exactly {order} strings')
        try:
            provenance = Provenance(data.get('provenance', Provenance.RAW_IMPORT.value))
        except ValueError:
            raise DocumentError(f'unknown provenance {data.get("provenance")!r}') from None
        return cls(
            order=order,
            add=data['add'],
            mul=data['mul'],
            one=data['one'],
            labels=labels,
            provenance=provenance,
            zero=data.get('zero', 0),
        )

    def as_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            'format': FORMAT,
            'version': VERSION,
            'order': self.order,
            'add': self.add,
            'mul': self.mul,
            'one': self.one,
            'provenance': self.provenance.value,
        }
        if self.labels is not None:
            data['labels'] = self.labels
        if self.zero != 0:
            data['zero'] = self.zero
        return data

    def to_ring(
        self,
        max_order: Optional[int] = None,
        allow_unscanned: bool = False,
    ) -> FiniteRing:
        """Validate the tables and build the ring.

        Documents above `VALIDATE_MAX_ORDER` are only accepted unscanned when
        they carry constructor provenance or `allow_unscanned` is set; the
        result is flagged as ``validated=False``.
        """
        check_order(self.order, max_order)
        shape = (self.order, self.order)
        add = np.asarray(self.add, dtype=np.int64).reshape(shape)
        mul = np.asarray(self.mul, dtype=np.int64).reshape(shape)
        unscanned = self.order > settings.VALIDATE_MAX_ORDER
        if unscanned and self.provenance == Provenance.CONSTRUCTOR_BUILT and self.zero == 0:
            logger.warning(
                'Accepted constructor-built ring of order %s without the axiom scan', self.order,
            )
            violations = find_violations(add, mul, self.one, full=False)
            if violations:
                raise RingValidationError(violations)
            return FiniteRing(
                add, mul, self.one,
                labels=self.labels,
                provenance=Provenance.CONSTRUCTOR_BUILT,
                validated=False,
            )
        ring = validate_ring(
            add, mul, self.one, self.zero,
            labels=self.labels,
            max_order=max_order,
            allow_unscanned=allow_unscanned or self.provenance == Provenance.CONSTRUCTOR_BUILT,
        )
        if self.provenance == Provenance.CONSTRUCTOR_BUILT:
            ring = FiniteRing(
                ring.add_table, ring.mul_table, ring.one,
                labels=ring.labels,
                provenance=Provenance.CONSTRUCTOR_BUILT,
                validated=ring.validated,
            )
        return ring


def dumps_ring(ring: FiniteRing) -> str:
    return json.dumps(RingDocument.from_ring(ring).as_dict(), sort_keys=True)


def loads_ring(
    text: str,
    max_order: Optional[int] = None,
    allow_unscanned: bool = False,
) -> FiniteRing:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as error:
        raise DocumentError(f'not a JSON document: {error}') from error
    return RingDocument.from_dict(data).to_ring(max_order, allow_unscanned)


def save_ring(ring: FiniteRing, path: PathLike) -> None:
    Path(path).write_text(dumps_ring(ring), encoding='utf-8')


def load_ring(
    path: PathLike,
    max_order: Optional[int] = None,
    allow_unscanned: bool = False,
) -> FiniteRing:
    try:
        text = Path(path).read_text(encoding='utf-8')
    except OSError as error:
        raise DocumentError(f'cannot read {path}: {error}') from error
    return loads_ring(text, max_order, allow_unscanned)
