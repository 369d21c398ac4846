"""Finite associative unital rings given by Cayley tables.

Elements are table indices; the additive identity is always index 0. A
`FiniteRing` is immutable once built, so derived data (power table, unit
mask, ...) is computed lazily and memoised on the instance.
"""
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
import hashlib
import logging
from typing import (
    Any,
    Callable,
    Dict,
    FrozenSet,
    Hashable,
    List,
    Optional,
    Sequence,
    Union,
)

import numpy as np

from ringbench.conf import settings
from ringbench.exceptions import (
    ElementError,
    OrderCapExceeded,
    RingMismatchError,
    RingValidationError,
    Violation,
)

logger = logging.getLogger(__name__)

HASH_PREFIX = b'ringbench-ring-v1'


class Provenance(str, Enum):
    RAW_IMPORT = 'raw-import'
    CONSTRUCTOR_BUILT = 'constructor-built'


def check_order(order: int, max_order: Optional[int] = None) -> None:
    cap = settings.MAX_ORDER if max_order is None else max_order
    if order > cap:
        raise OrderCapExceeded(order, cap)


def _as_table(values: Any, order: int) -> np.ndarray:
    table = np.array(values, dtype=np.intp)
    return table.reshape(order, order)


class Element:
    """An element bound to its ring; arithmetic across rings is refused."""

    __slots__ = ('ring', 'index')

    def __init__(self, ring: 'FiniteRing', index: int):
        self.ring = ring
        self.index = ring.check(index)

    def __repr__(self) -> str:
        return f'Element({self.ring.label(self.index)})'

    def __int__(self) -> int:
        return self.index

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Element):
            return self.ring is other.ring and self.index == other.index
        return NotImplemented

    def __hash__(self) -> int:
        return hash((id(self.ring), self.index))

    def __add__(self, other: 'ElementLike') -> 'Element':
        return Element(self.ring, self.ring.add(self, other))

    def __sub__(self, other: 'ElementLike') -> 'Element':
        return Element(self.ring, self.ring.sub(self, other))

    def __mul__(self, other: 'ElementLike') -> 'Element':
        return Element(self.ring, self.ring.mul(self, other))

    def __neg__(self) -> 'Element':
        return Element(self.ring, self.ring.neg(self))

    def __pow__(self, exponent: int) -> 'Element':
        return Element(self.ring, self.ring.pow(self, exponent))


ElementLike = Union[int, Element, np.integer]


@dataclass(frozen=True)
class PeriodicityWitness:
    element: int
    k: int
    l: int  # noqa: E741

    @property
    def n(self) -> int:
        return self.k * (self.l - self.k)

    @property
    def potent_power(self) -> int:
        return 1 + self.l - self.k

    @property
    def monomial_degree(self) -> int:
        return self.l - self.k - 1

    def verify(self, ring: 'FiniteRing') -> bool:
        a = self.element
        if not 1 <= self.k < self.l or ring.pow(a, self.k) != ring.pow(a, self.l):
            return False
        monomial = ring.mul(ring.pow(a, self.k + 1), ring.pow(a, self.monomial_degree))
        if monomial != ring.pow(a, self.k):
            return False
        difference = ring.sub(a, ring.pow(a, self.n + 1))
        return ring.pow(difference, self.n) == ring.zero

    def as_dict(self) -> Dict[str, int]:
        return {
            'element': self.element,
            'k': self.k,
            'l': self.l,
            'n': self.n,
            'potent_power': self.potent_power,
            'monomial_degree': self.monomial_degree,
        }


def common_exponent(first: PeriodicityWitness, second: PeriodicityWitness) -> int:
    """n = k(l - k) for k = ps, l = ps + (t - s)p(q - p)s, from a^p = a^q and b^s = b^t.

    The elements may live in different rings.
    """
    k = first.k * second.k
    l = k + (second.l - second.k) * first.k * (first.l - first.k) * second.k  # noqa: E741
    return k * (l - k)


@dataclass(frozen=True)
class PotentDecomposition:
    element: int
    p: int
    w: int
    potency_exponent: int
    nilpotency_index: int
    commutes: bool

    def verify(self, ring: 'FiniteRing') -> bool:
        return (
            ring.add(self.p, self.w) == self.element
            and self.potency_exponent >= 2
            and ring.pow(self.p, self.potency_exponent) == self.p
            and ring.pow(self.w, self.nilpotency_index) == ring.zero
            and (not self.commutes or ring.mul(self.p, self.w) == ring.mul(self.w, self.p))
        )

    def as_dict(self) -> Dict[str, Any]:
        return {
            'element': self.element,
            'p': self.p,
            'w': self.w,
            'potency_exponent': self.potency_exponent,
            'nilpotency_index': self.nilpotency_index,
            'commutes': self.commutes,
        }


@dataclass(frozen=True)
class EuwDecomposition:
    element: int
    e: int
    u: int
    torsion_exponent: int
    w: int

    def as_dict(self) -> Dict[str, int]:
        return {
            'element': self.element,
            'e': self.e,
            'u': self.u,
            'torsion_exponent': self.torsion_exponent,
            'w': self.w,
        }


class FiniteRing:
    zero = 0

    def __init__(
        self,
        add_table: Any,
        mul_table: Any,
        one: int,
        labels: Optional[Sequence[str]] = None,
        provenance: Provenance = Provenance.CONSTRUCTOR_BUILT,
        validated: bool = False,
    ):
        add = np.asarray(add_table, dtype=np.intp)
        mul = np.asarray(mul_table, dtype=np.intp)
        if add.ndim != 2 or add.shape[0] != add.shape[1] or add.shape != mul.shape:
            raise ElementError(f'tables must be square and equal-sized, got {add.shape}')
        add.setflags(write=False)
        mul.setflags(write=False)
        self.order = int(add.shape[0])
        self.add_table = add
        self.mul_table = mul
        self.one = int(one)
        self.labels = list(labels) if labels is not None else None
        self.provenance = Provenance(provenance)
        self.validated = validated
        self._memo: Dict[Hashable, Any] = {}

    def __repr__(self) -> str:
        return f'<FiniteRing order={self.order} hash={self.content_hash[:12]}>'

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteRing):
            return NotImplemented
        return (
            self.order == other.order
            and self.one == other.one
            and np.array_equal(self.add_table, other.add_table)
            and np.array_equal(self.mul_table, other.mul_table)
        )

    def __hash__(self) -> int:
        return hash(self.content_hash)

    def __len__(self) -> int:
        return self.order

    def memoize(self, key: Hashable, factory: Callable[[], Any]) -> Any:
        if key not in self._memo:
            self._memo[key] = factory()
        return self._memo[key]

    @property
    def elements(self) -> range:
        return range(self.order)

    def label(self, index: int) -> str:
        if self.labels is not None:
            return self.labels[index]
        return str(index)

    def check(self, value: ElementLike) -> int:
        if isinstance(value, Element):
            if value.ring is not self and value.ring != self:
                raise RingMismatchError('element belongs to a different ring')
            return value.index
        index = int(value)
        if not 0 <= index < self.order:
            raise ElementError(f'{index} is not an element of a ring of order {self.order}')
        return index

    def element(self, index: int) -> Element:
        return Element(self, index)

    @cached_property
    def content_hash(self) -> str:
        digest = hashlib.sha256(HASH_PREFIX)
        digest.update(np.array([self.order, self.one], dtype='<u4').tobytes())
        digest.update(self.add_table.astype('<u4').tobytes())
        digest.update(self.mul_table.astype('<u4').tobytes())
        return digest.hexdigest()

    # Arithmetic

    def add(self, a: ElementLike, b: ElementLike) -> int:
        return int(self.add_table[self.check(a), self.check(b)])

    def mul(self, a: ElementLike, b: ElementLike) -> int:
        return int(self.mul_table[self.check(a), self.check(b)])

    @cached_property
    def negatives(self) -> np.ndarray:
        negatives = np.argmax(self.add_table == self.zero, axis=1)
        negatives.setflags(write=False)
        return negatives

    def neg(self, a: ElementLike) -> int:
        return int(self.negatives[self.check(a)])

    def sub(self, a: ElementLike, b: ElementLike) -> int:
        return int(self.add_table[self.check(a), self.negatives[self.check(b)]])

    def pow(self, a: ElementLike, k: int) -> int:
        if k < 0:
            raise ValueError('negative exponents are not supported')
        a = self.check(a)
        result = self.one
        for _ in range(k):
            result = int(self.mul_table[result, a])
        return result

    # Powers and periodicity

    @cached_property
    def power_table(self) -> np.ndarray:
        """`power_table[a, j] == a**j` for 0 <= j <= order + 1."""
        table = np.empty((self.order, self.order + 2), dtype=np.intp)
        elements = np.arange(self.order)
        table[:, 0] = self.one
        for j in range(1, self.order + 2):
            table[:, j] = self.mul_table[table[:, j - 1], elements]
        table.setflags(write=False)
        return table

    def power_cycle(self, a: ElementLike) -> PeriodicityWitness:
        a = self.check(a)
        return self.memoize(('power_cycle', a), lambda: self._power_cycle(a))

    def _power_cycle(self, a: int) -> PeriodicityWitness:
        seen: Dict[int, int] = {}
        row = self.power_table[a]
        for j in range(1, self.order + 2):
            value = int(row[j])
            if value in seen:
                return PeriodicityWitness(element=a, k=seen[value], l=j)
            seen[value] = j
        raise AssertionError(f'power sequence of {a} does not close')  # pigeonhole

    def power_from_witness(self, witness: PeriodicityWitness, exponent: int) -> int:
        if exponent < witness.k:
            return self.pow(witness.element, exponent)
        period = witness.l - witness.k
        return self.pow(witness.element, witness.k + (exponent - witness.k) % period)

    def large_pow(self, a: ElementLike, exponent: int) -> int:
        return self.power_from_witness(self.power_cycle(a), exponent)

    def common_exponent(self, a: ElementLike, b: ElementLike) -> int:
        """Exponent n with both a - a^(n+1) and b - b^(n+1) nilpotent."""
        return common_exponent(self.power_cycle(a), self.power_cycle(b))

    def potency_exponent(self, a: ElementLike) -> Optional[int]:
        witness = self.power_cycle(a)
        return witness.l if witness.k == 1 else None

    def nilpotency_degree(self, a: ElementLike) -> Optional[int]:
        row = self.power_table[self.check(a)]
        hits = np.flatnonzero(row[1:] == self.zero)
        return int(hits[0]) + 1 if hits.size else None

    def potent_decomposition(self, a: ElementLike) -> PotentDecomposition:
        a = self.check(a)
        witness = self.power_cycle(a)
        n = witness.n
        p = self.power_from_witness(witness, n + 1)
        w = self.sub(a, p)
        potency = witness.potent_power
        if self.pow(p, potency) != p:
            raise AssertionError(f'{p} is not potent with exponent {potency}')
        if self.pow(w, n) != self.zero:
            raise AssertionError(f'{w} does not vanish at power {n}')
        if self.mul(p, w) != self.mul(w, p):
            raise AssertionError(f'potent part {p} and nilpotent part {w} do not commute')
        nilpotency = self.nilpotency_degree(w)
        assert nilpotency is not None and nilpotency <= max(n, 1)
        return PotentDecomposition(
            element=a,
            p=p,
            w=w,
            potency_exponent=potency,
            nilpotency_index=nilpotency,
            commutes=True,
        )

    # Distinguished subsets

    @cached_property
    def nil_mask(self) -> np.ndarray:
        mask = self.power_table[:, self.order] == self.zero
        mask.setflags(write=False)
        return mask

    @cached_property
    def potent_mask(self) -> np.ndarray:
        mask = np.array([self.power_cycle(a).k == 1 for a in self.elements], dtype=bool)
        mask.setflags(write=False)
        return mask

    @cached_property
    def idempotent_mask(self) -> np.ndarray:
        mask = np.diagonal(self.mul_table) == np.arange(self.order)
        mask.setflags(write=False)
        return mask

    @cached_property
    def _inverse_matrix(self) -> np.ndarray:
        return (self.mul_table == self.one) & (self.mul_table.T == self.one)

    @cached_property
    def unit_mask(self) -> np.ndarray:
        mask = self._inverse_matrix.any(axis=1)
        mask.setflags(write=False)
        return mask

    @cached_property
    def center_mask(self) -> np.ndarray:
        mask = (self.mul_table == self.mul_table.T).all(axis=1)
        mask.setflags(write=False)
        return mask

    def units(self) -> FrozenSet[int]:
        return frozenset(np.flatnonzero(self.unit_mask).tolist())

    def is_unit(self, a: ElementLike) -> bool:
        return bool(self.unit_mask[self.check(a)])

    def inverse(self, a: ElementLike) -> int:
        a = self.check(a)
        if not self.unit_mask[a]:
            raise ElementError(f'{self.label(a)} is not a unit')
        return int(np.argmax(self._inverse_matrix[a]))

    def center(self) -> FrozenSet[int]:
        return frozenset(np.flatnonzero(self.center_mask).tolist())

    def idempotents(self) -> FrozenSet[int]:
        return frozenset(np.flatnonzero(self.idempotent_mask).tolist())

    def potents(self) -> FrozenSet[int]:
        return frozenset(np.flatnonzero(self.potent_mask).tolist())

    def nil_elements(self) -> FrozenSet[int]:
        return frozenset(np.flatnonzero(self.nil_mask).tolist())

    @cached_property
    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.mul_table, self.mul_table.T))

    @cached_property
    def characteristic(self) -> int:
        count, value = 1, self.one
        while value != self.zero:
            value = int(self.add_table[value, self.one])
            count += 1
        return count

    def commute(self, a: ElementLike, b: ElementLike) -> bool:
        return self.mul(a, b) == self.mul(b, a)

    def opposite(self) -> 'FiniteRing':
        return FiniteRing(
            self.add_table,
            self.mul_table.T,
            self.one,
            labels=self.labels,
            provenance=self.provenance,
            validated=self.validated,
        )

    def relabel(self, permutation: Sequence[int]) -> 'FiniteRing':
        """Ring isomorphic to this one where old element `i` becomes `permutation[i]`."""
        forward = np.asarray(permutation, dtype=np.intp)
        backward = np.argsort(forward)
        add = forward[self.add_table[np.ix_(backward, backward)]]
        mul = forward[self.mul_table[np.ix_(backward, backward)]]
        labels = [self.labels[i] for i in backward] if self.labels is not None else None
        return FiniteRing(
            add,
            mul,
            int(forward[self.one]),
            labels=labels,
            provenance=self.provenance,
            validated=self.validated,
        )


def find_violations(
    add_table: Any,
    mul_table: Any,
    one: int,
    zero: int = 0,
    full: bool = True,
) -> List[Violation]:
    """Every violated ring axiom with its lexicographically first witness."""
    add = np.asarray(add_table)
    mul = np.asarray(mul_table)
    if add.ndim != 2 or add.shape[0] != add.shape[1] or add.shape != mul.shape:
        return [Violation('shape', tuple(add.shape), 'tables must be square and equal-sized')]
    order = add.shape[0]
    if order < 1:
        return [Violation('shape', (order,), 'a ring has at least one element')]
    violations: List[Violation] = []
    for name, table in (('add', add), ('mul', mul)):
        bad = np.argwhere((table < 0) | (table >= order))
        if bad.size:
            i, j = bad[0]
            violations.append(
                Violation('range', (int(i), int(j)), f'{name}[{i}][{j}] is out of range'),
            )
    for name, index in (('zero', zero), ('one', one)):
        if not 0 <= index < order:
            violations.append(Violation('range', (index,), f'{name} is out of range'))
    if violations:
        return violations
    add = add.astype(np.intp)
    mul = mul.astype(np.intp)
    elements = np.arange(order)

    def first(mask: np.ndarray) -> Optional[tuple]:
        hits = np.argwhere(mask)
        return tuple(int(i) for i in hits[0]) if hits.size else None

    witness = first(add != add.T)
    if witness:
        violations.append(Violation('additive-commutativity', witness, 'a + b != b + a'))
    witness = first(add[zero] != elements)
    if witness:
        violations.append(Violation('additive-identity', witness, 'zero + a != a'))
    witness = first(~(add == zero).any(axis=1))
    if witness:
        violations.append(Violation('additive-inverse', witness, 'a has no negative'))
    witness = first((mul[one] != elements) | (mul[:, one] != elements))
    if witness:
        violations.append(
            Violation('multiplicative-identity', witness, 'one is not a multiplicative identity'),
        )
    if order >= 2 and one == zero:
        violations.append(Violation('nontrivial', (one,), 'one equals zero in a nonzero ring'))
    if not full:
        return violations
    scans = (
        ('additive-associativity', lambda a: add[add[a]] != add[a][add], '(a+b)+c != a+(b+c)'),
        ('associativity', lambda a: mul[mul[a]] != mul[a][mul], '(ab)c != a(bc)'),
        (
            'left-distributivity',
            lambda a: mul[a][add] != add[np.ix_(mul[a], mul[a])],
            'a(b+c) != ab+ac',
        ),
        (
            'right-distributivity',
            lambda c: mul[:, c][add] != add[np.ix_(mul[:, c], mul[:, c])],
            '(a+b)c != ac+bc',
        ),
    )
    for axiom, scan, message in scans:
        for x in range(order):
            witness = first(scan(x))
            if witness:
                if axiom == 'right-distributivity':
                    # scanned by the right factor c
                    violations.append(Violation(axiom, witness + (x,), message))
                else:
                    violations.append(Violation(axiom, (x,) + witness, message))
                break
    return violations


def validate_ring(
    add_table: Any,
    mul_table: Any,
    one: int,
    zero: int = 0,
    labels: Optional[Sequence[str]] = None,
    max_order: Optional[int] = None,
    allow_unscanned: bool = False,
) -> FiniteRing:
    """Validate raw tables and return a ring whose zero is index 0.

    Above `VALIDATE_MAX_ORDER` only the quadratic checks run, and the tables are
    rejected unless `allow_unscanned` is set.
    """
    order = len(add_table)
    check_order(order, max_order)
    cap = settings.VALIDATE_MAX_ORDER
    full = order <= cap
    violations = find_violations(add_table, mul_table, one, zero, full=full)
    if not full and not allow_unscanned:
        violations.append(Violation(
            'unscanned', (order,),
            f'associativity and distributivity are only scanned up to order {cap}',
        ))
    if violations:
        raise RingValidationError(violations)
    if not full:
        logger.warning('Accepted raw ring of order %s without the associativity scan', order)
    ring = FiniteRing(
        _as_table(add_table, order),
        _as_table(mul_table, order),
        one,
        labels=labels,
        provenance=Provenance.RAW_IMPORT,
        validated=full,
    )
    if zero != 0:
        permutation = list(range(order))
        permutation[0], permutation[zero] = zero, 0
        ring = ring.relabel(permutation)
    return ring


def assert_ring_axioms(ring: FiniteRing) -> None:
    violations = find_violations(ring.add_table, ring.mul_table, ring.one, full=True)
    if violations:
        raise RingValidationError(violations)
