"""Ideals, ideal arithmetic and the radicals N(R), P(R) and J(R).

Fast paths rely on finiteness; each has a brute-force oracle used by the test
suite and the harness on small rings.
"""
from enum import Enum
import logging
from typing import Dict, FrozenSet, Iterable, Iterator, List, NamedTuple, Optional

import numpy as np

from ringbench.conf import settings
from ringbench.core import ElementLike, FiniteRing
from ringbench.exceptions import (
    NotAnIdeal,
    OracleCapExceeded,
    RingBenchError,
    RingMismatchError,
    SidednessMismatch,
)

logger = logging.getLogger(__name__)


class Sidedness(str, Enum):
    LEFT = 'left'
    RIGHT = 'right'
    TWO_SIDED = 'two-sided'
    ADDITIVE = 'additive-only'

    @property
    def left_closed(self) -> bool:
        return self in (Sidedness.LEFT, Sidedness.TWO_SIDED)

    @property
    def right_closed(self) -> bool:
        return self in (Sidedness.RIGHT, Sidedness.TWO_SIDED)


class IdealSet:
    __slots__ = ('ring', 'mask', 'sidedness')

    def __init__(self, ring: FiniteRing, mask: np.ndarray, sidedness: Sidedness):
        mask = np.asarray(mask, dtype=bool).copy()
        mask.setflags(write=False)
        self.ring = ring
        self.mask = mask
        self.sidedness = Sidedness(sidedness)

    def __repr__(self) -> str:
        return f'<IdealSet {self.sidedness.value} size={len(self)} of {self.ring!r}>'

    def __len__(self) -> int:
        return int(self.mask.sum())

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices.tolist())

    def __contains__(self, item: object) -> bool:
        try:
            return bool(self.mask[self.ring.check(item)])  # type: ignore[arg-type]
        except (RingBenchError, TypeError, ValueError):
            return False

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IdealSet):
            return self.ring == other.ring and bool(np.array_equal(self.mask, other.mask))
        if isinstance(other, (set, frozenset)):
            return self.members == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring.content_hash, self.mask.tobytes()))

    def __le__(self, other: 'IdealSet') -> bool:
        return bool((~self.mask | other.mask).all())

    @property
    def indices(self) -> np.ndarray:
        return np.flatnonzero(self.mask)

    @property
    def members(self) -> FrozenSet[int]:
        return frozenset(self.indices.tolist())

    @property
    def is_zero(self) -> bool:
        return len(self) == 1

    @property
    def is_whole(self) -> bool:
        return bool(self.mask.all())

    def labels(self) -> List[str]:
        return [self.ring.label(i) for i in self]


def _close(ring: FiniteRing, mask: np.ndarray, sidedness: Sidedness) -> np.ndarray:
    mask = np.array(mask, dtype=bool)
    mask[ring.zero] = True
    while True:
        members = np.flatnonzero(mask)
        grown = mask.copy()
        grown[ring.add_table[np.ix_(members, members)]] = True
        if sidedness.left_closed:
            grown[ring.mul_table[:, members]] = True
        if sidedness.right_closed:
            grown[ring.mul_table[members, :]] = True
        if (grown == mask).all():
            return mask
        mask = grown


def _mask_of(ring: FiniteRing, members: Iterable[ElementLike]) -> np.ndarray:
    mask = np.zeros(ring.order, dtype=bool)
    for member in members:
        mask[ring.check(member)] = True
    return mask


def closure_of(
    ring: FiniteRing,
    members: Iterable[ElementLike],
    sidedness: Sidedness = Sidedness.TWO_SIDED,
) -> IdealSet:
    return IdealSet(ring, _close(ring, _mask_of(ring, members), sidedness), sidedness)


def ideal_from_members(
    ring: FiniteRing,
    members: Iterable[ElementLike],
    sidedness: Sidedness = Sidedness.TWO_SIDED,
) -> IdealSet:
    mask = _mask_of(ring, members)
    if not (_close(ring, mask, sidedness) == mask).all():
        raise NotAnIdeal(f'members are not a {sidedness.value} ideal')
    return IdealSet(ring, mask, sidedness)


def ideal_generated(
    ring: FiniteRing,
    x: ElementLike,
    sidedness: Sidedness = Sidedness.TWO_SIDED,
) -> IdealSet:
    return closure_of(ring, [x], sidedness)


def zero_ideal(ring: FiniteRing) -> IdealSet:
    return closure_of(ring, [], Sidedness.TWO_SIDED)


def whole_ring(ring: FiniteRing) -> IdealSet:
    return IdealSet(ring, np.ones(ring.order, dtype=bool), Sidedness.TWO_SIDED)


def _compatible(first: IdealSet, second: IdealSet) -> Sidedness:
    if first.ring is not second.ring and first.ring != second.ring:
        raise RingMismatchError('ideals live in different rings')
    if first.sidedness != second.sidedness:
        raise SidednessMismatch(
            f'cannot combine {first.sidedness.value} and {second.sidedness.value} ideals',
        )
    return first.sidedness


def ideal_sum(first: IdealSet, second: IdealSet) -> IdealSet:
    sidedness = _compatible(first, second)
    mask = _close(first.ring, first.mask | second.mask, sidedness)
    return IdealSet(first.ring, mask, sidedness)


def ideal_intersection(first: IdealSet, second: IdealSet) -> IdealSet:
    sidedness = _compatible(first, second)
    return IdealSet(first.ring, first.mask & second.mask, sidedness)


def ideal_product(first: IdealSet, second: IdealSet) -> IdealSet:
    sidedness = _compatible(first, second)
    if sidedness == Sidedness.ADDITIVE:
        raise SidednessMismatch('products are defined for one- or two-sided ideals')
    ring = first.ring
    mask = np.zeros(ring.order, dtype=bool)
    mask[ring.mul_table[np.ix_(first.indices, second.indices)]] = True
    return IdealSet(ring, _close(ring, mask, Sidedness.ADDITIVE), sidedness)


def ideal_power(ideal: IdealSet, t: int) -> IdealSet:
    if t < 1:
        raise ValueError('ideal powers start at 1')
    power = ideal
    for _ in range(t - 1):
        power = ideal_product(ideal, power)
    return power


def _require_two_sided(ideal: IdealSet) -> None:
    if ideal.sidedness != Sidedness.TWO_SIDED:
        raise SidednessMismatch(f'expected a two-sided ideal, got {ideal.sidedness.value}')


def nilpotency_index(ideal: IdealSet) -> Optional[int]:
    """Least t with I^t = 0, or None when the powers stabilise above zero."""
    _require_two_sided(ideal)
    power, t = ideal, 1
    while not power.is_zero:
        following = ideal_product(ideal, power)
        if following == power:
            return None
        power, t = following, t + 1
    return t


def is_nil(ideal: IdealSet) -> bool:
    return bool(ideal.ring.nil_mask[ideal.mask].all())


def nil_elements(ring: FiniteRing) -> FrozenSet[int]:
    return ring.nil_elements()


def quasi_regular_set(ring: FiniteRing) -> FrozenSet[int]:
    """{x : 1 - x is a unit}."""
    one_minus = ring.add_table[ring.one][ring.negatives]
    return frozenset(np.flatnonzero(ring.unit_mask[one_minus]).tolist())


def jacobson_radical(ring: FiniteRing) -> IdealSet:
    """{x : 1 + rx is a unit for every r}, which equals {x : 1 + RxR ⊆ U(R)}."""
    return ring.memoize('jacobson_radical', lambda: _jacobson_radical(ring))


def _jacobson_radical(ring: FiniteRing) -> IdealSet:
    shifted = ring.add_table[ring.one][ring.mul_table]  # [r, x] -> 1 + rx
    mask = ring.unit_mask[shifted].all(axis=0)
    radical = IdealSet(ring, mask, Sidedness.TWO_SIDED)
    if not (_close(ring, mask, Sidedness.TWO_SIDED) == mask).all():
        raise AssertionError('the Jacobson radical is not a two-sided ideal')
    if nilpotency_index(radical) is None:
        raise AssertionError('the Jacobson radical of a finite ring is not nilpotent')
    return radical


def prime_radical(ring: FiniteRing) -> IdealSet:
    """Largest nilpotent two-sided ideal, grown from nilpotent principal ideals."""
    return ring.memoize('prime_radical', lambda: _prime_radical(ring))


def _prime_radical(ring: FiniteRing) -> IdealSet:
    jacobson = jacobson_radical(ring)
    accumulated = zero_ideal(ring)
    for x in np.flatnonzero(ring.nil_mask & jacobson.mask):
        if accumulated.mask[x]:
            continue
        principal = ideal_generated(ring, int(x))
        if nilpotency_index(principal) is not None:
            accumulated = ideal_sum(accumulated, principal)
    if nilpotency_index(accumulated) is None:
        raise AssertionError('the sum of nilpotent ideals is not nilpotent')
    if not accumulated <= jacobson:
        raise AssertionError('the prime radical is not contained in the Jacobson radical')
    return accumulated


def _check_cap(ring: FiniteRing, max_order: Optional[int], default: int) -> None:
    cap = default if max_order is None else max_order
    if ring.order > cap:
        raise OracleCapExceeded(ring.order, cap)


def all_ideals_oracle(
    ring: FiniteRing,
    sidedness: Sidedness = Sidedness.TWO_SIDED,
    max_order: Optional[int] = None,
) -> List[IdealSet]:
    """Every ideal of the given sidedness, by crawling sums of principal ideals."""
    _check_cap(ring, max_order, settings.ORACLE_MAX_ORDER)
    principals: Dict[bytes, np.ndarray] = {}
    for x in ring.elements:
        mask = _close(ring, _mask_of(ring, [x]), sidedness)
        principals.setdefault(mask.tobytes(), mask)
    found: Dict[bytes, np.ndarray] = dict(principals)
    frontier = list(principals.values())
    while frontier:
        following = []
        for mask in frontier:
            for principal in principals.values():
                if (~principal | mask).all():
                    continue
                grown = _close(ring, mask | principal, sidedness)
                key = grown.tobytes()
                if key not in found:
                    found[key] = grown
                    following.append(grown)
        frontier = following
    logger.debug('Enumerated %s %s ideals of a ring of order %s',
                 len(found), sidedness.value, ring.order)
    ideals = [IdealSet(ring, mask, sidedness) for mask in found.values()]
    return sorted(ideals, key=lambda ideal: (len(ideal), ideal.indices.tolist()))


def _require_proper(ideal: IdealSet) -> None:
    _require_two_sided(ideal)
    if ideal.is_whole:
        raise NotAnIdeal('the whole ring is not a proper ideal')


def prime_violation(ideal: IdealSet) -> Optional[tuple]:
    """Least (a, b) outside I with aRb ⊆ I."""
    _require_proper(ideal)
    ring = ideal.ring
    outside = np.flatnonzero(~ideal.mask)
    for a in outside:
        products = ring.mul_table[ring.mul_table[a]][:, outside]  # [r, b] -> arb
        inside = ideal.mask[products].all(axis=0)
        if inside.any():
            return int(a), int(outside[np.argmax(inside)])
    return None


def is_prime_ideal(ideal: IdealSet) -> bool:
    return prime_violation(ideal) is None


def is_completely_prime_ideal(ideal: IdealSet) -> bool:
    _require_proper(ideal)
    ring, mask = ideal.ring, ideal.mask
    bad = mask[ring.mul_table] & ~mask[:, None] & ~mask[None, :]
    return not bad.any()


def prime_ideals_oracle(ring: FiniteRing, max_order: Optional[int] = None) -> List[IdealSet]:
    return [
        ideal for ideal in all_ideals_oracle(ring, max_order=max_order)
        if not ideal.is_whole and is_prime_ideal(ideal)
    ]


def prime_radical_oracle(ring: FiniteRing, max_order: Optional[int] = None) -> IdealSet:
    """Intersection of all prime ideals."""
    mask = np.ones(ring.order, dtype=bool)
    for ideal in prime_ideals_oracle(ring, max_order):
        mask &= ideal.mask
    return IdealSet(ring, mask, Sidedness.TWO_SIDED)


def strongly_nilpotent_elements(ring: FiniteRing) -> FrozenSet[int]:
    """Elements a such that every sequence x_0 = a, x_(i+1) in x_i R x_i reaches zero."""
    successors = ring.mul_table[ring.mul_table, np.arange(ring.order)[:, None]]  # [y, r] -> yry
    alive = np.ones(ring.order, dtype=bool)
    alive[ring.zero] = False
    while True:
        keep = alive & alive[successors].any(axis=1)
        if (keep == alive).all():
            break
        alive = keep
    return frozenset(np.flatnonzero(~alive).tolist())


class LocalNilpotency(NamedTuple):
    holds: bool
    witness: Optional[int]


def is_locally_nilpotent(ideal: IdealSet) -> LocalNilpotency:
    """Whether RxR is nilpotent for every x in the ideal."""
    ring = ideal.ring
    if ideal.mask[ring.one] and ring.order > 1:
        return LocalNilpotency(False, ring.one)
    for x in ideal:
        if nilpotency_index(ideal_generated(ring, x)) is None:
            return LocalNilpotency(False, x)
    return LocalNilpotency(True, None)


def _t_nilpotent_game(ideal: IdealSet, side: Sidedness) -> bool:
    ring = ideal.ring
    nonzero = ideal.indices[ideal.indices != ring.zero]
    if side == Sidedness.LEFT:
        successors = ring.mul_table[:, nonzero]  # a_1 ... a_k a
    else:
        successors = ring.mul_table[nonzero, :].T  # a a_k ... a_1
    alive = np.zeros(ring.order, dtype=bool)
    alive[nonzero] = True
    # Every nonzero product of ideal members lies in the ideal.
    while True:
        keep = alive & alive[successors].any(axis=1)
        if (keep == alive).all():
            break
        alive = keep
    return not alive.any()


def is_T_nilpotent(ideal: IdealSet, side: Sidedness = Sidedness.LEFT) -> bool:  # noqa: N802
    if side not in (Sidedness.LEFT, Sidedness.RIGHT):
        raise SidednessMismatch('T-nilpotency is left or right')
    verdict = nilpotency_index(ideal) is not None
    if len(ideal) <= settings.T_NILPOTENT_GAME_MAX_SIZE:
        if _t_nilpotent_game(ideal, side) != verdict:
            raise AssertionError('T-nilpotency game disagrees with nilpotency of the ideal')
    return verdict


def maximal_right_ideals_oracle(
    ring: FiniteRing,
    max_order: Optional[int] = None,
) -> List[IdealSet]:
    proper = [
        ideal for ideal in all_ideals_oracle(ring, Sidedness.RIGHT, max_order)
        if not ideal.mask[ring.one]
    ]
    return [
        ideal for ideal in proper
        if not any(ideal <= other and ideal != other for other in proper)
    ]


def maximal_left_ideals_oracle(
    ring: FiniteRing,
    max_order: Optional[int] = None,
) -> List[IdealSet]:
    return [
        IdealSet(ring, ideal.mask, Sidedness.LEFT)
        for ideal in maximal_right_ideals_oracle(ring.opposite(), max_order)
    ]


def jacobson_radical_oracle(ring: FiniteRing, max_order: Optional[int] = None) -> IdealSet:
    """Intersection of the maximal right ideals."""
    _check_cap(ring, max_order, settings.MAXIMAL_IDEAL_CHECK_MAX_ORDER)
    mask = np.ones(ring.order, dtype=bool)
    maximal = maximal_right_ideals_oracle(ring, ring.order)
    logger.debug('Intersecting %s maximal right ideals', len(maximal))
    for ideal in maximal:
        mask &= ideal.mask
    return IdealSet(ring, mask, Sidedness.TWO_SIDED)


def is_two_sided(ideal: IdealSet) -> bool:
    return bool((_close(ideal.ring, ideal.mask, Sidedness.TWO_SIDED) == ideal.mask).all())
