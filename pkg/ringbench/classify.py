"""Membership of a finite ring in the periodicity and radical classes.

Every verdict carries enough payload to be re-verified: a witness per element
for positives, a single `Certificate` for negatives. Searches scan elements in
index order, so witnesses are the lexicographically least ones.
"""
from dataclasses import dataclass, field
from enum import Enum
from functools import wraps
import logging
from typing import Any, Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np
from sympy import nextprime

from ringbench.conf import settings
from ringbench.constructions import quotient
from ringbench.core import ElementLike, EuwDecomposition, FiniteRing
from ringbench.ideals import (
    IdealSet,
    Sidedness,
    is_two_sided,
    jacobson_radical,
    maximal_left_ideals_oracle,
    maximal_right_ideals_oracle,
    prime_radical,
)

logger = logging.getLogger(__name__)

CLASS_NAMES = (
    'periodic',
    'potent',
    'weakly-periodic',
    'strongly-periodic',
    'strongly-periodic-commuting',
    '2-primal',
    'nil-semicommutative',
    'abelian',
    'right-quasi-duo',
    'left-quasi-duo',
    'J-clean',
    'J-clean-like',
    'potent-lifting',
    'generalized-n-like',
)

NO_WITNESS = -1


@dataclass(frozen=True)
class Certificate:
    kind: str
    elements: Tuple[int, ...]
    equation: str
    parameters: Dict[str, int] = field(default_factory=dict)

    def as_dict(self) -> Dict[str, Any]:
        return {
            'kind': self.kind,
            'elements': list(self.elements),
            'equation': self.equation,
            'parameters': dict(self.parameters),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Certificate':
        return cls(
            kind=data['kind'],
            elements=tuple(int(i) for i in data['elements']),
            equation=data['equation'],
            parameters={k: int(v) for k, v in data.get('parameters', {}).items()},
        )


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: Any = None
    certificate: Optional[Certificate] = None
    details: Dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.holds

    def as_dict(self) -> Dict[str, Any]:
        return {
            'holds': self.holds,
            'witness': self.witness,
            'certificate': self.certificate.as_dict() if self.certificate else None,
            **self.details,
        }


def _memoized(name: str) -> Callable:
    def decorator(function: Callable[[FiniteRing], Verdict]) -> Callable[[FiniteRing], Verdict]:
        @wraps(function)
        def wrapper(ring: FiniteRing) -> Verdict:
            return ring.memoize(('verdict', name), lambda: function(ring))
        return wrapper
    return decorator


def power_column(ring: FiniteRing, exponent: int) -> np.ndarray:
    """`a**exponent` for every element a."""
    if exponent < ring.power_table.shape[1]:
        return ring.power_table[:, exponent]
    return np.array([ring.large_pow(a, exponent) for a in ring.elements], dtype=np.intp)


def _differences(ring: FiniteRing, candidates: np.ndarray) -> np.ndarray:
    """`[a, j] -> a - candidates[j]`."""
    return ring.add_table[:, ring.negatives[candidates]]


def _commuting(ring: FiniteRing, candidates: np.ndarray) -> np.ndarray:
    """`[a, j] -> a·candidates[j] == candidates[j]·a`."""
    return ring.mul_table[:, candidates] == ring.mul_table[candidates, :].T


def decomposition_search(
    ring: FiniteRing,
    candidates: np.ndarray,
    target: np.ndarray,
    commuting: bool = False,
) -> np.ndarray:
    """Least candidate c with a - c in target (and ac = ca) for every a, or -1."""
    candidates = np.asarray(candidates, dtype=np.intp)
    if candidates.size == 0:
        return np.full(ring.order, NO_WITNESS, dtype=np.intp)
    ok = target[_differences(ring, candidates)]
    if commuting:
        ok &= _commuting(ring, candidates)
    found = ok.any(axis=1)
    return np.where(found, candidates[np.argmax(ok, axis=1)], NO_WITNESS)


def _search_verdict(
    ring: FiniteRing,
    candidates: np.ndarray,
    target: np.ndarray,
    kind: str,
    equation: str,
    commuting: bool = False,
) -> Verdict:
    witnesses = decomposition_search(ring, candidates, target, commuting)
    stuck = np.flatnonzero(witnesses == NO_WITNESS)
    if stuck.size:
        parameters = {'commuting': 1} if commuting else {}
        return Verdict(False, certificate=Certificate(
            kind, (int(stuck[0]),), equation, parameters,
        ))
    return Verdict(True, witness=witnesses.tolist())


def _potents(ring: FiniteRing) -> np.ndarray:
    return np.flatnonzero(ring.potent_mask)


@_memoized('periodic')
def is_periodic(ring: FiniteRing) -> Verdict:
    witnesses = [ring.power_cycle(a) for a in ring.elements]
    for witness in witnesses:
        if not witness.verify(ring):
            raise AssertionError(f'periodicity witness {witness} does not verify')
    return Verdict(True, witness=[(w.k, w.l) for w in witnesses])


@_memoized('potent')
def is_potent_ring(ring: FiniteRing) -> Verdict:
    bad = np.flatnonzero(~ring.potent_mask)
    if bad.size:
        return Verdict(False, certificate=Certificate(
            'not-potent', (int(bad[0]),), 'a^n != a for every n >= 2',
        ))
    return Verdict(True, witness=[ring.potency_exponent(a) for a in ring.elements])


@_memoized('weakly-periodic')
def is_weakly_periodic(ring: FiniteRing) -> Verdict:
    verdict = _search_verdict(
        ring, _potents(ring), ring.nil_mask,
        'no-potent-nil-decomposition', 'a - p is not nilpotent for every potent p',
    )
    commuting = decomposition_search(ring, _potents(ring), ring.nil_mask, commuting=True)
    details = {'commuting': bool((commuting != NO_WITNESS).all())}
    return Verdict(verdict.holds, verdict.witness, verdict.certificate, details)


def _strongly_periodic(ring: FiniteRing, commuting: bool) -> Verdict:
    return _search_verdict(
        ring, _potents(ring), prime_radical(ring).mask,
        'no-potent-prime-radical-decomposition',
        'a - p is outside P(R) for every potent p' + (' commuting with a' if commuting else ''),
        commuting=commuting,
    )


@_memoized('strongly-periodic')
def is_strongly_periodic(ring: FiniteRing) -> Verdict:
    return _strongly_periodic(ring, commuting=False)


@_memoized('strongly-periodic-commuting')
def is_strongly_periodic_commuting(ring: FiniteRing) -> Verdict:
    return _strongly_periodic(ring, commuting=True)


@_memoized('2-primal')
def is_2_primal(ring: FiniteRing) -> Verdict:
    outside = np.flatnonzero(ring.nil_mask & ~prime_radical(ring).mask)
    if outside.size:
        return Verdict(False, certificate=Certificate(
            'nilpotent-outside-prime-radical', (int(outside[0]),), 'a is nilpotent, a ∉ P(R)',
        ))
    return Verdict(True, witness=sorted(ring.nil_elements()))


@_memoized('nil-semicommutative')
def is_nil_semicommutative(ring: FiniteRing) -> Verdict:
    nilpotents = np.flatnonzero(ring.nil_mask)
    mul = ring.mul_table
    for a in nilpotents:
        annihilated = nilpotents[mul[a, nilpotents] == ring.zero]
        if not annihilated.size:
            continue
        products = mul[mul[a][:, None], annihilated[None, :]]  # [x, b] -> axb
        bad = np.argwhere(products != ring.zero)
        if bad.size:
            x, j = bad[0]
            return Verdict(False, certificate=Certificate(
                'nil-semicommutative', (int(a), int(x), int(annihilated[j])), 'ab = 0, axb != 0',
            ))
    return Verdict(True)


@_memoized('abelian')
def is_abelian_ring(ring: FiniteRing) -> Verdict:
    idempotents = np.flatnonzero(ring.idempotent_mask)
    bad = np.argwhere(ring.mul_table[idempotents, :] != ring.mul_table[:, idempotents].T)
    if bad.size:
        i, r = bad[0]
        return Verdict(False, certificate=Certificate(
            'non-central-idempotent', (int(idempotents[i]), int(r)), 'er != re',
        ))
    return Verdict(True, witness=idempotents.tolist())


@_memoized('J-clean-like')
def is_J_clean_like(ring: FiniteRing) -> Verdict:  # noqa: N802
    return _search_verdict(
        ring, _potents(ring), jacobson_radical(ring).mask,
        'no-potent-jacobson-decomposition', 'a - p is outside J(R) for every potent p',
    )


@_memoized('J-clean')
def is_J_clean(ring: FiniteRing) -> Verdict:  # noqa: N802
    return _search_verdict(
        ring, np.flatnonzero(ring.idempotent_mask), jacobson_radical(ring).mask,
        'no-idempotent-jacobson-decomposition', 'a - e is outside J(R) for every idempotent e',
    )


def j_potent_mask(ring: FiniteRing) -> np.ndarray:
    """Elements p with p - p^n in J(R) for some n >= 2."""
    powers = ring.power_table[:, 2:]
    differences = ring.add_table[np.arange(ring.order)[:, None], ring.negatives[powers]]
    return jacobson_radical(ring).mask[differences].any(axis=1)


@_memoized('potent-lifting')
def potent_lifts_mod_J(ring: FiniteRing) -> Verdict:  # noqa: N802
    lifts = decomposition_search(ring, _potents(ring), jacobson_radical(ring).mask)
    stuck = np.flatnonzero(j_potent_mask(ring) & (lifts == NO_WITNESS))
    if stuck.size:
        return Verdict(False, certificate=Certificate(
            'non-lifting-potent', (int(stuck[0]),),
            'p - p^n ∈ J(R) but p - q ∉ J(R) for every potent q',
        ))
    witness = {int(p): int(lifts[p]) for p in np.flatnonzero(j_potent_mask(ring))}
    return Verdict(True, witness=witness)


def _noncommuting_mod_radical(ring: FiniteRing) -> Optional[Tuple[int, int]]:
    commutator = ring.add_table[ring.mul_table, ring.negatives[ring.mul_table.T]]
    bad = np.argwhere(~jacobson_radical(ring).mask[commutator])
    return (int(bad[0][0]), int(bad[0][1])) if bad.size else None


def is_quasi_duo(
    ring: FiniteRing,
    side: Sidedness = Sidedness.RIGHT,
    oracle_max_order: Optional[int] = None,
) -> Verdict:
    """Quasi-duo via commutativity of R/J(R), with an oracle on small rings.

    For finite rings R/J(R) is a product of matrix rings over finite fields, and
    it is quasi-duo exactly when every block is 1×1. The maximal one-sided ideal
    oracle runs up to `oracle_max_order` (default `ORACLE_MAX_ORDER`).
    """
    cap = settings.ORACLE_MAX_ORDER if oracle_max_order is None else oracle_max_order
    return ring.memoize(
        ('verdict', 'quasi-duo', side, cap), lambda: _quasi_duo(ring, side, cap),
    )


def _quasi_duo(ring: FiniteRing, side: Sidedness, cap: int) -> Verdict:
    if side not in (Sidedness.LEFT, Sidedness.RIGHT):
        raise ValueError('quasi-duo is a left or right property')
    pair = _noncommuting_mod_radical(ring)
    holds = pair is None
    details: Dict[str, Any] = {'oracle': None}
    if ring.order <= cap:
        if side == Sidedness.RIGHT:
            maximal = maximal_right_ideals_oracle(ring, cap)
        else:
            maximal = maximal_left_ideals_oracle(ring, cap)
        one_sided = [ideal for ideal in maximal if not is_two_sided(ideal)]
        details['oracle'] = not one_sided
        if one_sided:
            details['one_sided_maximal_ideal'] = one_sided[0].indices.tolist()
        if details['oracle'] != holds:
            raise AssertionError('quasi-duo oracle disagrees with commutativity of R/J(R)')
    if pair is None:
        return Verdict(True, details=details)
    return Verdict(False, details=details, certificate=Certificate(
        'noncommutative-mod-radical', pair, 'ab - ba ∉ J(R)',
    ))


def is_right_quasi_duo(ring: FiniteRing) -> Verdict:
    return is_quasi_duo(ring, Sidedness.RIGHT)


def is_left_quasi_duo(ring: FiniteRing) -> Verdict:
    return is_quasi_duo(ring, Sidedness.LEFT)


def n_like_defect(ring: FiniteRing, n: int) -> np.ndarray:
    """`[a, b] -> (ab)^n - ab^n - a^n b + ab`."""
    column = power_column(ring, n)
    add, mul, neg = ring.add_table, ring.mul_table, ring.negatives
    elements = np.arange(ring.order)
    product_power = column[mul]
    a_bn = mul[elements[:, None], column[None, :]]
    an_b = mul[column[:, None], elements[None, :]]
    return add[add[product_power, neg[a_bn]], add[neg[an_b], mul]]


def is_generalized_n_like(ring: FiniteRing, n: int) -> Verdict:
    if n < 2:
        raise ValueError('generalized n-like rings need n >= 2')
    return ring.memoize(('verdict', 'n-like', n), lambda: _generalized_n_like(ring, n))


def _generalized_n_like(ring: FiniteRing, n: int) -> Verdict:
    bad = np.argwhere(n_like_defect(ring, n) != ring.zero)
    if bad.size:
        return Verdict(False, certificate=Certificate(
            'generalized-n-like', (int(bad[0][0]), int(bad[0][1])),
            '(ab)^n - ab^n - a^n b + ab != 0', {'n': n},
        ))
    return Verdict(True, details={'n': n})


def generalized_n_like_summary(
    ring: FiniteRing,
    exponents: Optional[Sequence[int]] = None,
) -> Verdict:
    exponents = tuple(exponents or settings.N_LIKE_EXPONENTS)
    verdicts = {n: is_generalized_n_like(ring, n) for n in exponents}
    holding = [n for n, verdict in verdicts.items() if verdict]
    details = {'exponents': {str(n): verdict.holds for n, verdict in verdicts.items()}}
    if holding:
        return Verdict(True, witness=holding[0], details=details)
    return Verdict(False, certificate=verdicts[exponents[0]].certificate, details=details)


def torsion_exponent(ring: FiniteRing, u: ElementLike) -> int:
    """Least m >= 1 with u^m = 1 for a unit u."""
    witness = ring.power_cycle(u)
    if witness.k != 1:
        raise ValueError(f'{ring.label(ring.check(u))} is not a unit')
    return witness.l - 1


def euw_decomposition(ring: FiniteRing, a: ElementLike) -> Optional[EuwDecomposition]:
    """Least (e, u, w) with a = eu + w, e idempotent, u a unit, w in P(R), all commuting."""
    a = ring.check(a)
    mul, add, neg = ring.mul_table, ring.add_table, ring.negatives
    units = np.flatnonzero(ring.unit_mask)
    radical = prime_radical(ring).mask
    for e in np.flatnonzero(ring.idempotent_mask):
        eu = mul[e, units]
        w = add[a, neg[eu]]
        ok = (
            radical[w]
            & (eu == mul[units, e])
            & (mul[e, w] == mul[w, e])
            & (mul[units, w] == mul[w, units])
        )
        if ok.any():
            j = int(np.argmax(ok))
            u = int(units[j])
            return EuwDecomposition(
                element=a, e=int(e), u=u, torsion_exponent=torsion_exponent(ring, u), w=int(w[j]),
            )
    return None


def verify_euw(ring: FiniteRing, decomposition: EuwDecomposition) -> bool:
    e, u, w = decomposition.e, decomposition.u, decomposition.w
    return (
        ring.mul(e, e) == e
        and ring.pow(u, decomposition.torsion_exponent) == ring.one
        and w in prime_radical(ring)
        and ring.commute(e, u) and ring.commute(e, w) and ring.commute(u, w)
        and ring.add(ring.mul(e, u), w) == decomposition.element
    )


def euw_verdict(ring: FiniteRing) -> Verdict:
    return ring.memoize(('verdict', 'euw'), lambda: _euw_verdict(ring))


def _euw_verdict(ring: FiniteRing) -> Verdict:
    decompositions = []
    for a in ring.elements:
        decomposition = euw_decomposition(ring, a)
        if decomposition is None:
            return Verdict(False, certificate=Certificate(
                'no-euw-decomposition', (a,), 'a != eu + w for every commuting e, u, w',
            ))
        decompositions.append(decomposition.as_dict())
    return Verdict(True, witness=decompositions)


def radical_period(ring: FiniteRing, a: ElementLike) -> Optional[int]:
    """Least e >= 1 with a - a^(1+e) in P(R), or None when a + P(R) is not potent.

    The period of a + P(R) divides l - k for a^k = a^l, so scanning up to l - k
    decides it.
    """
    a = ring.check(a)
    witness = ring.power_cycle(a)
    radical = prime_radical(ring).mask
    for e in range(1, witness.l - witness.k + 1):
        if radical[ring.sub(a, ring.power_from_witness(witness, 1 + e))]:
            return e
    return None


def prime_exponent_witness(ring: FiniteRing, a: ElementLike) -> Optional[int]:
    """Least prime m with a - a^m in P(R).

    The exponents that work are exactly m >= 2 with m = 1 mod the period of
    a + P(R), so the least such prime exists whenever that coset is potent.
    """
    period = radical_period(ring, a)
    if period is None:
        return None
    m = 2
    while m % period != 1 % period:
        m = int(nextprime(m))
    return m


def prime_exponent_verdict(ring: FiniteRing) -> Verdict:
    exponents = []
    for a in ring.elements:
        m = prime_exponent_witness(ring, a)
        if m is None:
            return Verdict(False, certificate=Certificate(
                'no-prime-exponent', (a,), 'a - a^m ∉ P(R) for every prime m',
            ))
        exponents.append(m)
    return Verdict(True, witness=exponents)


def is_quotient_potent(ring: FiniteRing, ideal: IdealSet) -> Verdict:
    image = quotient(ring, ideal)
    verdict = is_potent_ring(image.ring)
    if verdict.holds:
        return verdict
    assert verdict.certificate is not None
    representative = int(image.representatives[verdict.certificate.elements[0]])
    return Verdict(False, certificate=Certificate(
        'not-potent-modulo-ideal', (representative,), 'a^n - a ∉ I for every n >= 2',
        {'ideal_size': len(ideal)},
    ))


class SequenceOutcome(str, Enum):
    HOLDS = 'holds'
    FAILS = 'fails'
    INCONCLUSIVE = 'inconclusive'


@dataclass(frozen=True)
class SequenceResult:
    outcome: SequenceOutcome
    prefix: Tuple[int, ...] = ()
    cycle: Tuple[int, ...] = ()
    states: int = 0
    max_exponent: int = 2

    def as_dict(self) -> Dict[str, Any]:
        return {
            'outcome': self.outcome.value,
            'prefix': list(self.prefix),
            'cycle': list(self.cycle),
            'states': self.states,
            'max_exponent': self.max_exponent,
        }


def difference_set(ring: FiniteRing, a: int, max_exponent: int) -> FrozenSet[int]:
    """{a - a^n : 2 <= n <= max_exponent}."""
    return frozenset(
        ring.sub(a, ring.large_pow(a, n)) for n in range(2, max_exponent + 1)
    )


def _step(ring: FiniteRing, state: FrozenSet[int], differences: FrozenSet[int]) -> FrozenSet[int]:
    products = ring.mul_table[np.ix_(sorted(state), sorted(differences))]
    return frozenset(np.unique(products).tolist())


def sequence_vanishing(
    ring: FiniteRing,
    max_exponent: Optional[int] = None,
    max_states: Optional[int] = None,
) -> SequenceResult:
    """Decide whether every sequence admits exponents making a prefix product vanish.

    States are the sets of attainable nonzero partial products
    (a_1 - a_1^(n_1))···(a_k - a_k^(n_k)); a branch whose next state contains 0
    is won, and the property fails exactly when a cycle of zero-free states is
    reachable from {1}.
    """
    max_exponent = max(2, ring.order if max_exponent is None else max_exponent)
    max_states = settings.SEQUENCE_MAX_STATES if max_states is None else max_states
    moves: Dict[FrozenSet[int], int] = {}
    for a in ring.elements:
        moves.setdefault(difference_set(ring, a, max_exponent), a)
    choices = [(a, differences) for differences, a in moves.items()]

    initial = frozenset({ring.one})
    if ring.zero in initial:
        return SequenceResult(SequenceOutcome.HOLDS, states=1, max_exponent=max_exponent)
    depth_of: Dict[FrozenSet[int], int] = {initial: 0}
    finished = set()
    path: List[int] = []
    stack = [(initial, iter(choices))]
    while stack:
        state, pending = stack[-1]
        for a, differences in pending:
            following = _step(ring, state, differences)
            if ring.zero in following or following in finished:
                continue
            if following in depth_of:
                start = depth_of[following]
                return SequenceResult(
                    SequenceOutcome.FAILS,
                    prefix=tuple(path[:start]),
                    cycle=tuple(path[start:]) + (a,),
                    states=len(depth_of) + len(finished),
                    max_exponent=max_exponent,
                )
            if len(depth_of) + len(finished) >= max_states:
                return SequenceResult(
                    SequenceOutcome.INCONCLUSIVE,
                    states=len(depth_of) + len(finished),
                    max_exponent=max_exponent,
                )
            depth_of[following] = len(path) + 1
            path.append(a)
            stack.append((following, iter(choices)))
            break
        else:
            stack.pop()
            del depth_of[state]
            finished.add(state)
            if path:
                path.pop()
    return SequenceResult(SequenceOutcome.HOLDS, states=len(finished), max_exponent=max_exponent)


def verify_sequence_witness(
    ring: FiniteRing,
    prefix: Sequence[int],
    cycle: Sequence[int],
    max_exponent: Optional[int] = None,
) -> bool:
    """Replay a failing sequence: every state stays zero-free and the cycle returns."""
    if not cycle:
        return False
    max_exponent = max(2, ring.order if max_exponent is None else max_exponent)
    state = frozenset({ring.one})
    for a in prefix:
        state = _step(ring, state, difference_set(ring, ring.check(a), max_exponent))
        if ring.zero in state:
            return False
    start = state
    for a in cycle:
        state = _step(ring, state, difference_set(ring, ring.check(a), max_exponent))
        if ring.zero in state:
            return False
    return state == start


def verify_certificate(ring: FiniteRing, certificate: Certificate) -> bool:
    """Re-evaluate a negative certificate on the named elements."""
    kind, elements = certificate.kind, [ring.check(i) for i in certificate.elements]
    mul, zero = ring.mul, ring.zero
    if kind == 'not-potent':
        return not ring.potent_mask[elements[0]]
    if kind == 'nil-semicommutative':
        a, x, b = elements
        nil = ring.nil_mask
        return bool(nil[a] and nil[b]) and mul(a, b) == zero and mul(mul(a, x), b) != zero
    if kind == 'non-central-idempotent':
        e, r = elements
        return mul(e, e) == e and mul(e, r) != mul(r, e)
    if kind == 'nilpotent-outside-prime-radical':
        return bool(ring.nil_mask[elements[0]]) and elements[0] not in prime_radical(ring)
    if kind == 'noncommutative-mod-radical':
        a, b = elements
        return ring.sub(mul(a, b), mul(b, a)) not in jacobson_radical(ring)
    if kind == 'generalized-n-like':
        a, b = elements
        return int(n_like_defect(ring, certificate.parameters['n'])[a, b]) != zero
    searches: Dict[str, Tuple[np.ndarray, np.ndarray, bool]] = {
        'no-potent-nil-decomposition': (_potents(ring), ring.nil_mask, False),
        'no-potent-prime-radical-decomposition': (
            _potents(ring), prime_radical(ring).mask,
            bool(certificate.parameters.get('commuting')),
        ),
        'no-potent-jacobson-decomposition': (_potents(ring), jacobson_radical(ring).mask, False),
        'no-idempotent-jacobson-decomposition': (
            np.flatnonzero(ring.idempotent_mask), jacobson_radical(ring).mask, False,
        ),
    }
    if kind in searches:
        candidates, target, commuting = searches[kind]
        ok = target[_differences(ring, candidates)[elements[0]]]
        if commuting:
            ok &= _commuting(ring, candidates)[elements[0]]
        return not ok.any()
    if kind == 'non-lifting-potent':
        p = elements[0]
        lifts = jacobson_radical(ring).mask[_differences(ring, _potents(ring))[p]]
        return bool(j_potent_mask(ring)[p]) and not lifts.any()
    if kind == 'no-euw-decomposition':
        return euw_decomposition(ring, elements[0]) is None
    if kind == 'no-prime-exponent':
        return prime_exponent_witness(ring, elements[0]) is None
    raise ValueError(f'unknown certificate kind {kind!r}')


VERDICTS: Dict[str, Callable[[FiniteRing], Verdict]] = {
    'periodic': is_periodic,
    'potent': is_potent_ring,
    'weakly-periodic': is_weakly_periodic,
    'strongly-periodic': is_strongly_periodic,
    'strongly-periodic-commuting': is_strongly_periodic_commuting,
    '2-primal': is_2_primal,
    'nil-semicommutative': is_nil_semicommutative,
    'abelian': is_abelian_ring,
    'right-quasi-duo': is_right_quasi_duo,
    'left-quasi-duo': is_left_quasi_duo,
    'J-clean': is_J_clean,
    'J-clean-like': is_J_clean_like,
    'potent-lifting': potent_lifts_mod_J,
    'generalized-n-like': generalized_n_like_summary,
}


@dataclass
class ClassificationReport:
    ring_hash: str
    order: int
    verdicts: Dict[str, Verdict]

    def __getitem__(self, name: str) -> Verdict:
        return self.verdicts[name]

    def bits(self) -> Dict[str, bool]:
        return {name: verdict.holds for name, verdict in self.verdicts.items()}

    def as_dict(self) -> Dict[str, Any]:
        return {
            'ring': self.ring_hash,
            'order': self.order,
            'bits': self.bits(),
            'classes': {name: verdict.as_dict() for name, verdict in self.verdicts.items()},
        }


def classification_report(ring: FiniteRing) -> ClassificationReport:
    logger.debug('Classifying ring %s', ring.content_hash[:12])
    return ClassificationReport(
        ring_hash=ring.content_hash,
        order=ring.order,
        verdicts={name: VERDICTS[name](ring) for name in CLASS_NAMES},
    )
