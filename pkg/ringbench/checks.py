"""Executable checks for the periodicity, strong-periodicity and J-clean-like results.

Biconditionals pass when both sides agree (including when both are false);
implications report ``skipped`` when their hypothesis is not met.
"""
from dataclasses import asdict, dataclass, field
from enum import Enum
from functools import lru_cache
import json
import logging
import time
from typing import (
    Any,
    Dict,
    Iterable,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Type,
    Union,
)

from django.dispatch import Signal
import numpy as np

from ringbench import classify as cl
from ringbench import constructions as c
from ringbench.cache import json_default
from ringbench.catalog import CatalogEntry, build_entry, entry_hash
from ringbench.conf import settings
from ringbench.core import FiniteRing, common_exponent
from ringbench.exceptions import (
    NotAnEndomorphism,
    OracleCapExceeded,
    OrderCapExceeded,
    SchemaMismatch,
    UnknownCheck,
)
from ringbench.ideals import (
    IdealSet,
    Sidedness,
    closure_of,
    ideal_generated,
    ideal_power,
    is_completely_prime_ideal,
    is_locally_nilpotent,
    is_nil,
    is_T_nilpotent,
    jacobson_radical,
    jacobson_radical_oracle,
    nilpotency_index,
    prime_ideals_oracle,
    prime_radical,
    prime_radical_oracle,
    quasi_regular_set,
    strongly_nilpotent_elements,
)

logger = logging.getLogger(__name__)

Subject = Union[FiniteRing, c.MoritaContextSpec]
Claim = Union[bool, cl.Verdict]


class Status(str, Enum):
    PASS = 'pass'
    FAIL = 'fail'
    SKIPPED = 'skipped'
    INCONCLUSIVE = 'inconclusive'


@dataclass(frozen=True)
class CheckConfig:
    seed: int = 0
    subring_samples: int = 20
    max_order: int = 1024
    oracle_max_order: int = 32
    maximal_ideal_max_order: int = 27
    sequence_max_order: int = 64
    sequence_max_states: int = 2 ** 16
    n_like_exponents: Tuple[int, ...] = (2, 3, 4, 5, 6, 7)

    @classmethod
    def from_settings(cls, **overrides: Any) -> 'CheckConfig':
        values = {
            'seed': settings.SEED,
            'subring_samples': settings.SUBRING_SAMPLES,
            'max_order': settings.MAX_ORDER,
            'oracle_max_order': settings.ORACLE_MAX_ORDER,
            'maximal_ideal_max_order': settings.MAXIMAL_IDEAL_CHECK_MAX_ORDER,
            'sequence_max_order': settings.SEQUENCE_MAX_ORDER,
            'sequence_max_states': settings.SEQUENCE_MAX_STATES,
            'n_like_exponents': tuple(settings.N_LIKE_EXPONENTS),
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)

    def as_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data['n_like_exponents'] = list(self.n_like_exponents)
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'CheckConfig':
        data = dict(data)
        data['n_like_exponents'] = tuple(data.get('n_like_exponents', ()))
        return cls(**data)


@dataclass
class VerdictReport:
    check_id: str
    inputs: Tuple[str, ...]
    status: Status
    payload: Dict[str, Any] = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def verdict(self) -> Status:
        return self.status

    def as_dict(self) -> Dict[str, Any]:
        return {
            'check': self.check_id,
            'inputs': list(self.inputs),
            'verdict': self.status.value,
            'payload': self.payload,
            'wall_time': round(self.wall_time, 6),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'VerdictReport':
        return cls(
            check_id=data['check'],
            inputs=tuple(data['inputs']),
            status=Status(data['verdict']),
            payload=data['payload'],
            wall_time=data['wall_time'],
        )


@dataclass
class SuiteReport:
    reports: List[VerdictReport]
    config: CheckConfig = field(default_factory=CheckConfig)

    def counts(self) -> Dict[str, int]:
        counts = {status.value: 0 for status in Status}
        for report in self.reports:
            counts[report.status.value] += 1
        return counts

    @property
    def failures(self) -> List[VerdictReport]:
        return [report for report in self.reports if report.status == Status.FAIL]

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_dict(self) -> Dict[str, Any]:
        return {
            'config': self.config.as_dict(),
            'counts': self.counts(),
            'reports': [report.as_dict() for report in self.reports],
        }

    def to_json(self, **kwargs: Any) -> str:
        return json.dumps(self.as_dict(), default=json_default, **kwargs)


class Outcome(NamedTuple):
    status: Status
    payload: Dict[str, Any]


def _holds(claim: Claim) -> bool:
    return claim.holds if isinstance(claim, cl.Verdict) else bool(claim)


def _render(claims: Dict[str, Claim]) -> Dict[str, Any]:
    rendered: Dict[str, Any] = {}
    for name, claim in claims.items():
        entry: Dict[str, Any] = {'holds': _holds(claim)}
        if isinstance(claim, cl.Verdict) and claim.certificate is not None:
            entry['certificate'] = claim.certificate.as_dict()
        rendered[name] = entry
    return rendered


def equivalence(claims: Dict[str, Claim], **extra: Any) -> Outcome:
    agree = len({_holds(claim) for claim in claims.values()}) <= 1
    return Outcome(Status.PASS if agree else Status.FAIL, {'claims': _render(claims), **extra})


def requirement(claims: Dict[str, Claim], **extra: Any) -> Outcome:
    ok = all(_holds(claim) for claim in claims.values())
    return Outcome(Status.PASS if ok else Status.FAIL, {'claims': _render(claims), **extra})


def implication(premises: Dict[str, Claim], conclusions: Dict[str, Claim], **extra: Any) -> Outcome:
    unmet = [name for name, claim in premises.items() if not _holds(claim)]
    if unmet:
        raise TheoremCheck.Skip(f'hypothesis not met: {", ".join(unmet)}')
    ok = all(_holds(claim) for claim in conclusions.values())
    return Outcome(Status.PASS if ok else Status.FAIL, {
        'premises': _render(premises),
        'conclusions': _render(conclusions),
        **extra,
    })


def combine(outcomes: Dict[str, Outcome]) -> Outcome:
    if not outcomes:
        raise TheoremCheck.Skip('no instance within the order cap')
    failed = any(outcome.status == Status.FAIL for outcome in outcomes.values())
    return Outcome(
        Status.FAIL if failed else Status.PASS,
        {name: outcome.payload for name, outcome in outcomes.items()},
    )


def subject_inputs(subject: Any) -> Tuple[str, ...]:
    if isinstance(subject, FiniteRing):
        return (subject.content_hash,)
    if isinstance(subject, c.MoritaContextSpec):
        return (subject.digest(),)
    return ()


class TheoremCheck:
    abstract = True
    id = ''
    claim = ''
    subject_type: Type = FiniteRing
    completed = Signal()

    class Skip(Exception):
        pass

    def __str__(self) -> str:
        return self.id

    def applicability(self, subject: Any, config: CheckConfig) -> Optional[str]:
        """Reason the check does not apply, or None."""
        return None

    def evaluate(self, subject: Any, config: CheckConfig) -> Outcome:
        raise NotImplementedError()

    def run(self, subject: Any, config: Optional[CheckConfig] = None) -> VerdictReport:
        if not isinstance(subject, self.subject_type):
            raise SchemaMismatch(self.id, self.subject_type, subject)
        config = config or CheckConfig.from_settings()
        started = time.perf_counter()
        try:
            reason = self.applicability(subject, config)
            if reason is not None:
                raise self.Skip(reason)
            outcome = self.evaluate(subject, config)
        except self.Skip as skip:
            outcome = Outcome(Status.SKIPPED, {'reason': str(skip)})
        except OracleCapExceeded as error:
            outcome = Outcome(Status.INCONCLUSIVE, {'reason': str(error)})
        except OrderCapExceeded as error:
            outcome = Outcome(Status.SKIPPED, {'reason': str(error)})
        report = VerdictReport(
            check_id=self.id,
            inputs=subject_inputs(subject),
            status=outcome.status,
            payload=outcome.payload,
            wall_time=time.perf_counter() - started,
        )
        self.completed.send(sender=self.__class__, check=self, report=report)
        return report

    def skipped(self, inputs: Tuple[str, ...], reason: str) -> VerdictReport:
        report = VerdictReport(self.id, inputs, Status.SKIPPED, {'reason': reason})
        self.completed.send(sender=self.__class__, check=self, report=report)
        return report


class RingCheck(TheoremCheck):
    abstract = True
    subject_type = FiniteRing


class MoritaCheck(TheoremCheck):
    abstract = True
    subject_type = c.MoritaContextSpec

    @staticmethod
    def image_ideals(spec: c.MoritaContextSpec) -> Tuple[IdealSet, IdealSet]:
        return closure_of(spec.A, spec.psi_image()), closure_of(spec.B, spec.phi_image())

    def nilpotent_images(self, spec: c.MoritaContextSpec) -> Tuple[int, int]:
        psi_ideal, phi_ideal = self.image_ideals(spec)
        s, t = nilpotency_index(psi_ideal), nilpotency_index(phi_ideal)
        if s is None or t is None:
            raise self.Skip('im(psi) or im(phi) is not nilpotent')
        return s, t


class ExampleCheck(RingCheck):
    """Applies to the ring built by a catalog recipe, recognised by content hash."""

    abstract = True
    entry = ''

    def applicability(self, subject: FiniteRing, config: CheckConfig) -> Optional[str]:
        if subject.content_hash != entry_hash(self.entry):
            return f'not the {self.entry} ring'
        return None


@lru_cache(maxsize=32)
def context_ring(spec: c.MoritaContextSpec, max_order: int) -> FiniteRing:
    return c.morita_ring(spec, max_order=max_order)


def _central(ring: FiniteRing, mask: np.ndarray) -> List[int]:
    return np.flatnonzero(mask & ring.center_mask).tolist()


def _require_order(order: int, config: CheckConfig, what: str) -> None:
    if order > config.max_order:
        raise TheoremCheck.Skip(f'{what} has order {order} above the cap {config.max_order}')


def _quotient(ring: FiniteRing, ideal: IdealSet) -> FiniteRing:
    return c.quotient(ring, ideal).ring


def _nil_ideal(ring: FiniteRing) -> Optional[IdealSet]:
    candidate = closure_of(ring, ring.nil_elements())
    return candidate if candidate.members == ring.nil_elements() else None


def _j_locally_nilpotent(ring: FiniteRing) -> bool:
    return is_locally_nilpotent(jacobson_radical(ring)).holds


def _nil_inside_j(ring: FiniteRing) -> bool:
    return bool((~ring.nil_mask | jacobson_radical(ring).mask).all())


def _power_series(ring: FiniteRing, n: int, config: CheckConfig) -> FiniteRing:
    return c.truncated_skew_power_series(ring, None, n, max_order=config.max_order)


def _x_power(ring: FiniteRing, n: int, m: int) -> int:
    """Index of x^m in R[[x]]/(x^n)."""
    return ring.one * ring.order ** m if m < n else 0


class PeriodicityEquivalence(RingCheck):
    id = 'T1.1'
    claim = 'periodic ⟺ a^m = a^(m+1)f(a) ⟺ a - a^m nilpotent ⟺ potent + commuting nilpotent'

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        for a in ring.elements:
            witness = ring.power_cycle(a)
            m = max(witness.k, 2)
            monomial = ring.mul(ring.pow(a, m + 1), ring.pow(a, witness.monomial_degree))
            difference = ring.sub(a, ring.power_from_witness(witness, witness.n + 1))
            claims = {
                'periodic': witness.verify(ring),
                'monomial': monomial == ring.pow(a, m),
                'nilpotent-difference': bool(ring.nil_mask[difference]),
                'potent-decomposition': ring.potent_decomposition(a).verify(ring),
            }
            if not all(claims.values()):
                return Outcome(Status.FAIL, {'element': a, 'claims': claims})
        return Outcome(Status.PASS, {'elements': ring.order})


class CommonExponent(RingCheck):
    id = 'L2.1'
    claim = 'periodic ⟹ a - a^n, b - b^n nilpotent for a common n'

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        witnesses = [ring.power_cycle(a) for a in ring.elements]
        k = np.array([w.k for w in witnesses], dtype=np.int64)
        period = np.array([w.l - w.k for w in witnesses], dtype=np.int64)
        pair_k = k[:, None] * k[None, :]
        exponent = pair_k * (period[None, :] * k[:, None] * period[:, None] * k[None, :]) + 1
        elements = np.arange(ring.order)

        def powered(own_k: np.ndarray, own_period: np.ndarray) -> np.ndarray:
            return own_k + (exponent - own_k) % own_period

        a_power = ring.power_table[elements[:, None], powered(k[:, None], period[:, None])]
        b_power = ring.power_table[elements[None, :], powered(k[None, :], period[None, :])]
        a_ok = ring.nil_mask[ring.add_table[elements[:, None], ring.negatives[a_power]]]
        b_ok = ring.nil_mask[ring.add_table[elements[None, :], ring.negatives[b_power]]]
        bad = np.argwhere(~(a_ok & b_ok))
        if bad.size:
            a, b = (int(i) for i in bad[0])
            return Outcome(Status.FAIL, {
                'pair': [a, b], 'n': ring.common_exponent(a, b),
            })
        return Outcome(Status.PASS, {'pairs': ring.order ** 2})


class MoritaPeriodicity(MoritaCheck):
    id = 'T2.2'
    claim = 'im(psi), im(phi) nilpotent ⟹ (A, B periodic ⟺ T periodic)'

    def evaluate(self, spec: c.MoritaContextSpec, config: CheckConfig) -> Outcome:
        s, t = self.nilpotent_images(spec)
        ring = context_ring(spec, config.max_order)
        outcome = equivalence({
            'A and B periodic': cl.is_periodic(spec.A).holds and cl.is_periodic(spec.B).holds,
            'T periodic': cl.is_periodic(ring),
        })
        chain = certified_chain(spec, ring, s, t)
        status = Status.PASS if outcome.status == Status.PASS and chain['holds'] else Status.FAIL
        return Outcome(status, {**outcome.payload, 'chain': chain})


def certified_chain(
    spec: c.MoritaContextSpec,
    ring: FiniteRing,
    s: int,
    t: int,
) -> Dict[str, Any]:
    """Check (X - X^k)^(2jp) = 0 for every X with p = max(s, t), q = p(l+1), j = 2p(q+1)."""
    A, B = spec.A, spec.B
    codec = c.TupleCodec((A.order, spec.N.order, spec.M.order, B.order))
    parts = codec.decode(np.arange(ring.order))
    p = max(s, t)
    largest = {'k': 0, 'l': 0, 'q': 0, 'j': 0, 'exponent': 0}
    for x in ring.elements:
        a, b = int(parts[x, 0]), int(parts[x, 3])
        k = common_exponent(A.power_cycle(a), B.power_cycle(b)) + 1
        degrees = (
            A.nilpotency_degree(A.sub(a, A.large_pow(a, k))),
            B.nilpotency_degree(B.sub(b, B.large_pow(b, k))),
        )
        if None in degrees:
            return {'holds': False, 'element': x, 'reason': 'diagonal difference not nilpotent'}
        l = max(degrees)  # type: ignore[type-var]  # noqa: E741
        q = p * (l + 1)
        j = 2 * p * (q + 1)
        exponent = 2 * j * p
        difference = ring.sub(x, ring.large_pow(x, k))
        if ring.large_pow(difference, exponent) != ring.zero:
            return {'holds': False, 'element': x, 'k': k, 'l': l, 'exponent': exponent}
        for name, value in (('k', k), ('l', l), ('q', q), ('j', j), ('exponent', exponent)):
            largest[name] = max(largest[name], value)
    return {'holds': True, 's': s, 't': t, 'p': p, 'largest': largest}


class GeneralizedMatrixPeriodicity(RingCheck):
    id = 'C2.3'
    claim = 'R periodic, s ∈ N(R) ∩ C(R) ⟹ M_(s)(R) periodic'

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        _require_order(ring.order ** 4, config, 'M_(s)(R)')
        return implication(
            {'R periodic': cl.is_periodic(ring)},
            {
                f'M_({s})(R) periodic': cl.is_periodic(c.generalized_matrix(ring, s))
                for s in _central(ring, ring.nil_mask)
            },
        )


class ZeroGeneralizedMatrixPeriodicity(RingCheck):
    id = 'R2.3'
    claim = 'R periodic ⟺ M_(0)(R) periodic'

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        _require_order(ring.order ** 4, config, 'M_(0)(R)')
        return equivalence({
            'R periodic': cl.is_periodic(ring),
            'M_(0)(R) periodic': cl.is_periodic(c.generalized_matrix(ring, ring.zero)),
        })


class TrivialExtensionPeriodicity(RingCheck):
    id = 'C2.4'
    claim = 'R periodic ⟺ T(R, M) periodic'

    def modules(self, ring: FiniteRing) -> Dict[str, c.BimoduleSpec]:
        modules = {'R': c.BimoduleSpec.regular(ring)}
        radical = jacobson_radical(ring)
        if not radical.is_zero:
            modules['J(R)'] = c.BimoduleSpec.from_ideal(ring, radical)
        return modules

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        outcomes = {}
        for name, module in self.modules(ring).items():
            if ring.order * module.order > config.max_order:
                continue
            extension = c.trivial_extension(ring, module)
            claims: Dict[str, Claim] = {
                'R periodic': cl.is_periodic(ring),
                f'T(R, {name}) periodic': cl.is_periodic(extension),
            }
            outcome = equivalence(claims)
            if ring.order ** 2 * module.order <= config.max_order:
                triangular = c.formal_triangular(ring, module)
                embedding = c.trivial_extension_embedding(ring, module)
                multiplicative = np.array_equal(
                    triangular.mul_table[embedding[:, None], embedding[None, :]],
                    embedding[extension.mul_table],
                )
                outcome = combine({
                    'iff': outcome,
                    'subring': requirement({'T(R, M) embeds in [[R, M], [0, R]]': multiplicative}),
                })
            outcomes[name] = outcome
        return combine(outcomes)


class BlockTrivialContext(ExampleCheck):
    id = 'E2.5'
    entry = 'E2.5'
    claim = 'the diagonal block context has zero pairings and a periodic ring'

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        spec = build_entry(self.entry).context
        assert spec is not None
        return requirement({
            'zero pairings': not spec.psi.any() and not spec.phi.any(),
            'A periodic': cl.is_periodic(spec.A),
            'B periodic': cl.is_periodic(spec.B),
            'T periodic': cl.is_periodic(ring),
        })


class SkewExtensionPeriodicity(RingCheck):
    id = 'L2.6'
    claim = 'R periodic ⟹ R[[x, α]]/(x^n) and T_n(R, α) periodic'

    def endomorphisms(self, ring: FiniteRing) -> Dict[str, Optional[c.RingEndomorphism]]:
        endomorphisms: Dict[str, Optional[c.RingEndomorphism]] = {'identity': None}
        try:
            sigma = c.frobenius(ring)
        except NotAnEndomorphism:
            return endomorphisms
        if not sigma.is_identity:
            endomorphisms['frobenius'] = sigma
        return endomorphisms

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        conclusions: Dict[str, Claim] = {}
        for name, alpha in self.endomorphisms(ring).items():
            for n in (2, 3):
                if ring.order ** n <= config.max_order:
                    series = c.truncated_skew_power_series(ring, alpha, n)
                    conclusions[f'R[[x, {name}]]/(x^{n}) periodic'] = cl.is_periodic(series)
                if ring.order ** (n * (n + 1) // 2) <= config.max_order:
                    triangular = c.triangular_matrix_ring(ring, alpha, n)
                    conclusions[f'T_{n}(R, {name}) periodic'] = cl.is_periodic(triangular)
        if not conclusions:
            raise self.Skip('every extension exceeds the order cap')
        return implication({'R periodic': cl.is_periodic(ring)}, conclusions)


class PowerSeriesMatrixPeriodicity(RingCheck):
    id = 'T2.7'
    claim = 'R periodic ⟹ M_(x^m)(R[[x]]/(x^n)) periodic for 1 <= m <= n'
    premise = 'R periodic'

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        conclusions: Dict[str, Claim] = {}
        n = 1
        while ring.order ** (4 * n) <= config.max_order:
            series = _power_series(ring, n, config)
            for m in range(1, n + 1):
                matrix = c.generalized_matrix(series, _x_power(ring, n, m))
                conclusions[f'M_(x^{m})(R[[x]]/(x^{n})) periodic'] = cl.is_periodic(matrix)
            n += 1
        if not conclusions:
            raise self.Skip('M_(x)(R[[x]]/(x)) exceeds the order cap')
        return implication({self.premise: cl.is_periodic(ring)}, conclusions)


class FinitePowerSeriesMatrixPeriodicity(PowerSeriesMatrixPeriodicity):
    id = 'C2.8'
    claim = 'R finite ⟹ M_(x^m)(R[[x]]/(x^n)) periodic for 1 <= m <= n'
    premise = 'R finite'


def radical_oracles(ring: FiniteRing, config: CheckConfig) -> Outcome:
    """P(R) and J(R) against prime and maximal right ideal enumeration, within the caps."""
    claims: Dict[str, Claim] = {}
    if ring.order <= config.oracle_max_order:
        claims['P(R) is the intersection of the prime ideals'] = (
            prime_radical_oracle(ring, config.oracle_max_order) == prime_radical(ring)
        )
    if ring.order <= config.maximal_ideal_max_order:
        claims['J(R) is the intersection of the maximal right ideals'] = (
            jacobson_radical_oracle(ring, config.maximal_ideal_max_order) == jacobson_radical(ring)
        )
    if not claims:
        return Outcome(Status.SKIPPED, {'reason': f'order {ring.order} is above the oracle caps'})
    return requirement(claims)


class StrongPeriodicityEquivalence(RingCheck):
    id = 'T3.1'
    claim = ('strongly periodic ⟺ periodic with N(R) a locally nilpotent ideal '
             '⟺ R/J potent, potents lift, J locally nilpotent')

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        nil_ideal = _nil_ideal(ring)
        radical = jacobson_radical(ring)
        outcome = equivalence({
            '(1) strongly periodic': cl.is_strongly_periodic(ring),
            '(2) periodic, N(R) locally nilpotent ideal': (
                cl.is_periodic(ring).holds
                and nil_ideal is not None
                and is_locally_nilpotent(nil_ideal).holds
            ),
            '(3) R/J potent, lifting, J locally nilpotent': (
                cl.is_quotient_potent(ring, radical).holds
                and cl.potent_lifts_mod_J(ring).holds
                and _j_locally_nilpotent(ring)
            ),
        })
        return combine({
            'iff': outcome,
            'prime radical': requirement({
                'P(R) is the set of strongly nilpotent elements':
                    prime_radical(ring).members == strongly_nilpotent_elements(ring),
            }),
            'radical oracles': radical_oracles(ring, config),
        })


class CommutingRedundant(RingCheck):
    id = 'C3.2'
    claim = 'a = p + w with w ∈ P(R) for all a ⟺ the same with ap = pa'

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        return equivalence({
            'strongly periodic': cl.is_strongly_periodic(ring),
            'strongly periodic (commuting)': cl.is_strongly_periodic_commuting(ring),
        })


class TwoPrimalCharacterization(RingCheck):
    id = 'T3.3'
    claim = 'strongly periodic ⟺ 2-primal and weakly periodic'

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        return equivalence({
            'strongly periodic': cl.is_strongly_periodic(ring),
            '2-primal and weakly periodic': (
                cl.is_2_primal(ring).holds and cl.is_weakly_periodic(ring).holds
            ),
        })


class CompletelyPrimeCharacterization(RingCheck):
    id = 'C3.4'
    claim = 'strongly periodic ⟺ weakly periodic and every prime ideal completely prime'

    def applicability(self, ring: FiniteRing, config: CheckConfig) -> Optional[str]:
        if ring.order > config.oracle_max_order:
            return f'prime ideal enumeration is capped at order {config.oracle_max_order}'
        return None

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        primes = prime_ideals_oracle(ring, config.oracle_max_order)
        not_completely_prime = [
            ideal.indices.tolist() for ideal in primes if not is_completely_prime_ideal(ideal)
        ]
        return equivalence(
            {
                'strongly periodic': cl.is_strongly_periodic(ring),
                'weakly periodic, primes completely prime': (
                    cl.is_weakly_periodic(ring).holds and not not_completely_prime
                ),
            },
            prime_ideals=len(primes),
            not_completely_prime=not_completely_prime[:1],
        )


class NilSemicommutative(RingCheck):
    id = 'C3.5'
    claim = 'nil-semicommutative and weakly periodic ⟹ strongly periodic'

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        return implication(
            {
                'nil-semicommutative': cl.is_nil_semicommutative(ring),
                'weakly periodic': cl.is_weakly_periodic(ring),
            },
            {'strongly periodic': cl.is_strongly_periodic(ring)},
        )


def nil_semicommutative_witness() -> cl.Certificate:
    """a = e12 + e13, x = e23, b = e24 + e34 in R_4."""
    a = c.example_3_6_matrix(4, [(1, 2), (1, 3)])
    x = c.example_3_6_matrix(4, [(2, 3)])
    b = c.example_3_6_matrix(4, [(2, 4), (3, 4)])
    return cl.Certificate('nil-semicommutative', (a, x, b), 'ab = 0, axb != 0')


class StronglyPeriodicNotNilSemicommutative(ExampleCheck):
    id = 'E3.6'
    entry = 'E3.6'
    claim = 'R_4 is strongly periodic and not nil-semicommutative'

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        search = cl.is_nil_semicommutative(ring)
        witness = nil_semicommutative_witness()
        return requirement(
            {
                'strongly periodic': cl.is_strongly_periodic(ring),
                'not nil-semicommutative': not search.holds,
                'witness (e12 + e13, e23, e24 + e34) verifies': (
                    cl.verify_certificate(ring, witness)
                ),
                'search certificate verifies': (
                    search.certificate is not None
                    and cl.verify_certificate(ring, search.certificate)
                ),
            },
            witness=witness.as_dict(),
        )


class MoritaStrongPeriodicity(MoritaCheck):
    id = 'T3.7'
    claim = 'im(psi), im(phi) nilpotent ⟹ (A, B strongly periodic ⟺ T strongly periodic)'

    def evaluate(self, spec: c.MoritaContextSpec, config: CheckConfig) -> Outcome:
        self.nilpotent_images(spec)
        ring = context_ring(spec, config.max_order)
        return equivalence({
            'A and B strongly periodic': (
                cl.is_strongly_periodic(spec.A).holds and cl.is_strongly_periodic(spec.B).holds
            ),
            'T strongly periodic': cl.is_strongly_periodic(ring),
        })


class GeneralizedMatrixStrongPeriodicity(RingCheck):
    id = 'C3.8'
    claim = 'R strongly periodic, s ∈ N(R) ∩ C(R) ⟹ M_(s)(R) strongly periodic'

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        _require_order(ring.order ** 4, config, 'M_(s)(R)')
        return implication(
            {'R strongly periodic': cl.is_strongly_periodic(ring)},
            {
                f'M_({s})(R) strongly periodic':
                    cl.is_strongly_periodic(c.generalized_matrix(ring, s))
                for s in _central(ring, ring.nil_mask)
            },
        )


class ZeroGeneralizedMatrixStrongPeriodicity(RingCheck):
    id = 'R3.9'
    claim = 'R strongly periodic ⟺ M_(0)(R) strongly periodic'

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        _require_order(ring.order ** 4, config, 'M_(0)(R)')
        return equivalence({
            'R strongly periodic': cl.is_strongly_periodic(ring),
            'M_(0)(R) strongly periodic':
                cl.is_strongly_periodic(c.generalized_matrix(ring, ring.zero)),
        })


class Z4Context(ExampleCheck):
    id = 'E3.9'
    entry = 'E3.9'
    claim = 'the Z4 context ring is strongly periodic'

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        spec = build_entry(self.entry).context
        assert spec is not None
        z4 = spec.A
        products = z4.mul_table[np.ix_(spec.N.embedding, spec.M.embedding)]
        return requirement({
            'context products are the products of Z4': bool(np.array_equal(spec.psi, products)),
            'A and B strongly periodic': (
                cl.is_strongly_periodic(spec.A).holds and cl.is_strongly_periodic(spec.B).holds
            ),
            'strongly periodic': cl.is_strongly_periodic(ring),
        })


class EuwEquivalence(RingCheck):
    id = 'T3.10'
    claim = ('strongly periodic ⟺ R/P(R) potent ⟺ a - a^m ∈ P(R) for a prime m '
             '⟺ a = eu + w with commuting e, u, w')

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        return equivalence({
            '(1) strongly periodic': cl.is_strongly_periodic(ring),
            '(2) R/P(R) potent': cl.is_quotient_potent(ring, prime_radical(ring)),
            '(3) prime exponents': cl.prime_exponent_verdict(ring),
            '(4) euw decompositions': cl.euw_verdict(ring),
        })


def sample_subrings(
    ring: FiniteRing,
    config: CheckConfig,
) -> List[Tuple[Tuple[int, int], c.Subring]]:
    """Closures of random element pairs plus one, distinct and at most `subring_samples`."""
    rng = np.random.default_rng(config.seed)
    seen = set()
    samples = []
    for _ in range(4 * config.subring_samples):
        if len(samples) >= config.subring_samples:
            break
        a, b = (int(i) for i in rng.integers(0, ring.order, size=2))
        members = c.closure(ring, (a, b))
        if members in seen:
            continue
        seen.add(members)
        samples.append(((a, b), c.restrict(ring, members, ring.one)))
    return samples


class SubringStrongPeriodicity(RingCheck):
    id = 'C3.11'
    claim = 'every subring of a strongly periodic ring is strongly periodic'

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        premise = cl.is_strongly_periodic(ring)
        if not premise.holds:
            raise self.Skip('hypothesis not met: R strongly periodic')
        samples = sample_subrings(ring, config)
        return implication(
            {'R strongly periodic': premise},
            {
                f'<{a}, {b}> strongly periodic': cl.is_strongly_periodic(subring.ring)
                for (a, b), subring in samples
            },
            seed=config.seed,
            generators=[list(pair) for pair, _ in samples],
        )


def candidate_ideals(ring: FiniteRing, limit: int = 6) -> List[IdealSet]:
    """Distinct proper principal two-sided ideals, smallest first."""
    ideals: Dict[bytes, IdealSet] = {}
    for x in ring.elements:
        ideal = ideal_generated(ring, x)
        if not ideal.is_whole:
            ideals.setdefault(ideal.mask.tobytes(), ideal)
    ordered = sorted(ideals.values(), key=lambda ideal: (len(ideal), ideal.indices.tolist()))
    return ordered[:limit]


class NilpotentIdealLifting(RingCheck):
    id = 'L3.13'
    claim = 'I nilpotent, R/I strongly periodic ⟹ R strongly periodic'

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        outcomes = {}
        ideals = [prime_radical(ring)] + [
            ideal for ideal in candidate_ideals(ring) if nilpotency_index(ideal) is not None
        ]
        for ideal in ideals:
            name = f'I = {ideal.indices.tolist()}'
            if name in outcomes:
                continue
            try:
                outcomes[name] = implication(
                    {'R/I strongly periodic': cl.is_strongly_periodic(_quotient(ring, ideal))},
                    {'R strongly periodic': cl.is_strongly_periodic(ring)},
                )
            except self.Skip:
                continue
        if not outcomes:
            raise self.Skip('no nilpotent ideal with a strongly periodic quotient')
        return combine(outcomes)


class QuotientPowers(RingCheck):
    id = 'T3.14'
    claim = ('R/I strongly periodic ⟺ R/I^n strongly periodic for all n '
             '⟺ for some n')

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        outcomes = {}
        for ideal in candidate_ideals(ring):
            verdicts = []
            power, n = ideal, 1
            while True:
                verdicts.append(cl.is_strongly_periodic(_quotient(ring, power)).holds)
                following = ideal_power(ideal, n + 1)
                if following == power:
                    break
                power, n = following, n + 1
            outcomes[f'I = {ideal.indices.tolist()}'] = equivalence(
                {
                    '(1) R/I': verdicts[0],
                    '(2) R/I^n for all n': all(verdicts),
                    '(3) R/I^n for some n': any(verdicts),
                },
                powers=len(verdicts),
            )
        return combine(outcomes)


class AbelianPeriodic(RingCheck):
    id = 'L3.15'
    claim = 'abelian and periodic ⟹ strongly periodic'

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        return implication(
            {'abelian': cl.is_abelian_ring(ring), 'periodic': cl.is_periodic(ring)},
            {'strongly periodic': cl.is_strongly_periodic(ring)},
        )


class GeneralizedNLike(RingCheck):
    id = 'T3.16'
    claim = 'generalized n-like ⟹ strongly periodic'

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        holding = [
            n for n in config.n_like_exponents if cl.is_generalized_n_like(ring, n).holds
        ]
        if not holding:
            raise self.Skip('hypothesis not met: generalized n-like for a tested n')
        return implication(
            {f'generalized {holding[0]}-like': True},
            {
                'abelian': cl.is_abelian_ring(ring),
                'strongly periodic': cl.is_strongly_periodic(ring),
            },
            exponents=holding,
        )


class FrobeniusTwistedInstance(ExampleCheck):
    id = 'G7'
    entry = 'G7'
    claim = 'the GF(4) ring is generalized 7-like, abelian, noncommutative, strongly periodic'

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        seventh = cl.power_column(ring, 7)
        elements = np.arange(ring.order)
        square_zero = (seventh == ring.zero) & (ring.power_table[:, 2] == ring.zero)
        return requirement({
            'a^7 = a or a^7 = a^2 = 0': bool(((seventh == elements) | square_zero).all()),
            'generalized 7-like': cl.is_generalized_n_like(ring, 7),
            'abelian': cl.is_abelian_ring(ring),
            'not commutative': not ring.is_commutative,
            'strongly periodic': cl.is_strongly_periodic(ring),
        })


class MoritaJCleanLike(MoritaCheck):
    id = 'T4.1'
    claim = 'im(psi) ⊆ J(A), im(phi) ⊆ J(B), A, B J-clean-like ⟹ T J-clean-like'

    def applicability(self, spec: c.MoritaContextSpec, config: CheckConfig) -> Optional[str]:
        if not spec.psi_image() <= jacobson_radical(spec.A).members:
            return 'im(psi) is not inside J(A)'
        if not spec.phi_image() <= jacobson_radical(spec.B).members:
            return 'im(phi) is not inside J(B)'
        return None

    def evaluate(self, spec: c.MoritaContextSpec, config: CheckConfig) -> Outcome:
        premises = {
            'A J-clean-like': cl.is_J_clean_like(spec.A),
            'B J-clean-like': cl.is_J_clean_like(spec.B),
        }
        if not all(_holds(claim) for claim in premises.values()):
            return implication(premises, {})
        ring = context_ring(spec, config.max_order)
        return implication(premises, {'T J-clean-like': cl.is_J_clean_like(ring)})


class GeneralizedMatrixJCleanLike(RingCheck):
    id = 'C4.2'
    claim = 'R J-clean-like, s ∈ J(R) ∩ C(R) ⟹ M_(s)(R) J-clean-like'

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        _require_order(ring.order ** 4, config, 'M_(s)(R)')
        premise = cl.is_J_clean_like(ring)
        if not premise.holds:
            return implication({'R J-clean-like': premise}, {})
        return implication(
            {'R J-clean-like': premise},
            {
                f'M_({s})(R) J-clean-like': cl.is_J_clean_like(c.generalized_matrix(ring, s))
                for s in _central(ring, jacobson_radical(ring).mask)
            },
        )


class PowerSeriesMatrixJCleanLike(RingCheck):
    id = 'C4.3'
    claim = 'R J-clean-like ⟹ M_(x)(R[[x]]) J-clean-like (on truncations R[x]/(x^n))'

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        premise = cl.is_J_clean_like(ring)
        if not premise.holds:
            return implication({'R J-clean-like': premise}, {})
        conclusions: Dict[str, Claim] = {}
        n = 2
        while ring.order ** (4 * n) <= config.max_order:
            series = _power_series(ring, n, config)
            matrix = c.generalized_matrix(series, _x_power(ring, n, 1))
            conclusions[f'M_(x)(R[x]/(x^{n})) J-clean-like'] = cl.is_J_clean_like(matrix)
            n += 1
        if not conclusions:
            raise self.Skip('M_(x)(R[x]/(x^2)) exceeds the order cap')
        return implication(
            {'R J-clean-like': premise}, conclusions,
            substitution='R[[x]] is replaced by its truncations R[x]/(x^n)',
        )


class TriangularJCleanLike(RingCheck):
    id = 'R4.1'
    claim = 'R J-clean-like ⟹ T_2(R) J-clean-like'

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        _require_order(ring.order ** 3, config, 'T_2(R)')
        premise = cl.is_J_clean_like(ring)
        if not premise.holds:
            return implication({'R J-clean-like': premise}, {})
        triangular = c.triangular_matrix_ring(ring, None, 2)
        return implication(
            {'R J-clean-like': premise},
            {'T_2(R) J-clean-like': cl.is_J_clean_like(triangular)},
        )


class LocallyNilpotentRadical(RingCheck):
    id = 'P4.4'
    claim = 'strongly periodic ⟺ J-clean-like and J(R) locally nilpotent'

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        return equivalence({
            'strongly periodic': cl.is_strongly_periodic(ring),
            'J-clean-like, J(R) locally nilpotent': (
                cl.is_J_clean_like(ring).holds and _j_locally_nilpotent(ring)
            ),
        })


class JCleanCharacterization(RingCheck):
    id = 'P4.5'
    claim = 'J-clean ⟺ J-clean-like and J(R) = {x : 1 - x ∈ U(R)}'

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        return equivalence({
            'J-clean': cl.is_J_clean(ring),
            'J-clean-like, J(R) = {x : 1 - x unit}': (
                cl.is_J_clean_like(ring).holds
                and jacobson_radical(ring).members == quasi_regular_set(ring)
            ),
        })


class TriangularZ3(ExampleCheck):
    id = 'E4.6'
    entry = 'E4.6'
    claim = 'T_2(Z3) is J-clean-like and not J-clean'

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        return requirement({
            'J-clean-like': cl.is_J_clean_like(ring),
            'not J-clean': not cl.is_J_clean(ring).holds,
        })


class LiftingCharacterization(RingCheck):
    id = 'L4.7'
    claim = 'J-clean-like ⟺ R/J(R) potent and potents lift modulo J(R)'

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        return equivalence({
            'J-clean-like': cl.is_J_clean_like(ring),
            'R/J potent, potents lift': (
                cl.is_quotient_potent(ring, jacobson_radical(ring)).holds
                and cl.potent_lifts_mod_J(ring).holds
            ),
        })


class QuasiDuoCharacterization(RingCheck):
    id = 'T4.8'
    claim = 'J-clean-like ⟺ R/J(R) periodic, quasi-duo and potents lift'

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        quotient_periodic = cl.is_periodic(_quotient(ring, jacobson_radical(ring))).holds
        lifting = cl.potent_lifts_mod_J(ring).holds
        return combine({
            side.value: equivalence({
                'J-clean-like': cl.is_J_clean_like(ring),
                f'R/J periodic, {side.value} quasi-duo, lifting': (
                    quotient_periodic
                    and cl.is_quasi_duo(ring, side, config.oracle_max_order).holds
                    and lifting
                ),
            })
            for side in (Sidedness.RIGHT, Sidedness.LEFT)
        })


class QuasiDuoStrongPeriodicity(RingCheck):
    id = 'C4.9'
    claim = 'strongly periodic ⟺ periodic, quasi-duo and J(R) locally nilpotent'

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        periodic = cl.is_periodic(ring).holds
        local = _j_locally_nilpotent(ring)
        return combine({
            side.value: equivalence({
                'strongly periodic': cl.is_strongly_periodic(ring),
                f'periodic, {side.value} quasi-duo, J locally nilpotent': (
                    periodic
                    and cl.is_quasi_duo(ring, side, config.oracle_max_order).holds
                    and local
                ),
            })
            for side in (Sidedness.RIGHT, Sidedness.LEFT)
        })


class NilInsideRadical(RingCheck):
    id = 'L4.11'
    claim = 'J-clean-like ⟹ N(R) ⊆ J(R)'

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        return implication(
            {'J-clean-like': cl.is_J_clean_like(ring)},
            {'N(R) ⊆ J(R)': _nil_inside_j(ring)},
        )


class NilRadicalCharacterization(RingCheck):
    id = 'L4.12'
    claim = 'periodic with N(R) ⊆ J(R) ⟺ J-clean-like with J(R) nil'

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        return equivalence({
            'periodic, N(R) ⊆ J(R)': cl.is_periodic(ring).holds and _nil_inside_j(ring),
            'J-clean-like, J(R) nil': (
                cl.is_J_clean_like(ring).holds and is_nil(jacobson_radical(ring))
            ),
        })


class SequenceVanishing(RingCheck):
    id = 'T4.13'
    claim = 'vanishing products (a_1 - a_1^(n_1))···(a_k - a_k^(n_k)) ⟹ J-clean-like'

    def applicability(self, ring: FiniteRing, config: CheckConfig) -> Optional[str]:
        if ring.order > config.sequence_max_order:
            return f'sequence game is capped at order {config.sequence_max_order}'
        return None

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        result = cl.sequence_vanishing(ring, max_states=config.sequence_max_states)
        if result.outcome == cl.SequenceOutcome.FAILS:
            verified = cl.verify_sequence_witness(
                ring, result.prefix, result.cycle, result.max_exponent,
            )
            raise self.Skip(f'hypothesis not met: sequence {result.as_dict()} '
                            f'(witness verified: {verified})')
        if result.outcome == cl.SequenceOutcome.INCONCLUSIVE:
            raise self.Skip(f'sequence game inconclusive after {result.states} states')
        return implication(
            {'every sequence has a vanishing product': True},
            {'J-clean-like': cl.is_J_clean_like(ring)},
            states=result.states,
        )


class TNilpotentRadical(RingCheck):
    id = 'C4.14'
    claim = 'R/J(R) potent and J(R) left (right) T-nilpotent ⟹ J-clean-like'

    def evaluate(self, ring: FiniteRing, config: CheckConfig) -> Outcome:
        radical = jacobson_radical(ring)
        quotient_potent = cl.is_quotient_potent(ring, radical)
        outcomes = {}
        for side in (Sidedness.LEFT, Sidedness.RIGHT):
            try:
                outcomes[side.value] = implication(
                    {
                        'R/J potent': quotient_potent,
                        f'J(R) {side.value} T-nilpotent': is_T_nilpotent(radical, side),
                    },
                    {'J-clean-like': cl.is_J_clean_like(ring)},
                )
            except self.Skip:
                continue
        if not outcomes:
            raise self.Skip('hypothesis not met: R/J potent with T-nilpotent J(R)')
        return combine(outcomes)


def get_check_classes(cls: Type[TheoremCheck] = TheoremCheck) -> List[Type[TheoremCheck]]:
    check_classes: List[Type[TheoremCheck]] = []
    for subclass in cls.__subclasses__():
        if subclass.__subclasses__():
            check_classes.extend(get_check_classes(subclass))
        if not subclass.__dict__.get('abstract', False):
            check_classes.append(subclass)
    return check_classes


def get_checks() -> Dict[str, TheoremCheck]:
    checks = {check_class.id: check_class() for check_class in get_check_classes()}
    return dict(sorted(checks.items(), key=lambda item: _check_order(item[0])))


def _check_order(check_id: str) -> Tuple:
    kind, _, number = check_id.partition('.')
    digits = ''.join(ch for ch in kind if ch.isdigit())
    return (int(digits or 0), int(number or 0), check_id)


def get_check(check_id: str) -> TheoremCheck:
    checks = get_checks()
    try:
        return checks[check_id]
    except KeyError:
        raise UnknownCheck(f'unknown check {check_id!r}; known: {", ".join(checks)}') from None


def run_check(
    check_id: str,
    inputs: Subject,
    config: Optional[CheckConfig] = None,
) -> VerdictReport:
    return get_check(check_id).run(inputs, config)


def run_subject_checks(
    ring: FiniteRing,
    context: Optional[c.MoritaContextSpec] = None,
    config: Optional[CheckConfig] = None,
    check_ids: Optional[Iterable[str]] = None,
) -> List[VerdictReport]:
    config = config or CheckConfig.from_settings()
    checks = get_checks()
    selected = list(checks) if check_ids is None else list(check_ids)
    reports = []
    for check_id in selected:
        check = checks.get(check_id) or get_check(check_id)
        if check.subject_type is c.MoritaContextSpec:
            if context is None:
                reports.append(check.skipped(subject_inputs(ring), 'needs a Morita context'))
                continue
            reports.append(check.run(context, config))
        else:
            reports.append(check.run(ring, config))
    return reports


def run_entry_checks(
    name: str,
    config: Optional[CheckConfig] = None,
    check_ids: Optional[Sequence[str]] = None,
) -> List[VerdictReport]:
    built = build_entry(name)
    return run_subject_checks(built.ring, built.context, config, check_ids)


def run_suite(
    catalog: Sequence[CatalogEntry],
    config: Optional[CheckConfig] = None,
    check_ids: Optional[Sequence[str]] = None,
) -> SuiteReport:
    if not catalog:
        raise ValueError('the suite needs at least one catalog entry')
    config = config or CheckConfig.from_settings()
    logger.info('Running the suite over %s catalog entries', len(catalog))
    reports: List[VerdictReport] = []
    if settings.SUITE_BACKEND == 'celery':
        from ringbench.tasks import run_catalog_entry_checks

        results = [
            run_catalog_entry_checks.apply_async(
                args=(entry.name, config.as_dict(), list(check_ids) if check_ids else None),
            )
            for entry in catalog
        ]
        for result in results:
            reports.extend(VerdictReport.from_dict(data) for data in result.get())
    else:
        for entry in catalog:
            reports.extend(run_entry_checks(entry.name, config, check_ids))
    reports.sort(key=lambda report: (_check_order(report.check_id), report.inputs))
    suite = SuiteReport(reports, config)
    logger.info('Suite finished: %s', suite.counts())
    return suite
