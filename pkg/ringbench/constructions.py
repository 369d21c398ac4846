"""Ring constructions as validated-by-construction `FiniteRing` tables.

Element encodings are fixed so that serialised rings are reproducible:

* tuples, matrices (row-major entries) and Morita quadruples ``(a, n, m, b)``
  use mixed-radix indices with the first component most significant;
* polynomial-like elements (Galois fields, truncated power series) use
  little-endian coefficients, so constants keep their base-ring index.

Every constructor refuses outputs above ``RINGBENCH_MAX_ORDER`` unless a larger
``max_order`` is passed explicitly.
"""
from dataclasses import dataclass, field
from functools import reduce
import hashlib
import itertools
import logging
from typing import Callable, Iterable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from sympy import isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_add, gf_irreducible_p, gf_mul, gf_rem, gf_strip

from ringbench.core import FiniteRing, check_order
from ringbench.exceptions import (
    ConstructionError,
    IrreducibilityError,
    ModuleValidationError,
    NoIdentityError,
    NotAnEndomorphism,
    NotAnIdeal,
)

logger = logging.getLogger(__name__)

Components = List[np.ndarray]
ComponentOp = Callable[[Components, Components], Sequence[np.ndarray]]


class TupleCodec:
    def __init__(self, radices: Sequence[int], little_endian: bool = False):
        self.radices = tuple(int(radix) for radix in radices)
        weights = []
        weight = 1
        for radix in (self.radices if little_endian else reversed(self.radices)):
            weights.append(weight)
            weight *= radix
        self.weights = tuple(weights if little_endian else reversed(weights))
        self.order = weight

    @property
    def width(self) -> int:
        return len(self.radices)

    def decode(self, indices: np.ndarray) -> np.ndarray:
        indices = np.asarray(indices, dtype=np.intp)
        return np.stack(
            [(indices // weight) % radix for weight, radix in zip(self.weights, self.radices)],
            axis=-1,
        )

    def encode(self, components: Sequence[np.ndarray]) -> np.ndarray:
        return sum(
            (np.asarray(component, dtype=np.intp) * weight
             for component, weight in zip(components, self.weights)),
            np.intp(0),
        )

    def encode_one(self, components: Sequence[int]) -> int:
        return int(self.encode([np.intp(component) for component in components]))


def _tabulate(
    codec: TupleCodec,
    add_parts: ComponentOp,
    mul_parts: ComponentOp,
    one: Sequence[int],
    max_order: Optional[int],
) -> FiniteRing:
    check_order(codec.order, max_order)
    parts = codec.decode(np.arange(codec.order))
    left = [parts[:, i, None] for i in range(codec.width)]
    right = [parts[None, :, i] for i in range(codec.width)]
    shape = (codec.order, codec.order)

    def table(op: ComponentOp) -> np.ndarray:
        return codec.encode([np.broadcast_to(part, shape) for part in op(left, right)])

    logger.debug('Tabulating ring of order %s over radices %s', codec.order, codec.radices)
    return FiniteRing(table(add_parts), table(mul_parts), codec.encode_one(one))


def _ring_sum(ring: FiniteRing, terms: Iterable[np.ndarray]) -> np.ndarray:
    return reduce(lambda total, term: ring.add_table[total, term], terms)


def _first(mask: np.ndarray) -> Optional[Tuple[int, ...]]:
    hits = np.argwhere(mask)
    return tuple(int(i) for i in hits[0]) if hits.size else None


def _require(condition: str, mask: np.ndarray, prefix: Tuple[int, ...] = ()) -> None:
    witness = _first(mask)
    if witness is not None:
        raise ModuleValidationError(condition, prefix + witness)


class RingEndomorphism:
    def __init__(self, source: FiniteRing, mapping: Sequence[int]):
        self.source = source
        self.mapping = np.asarray(mapping, dtype=np.intp)
        self.mapping.setflags(write=False)
        self._validate()

    def _validate(self) -> None:
        ring, image = self.source, self.mapping
        if image.shape != (ring.order,) or ((image < 0) | (image >= ring.order)).any():
            raise NotAnEndomorphism('mapping is not a map of the ring into itself')
        if image[ring.zero] != ring.zero or image[ring.one] != ring.one:
            raise NotAnEndomorphism('mapping does not fix zero and one')
        for name, table in (('add', ring.add_table), ('mul', ring.mul_table)):
            witness = _first(image[table] != table[np.ix_(image, image)])
            if witness is not None:
                raise NotAnEndomorphism(f'mapping does not preserve {name} on {witness}')

    def __call__(self, a: int) -> int:
        return int(self.mapping[a])

    @classmethod
    def identity(cls, ring: FiniteRing) -> 'RingEndomorphism':
        return cls(ring, np.arange(ring.order))

    @property
    def is_identity(self) -> bool:
        return bool((self.mapping == np.arange(self.source.order)).all())

    def compose(self, other: 'RingEndomorphism') -> 'RingEndomorphism':
        """``self ∘ other``."""
        return RingEndomorphism(self.source, self.mapping[other.mapping])

    def power(self, exponent: int) -> np.ndarray:
        mapping = np.arange(self.source.order)
        for _ in range(exponent):
            mapping = self.mapping[mapping]
        return mapping

    def order(self) -> int:
        """Least t >= 1 with alpha^t = id."""
        mapping, t = self.mapping, 1
        while not (mapping == np.arange(self.source.order)).all():
            mapping = self.mapping[mapping]
            t += 1
        return t


@dataclass(frozen=True, eq=False)
class BimoduleSpec:
    """An (L, R)-bimodule: a finite abelian group with commuting actions.

    ``embedding`` maps module indices to ring elements when the module sits
    inside a ring (regular modules, ideals); pairings given by ring
    multiplication need it.
    """

    left_ring: FiniteRing
    right_ring: FiniteRing
    add_table: np.ndarray
    left_action: np.ndarray
    right_action: np.ndarray
    embedding: Optional[np.ndarray] = field(default=None)

    @property
    def order(self) -> int:
        return int(self.add_table.shape[0])

    @classmethod
    def regular(cls, ring: FiniteRing) -> 'BimoduleSpec':
        return cls(
            ring, ring, ring.add_table, ring.mul_table, ring.mul_table, np.arange(ring.order),
        )

    @classmethod
    def zero(cls, left_ring: FiniteRing, right_ring: FiniteRing) -> 'BimoduleSpec':
        return cls(
            left_ring,
            right_ring,
            np.zeros((1, 1), dtype=np.intp),
            np.zeros((left_ring.order, 1), dtype=np.intp),
            np.zeros((1, right_ring.order), dtype=np.intp),
            np.zeros(1, dtype=np.intp),
        )

    @classmethod
    def from_ideal(cls, ring: FiniteRing, members: Iterable[int]) -> 'BimoduleSpec':
        embedding = np.array(sorted(set(members)), dtype=np.intp)
        position = np.full(ring.order, -1, dtype=np.intp)
        position[embedding] = np.arange(embedding.size)
        tables = (
            ring.add_table[np.ix_(embedding, embedding)],
            ring.mul_table[np.ix_(np.arange(ring.order), embedding)],
            ring.mul_table[np.ix_(embedding, np.arange(ring.order))],
        )
        if any((position[table] < 0).any() for table in tables):
            raise NotAnIdeal('members are not closed under addition and ring multiplication')
        add, left, right = (position[table] for table in tables)
        return cls(ring, ring, add, left, right, embedding)

    @classmethod
    def twisted(cls, ring: FiniteRing, alpha: RingEndomorphism) -> 'BimoduleSpec':
        """R as a bimodule whose right action goes through alpha: m·r = m·alpha(r)."""
        right = ring.mul_table[:, alpha.mapping]
        return cls(ring, ring, ring.add_table, ring.mul_table, right, np.arange(ring.order))

    @classmethod
    def direct_sum(cls, first: 'BimoduleSpec', second: 'BimoduleSpec') -> 'BimoduleSpec':
        codec = TupleCodec((first.order, second.order))
        parts = codec.decode(np.arange(codec.order))
        x, y = parts[:, 0], parts[:, 1]
        add = codec.encode([
            first.add_table[x[:, None], x[None, :]],
            second.add_table[y[:, None], y[None, :]],
        ])
        left = codec.encode([first.left_action[:, x], second.left_action[:, y]])
        right = codec.encode([first.right_action[x, :], second.right_action[y, :]])
        return cls(first.left_ring, first.right_ring, add, left, right)

    def validate(self) -> None:
        order = self.order
        add, left, right = self.add_table, self.left_action, self.right_action
        L, R = self.left_ring, self.right_ring
        if left.shape != (L.order, order) or right.shape != (order, R.order):
            raise ModuleValidationError('action-shape', left.shape + right.shape)
        _require('module-addition-commutative', add != add.T)
        _require('module-zero', add[0] != np.arange(order))
        _require('module-negatives', ~(add == 0).any(axis=1))
        for m in range(order):
            _require('module-addition-associative', add[add[m]] != add[m][add], (m,))
            # left action: biadditive, associative
            column = left[:, m]
            _require('left-additive-in-ring', column[L.add_table] != add[np.ix_(column, column)],
                     (m,))
            _require('left-associative', column[L.mul_table] != left[:, column], (m,))
            _require('left-additive-in-module', left[:, add[m]] != add[column[:, None], left],
                     (m,))
            row = right[m]
            _require('right-additive-in-ring', row[R.add_table] != add[np.ix_(row, row)], (m,))
            _require('right-associative', row[R.mul_table] != right[row, :], (m,))
            _require('right-additive-in-module', right[add[m], :] != add[row[None, :], right],
                     (m,))
            # (a·m)·b = a·(m·b)
            _require('actions-commute', right[column, :] != left[:, row], (m,))
        _require('left-unital', left[L.one] != np.arange(order))
        _require('right-unital', right[:, R.one] != np.arange(order))


@dataclass(frozen=True, eq=False)
class MoritaContextSpec:
    """(A, B, M, N, psi, phi) with M a B-A and N an A-B bimodule.

    ``psi[n, m]`` is an element of A, ``phi[m, n]`` an element of B.
    """

    A: FiniteRing
    B: FiniteRing
    M: BimoduleSpec
    N: BimoduleSpec
    psi: np.ndarray
    phi: np.ndarray

    @property
    def order(self) -> int:
        return self.A.order * self.N.order * self.M.order * self.B.order

    def digest(self) -> str:
        digest = hashlib.sha256(b'ringbench-context-v1')
        for part in (self.A.content_hash, self.B.content_hash):
            digest.update(part.encode())
        for module in (self.M, self.N):
            for table in (module.add_table, module.left_action, module.right_action):
                digest.update(np.asarray(table).astype('<u4').tobytes())
        for pairing in (self.psi, self.phi):
            digest.update(np.asarray(pairing).astype('<u4').tobytes())
        return digest.hexdigest()

    @classmethod
    def from_ring_products(
        cls,
        ring: FiniteRing,
        M: BimoduleSpec,
        N: BimoduleSpec,
        scale: Optional[int] = None,
    ) -> 'MoritaContextSpec':
        """Context over (R, R) whose pairings are (scaled) ring products."""
        assert M.embedding is not None and N.embedding is not None
        psi = ring.mul_table[np.ix_(N.embedding, M.embedding)]
        phi = ring.mul_table[np.ix_(M.embedding, N.embedding)]
        if scale is not None:
            psi, phi = ring.mul_table[scale][psi], ring.mul_table[scale][phi]
        return cls(ring, ring, M, N, psi, phi)

    def psi_image(self) -> frozenset:
        return frozenset(np.unique(self.psi).tolist())

    def phi_image(self) -> frozenset:
        return frozenset(np.unique(self.phi).tolist())

    def validate(self) -> None:
        A, B, M, N, psi, phi = self.A, self.B, self.M, self.N, self.psi, self.phi
        if not (M.left_ring == B and M.right_ring == A):
            raise ModuleValidationError('M-is-B-A-bimodule', ())
        if not (N.left_ring == A and N.right_ring == B):
            raise ModuleValidationError('N-is-A-B-bimodule', ())
        if psi.shape != (N.order, M.order) or phi.shape != (M.order, N.order):
            raise ModuleValidationError('pairing-shape', psi.shape + phi.shape)
        M.validate()
        N.validate()
        for n in range(N.order):
            _require(
                'psi-additive-in-M',
                psi[n][M.add_table] != A.add_table[np.ix_(psi[n], psi[n])],
                (n,),
            )
            # psi(n·b, m) = psi(n, b·m)
            _require('psi-balanced', psi[N.right_action[n], :] != psi[n][M.left_action], (n,))
            # psi(n, m·a) = psi(n, m)·a
            _require('psi-right-linear', psi[n][M.right_action] != A.mul_table[psi[n], :], (n,))
        for m in range(M.order):
            column = psi[:, m]
            _require(
                'psi-additive-in-N',
                column[N.add_table] != A.add_table[np.ix_(column, column)],
                (m,),
            )
            _require('psi-left-linear', column[N.left_action] != A.mul_table[:, column], (m,))
            _require(
                'phi-additive-in-N',
                phi[m][N.add_table] != B.add_table[np.ix_(phi[m], phi[m])],
                (m,),
            )
            _require('phi-balanced', phi[M.right_action[m], :] != phi[m][N.left_action], (m,))
            _require('phi-right-linear', phi[m][N.right_action] != B.mul_table[phi[m], :], (m,))
        for n in range(N.order):
            column = phi[:, n]
            _require(
                'phi-additive-in-M',
                column[M.add_table] != B.add_table[np.ix_(column, column)],
                (n,),
            )
            _require('phi-left-linear', column[M.left_action] != B.mul_table[:, column], (n,))
        for n in range(N.order):
            # psi(n, m)·n' = n·phi(m, n')
            _require('associativity-N', N.left_action[psi[n], :] != N.right_action[n][phi], (n,))
        for m in range(M.order):
            # phi(m, n)·m' = m·psi(n, m')
            _require('associativity-M', M.left_action[phi[m], :] != M.right_action[m][psi], (m,))


def zmod(n: int, max_order: Optional[int] = None) -> FiniteRing:
    if n < 1:
        raise ConstructionError('Z/nZ needs n >= 1')
    check_order(n, max_order)
    elements = np.arange(n)
    return FiniteRing(
        (elements[:, None] + elements[None, :]) % n,
        (elements[:, None] * elements[None, :]) % n,
        1 % n,
        labels=[str(i) for i in elements],
    )


def _poly_label(digits: Sequence[int]) -> str:
    terms = []
    for power in reversed(range(len(digits))):
        c = digits[power]
        if not c:
            continue
        if power == 0:
            terms.append(str(c))
        else:
            monomial = 'x' if power == 1 else f'x^{power}'
            terms.append(monomial if c == 1 else f'{c}{monomial}')
    return '+'.join(terms) or '0'


def default_irreducible(p: int, k: int) -> List[int]:
    """Lexicographically least monic irreducible of degree k over GF(p), high to low."""
    for tail in itertools.product(range(p), repeat=k):
        poly = [1, *tail]
        if gf_irreducible_p(poly, p, ZZ):
            return poly
    raise IrreducibilityError(f'no irreducible polynomial of degree {k} over GF({p})')


def galois_field(
    p: int,
    k: int = 1,
    poly: Optional[Sequence[int]] = None,
    max_order: Optional[int] = None,
) -> FiniteRing:
    """GF(p^k); ``poly`` is monic, coefficients from the leading one down."""
    if not isprime(p):
        raise ConstructionError(f'{p} is not prime')
    if k < 1:
        raise ConstructionError('the extension degree must be positive')
    codec = TupleCodec([p] * k, little_endian=True)
    check_order(codec.order, max_order)
    if poly is None:
        poly = default_irreducible(p, k)
    poly = [int(c) % p for c in poly]
    if len(poly) != k + 1 or poly[0] != 1:
        raise IrreducibilityError(f'{poly} is not a monic polynomial of degree {k}')
    if not gf_irreducible_p(poly, p, ZZ):
        raise IrreducibilityError(f'{poly} is reducible over GF({p})')
    digits = codec.decode(np.arange(codec.order))
    dense = [gf_strip([int(c) for c in reversed(row)]) for row in digits]

    def index_of(f: List[int]) -> int:
        coefficients = list(reversed(f)) + [0] * (k - len(f))
        return codec.encode_one(coefficients)

    add = np.empty((codec.order, codec.order), dtype=np.intp)
    mul = np.empty((codec.order, codec.order), dtype=np.intp)
    for i, f in enumerate(dense):
        for j, g in enumerate(dense):
            add[i, j] = index_of(gf_add(f, g, p, ZZ))
            mul[i, j] = index_of(gf_rem(gf_mul(f, g, p, ZZ), poly, p, ZZ))
    labels = [_poly_label(row.tolist()) for row in digits]
    return FiniteRing(add, mul, 1, labels=labels)


def frobenius(field: FiniteRing) -> RingEndomorphism:
    nonzero = np.arange(1, field.order)
    if field.order < 2 or not field.is_commutative or not field.unit_mask[nonzero].all():
        raise NotAnEndomorphism('Frobenius needs a finite field')
    p = field.characteristic
    if not isprime(p):
        raise NotAnEndomorphism(f'characteristic {p} is not prime')
    return RingEndomorphism(field, field.power_table[:, p])


def direct_product(
    first: FiniteRing,
    second: FiniteRing,
    max_order: Optional[int] = None,
) -> FiniteRing:
    return direct_power([first, second], max_order=max_order)


def direct_power(factors: Sequence[FiniteRing], max_order: Optional[int] = None) -> FiniteRing:
    codec = TupleCodec([factor.order for factor in factors])
    check_order(codec.order, max_order)
    return _tabulate(
        codec,
        lambda x, y: [f.add_table[xi, yi] for f, xi, yi in zip(factors, x, y)],
        lambda x, y: [f.mul_table[xi, yi] for f, xi, yi in zip(factors, x, y)],
        [factor.one for factor in factors],
        max_order,
    )


def matrix_ring(ring: FiniteRing, k: int, max_order: Optional[int] = None) -> FiniteRing:
    check_order(ring.order ** (k * k), max_order)
    codec = TupleCodec([ring.order] * (k * k))

    def mul(x: Components, y: Components) -> List[np.ndarray]:
        return [
            _ring_sum(ring, (ring.mul_table[x[i * k + t], y[t * k + j]] for t in range(k)))
            for i in range(k)
            for j in range(k)
        ]

    identity = [ring.one if i == j else ring.zero for i in range(k) for j in range(k)]
    return _tabulate(
        codec,
        lambda x, y: [ring.add_table[xi, yi] for xi, yi in zip(x, y)],
        mul,
        identity,
        max_order,
    )


def upper_positions(n: int) -> List[Tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i, n)]


def triangular_matrix_ring(
    ring: FiniteRing,
    alpha: Optional[RingEndomorphism],
    n: int,
    max_order: Optional[int] = None,
) -> FiniteRing:
    """T_n(R, alpha): upper triangular matrices with c_ij = sum_k a_ik alpha^(k-i)(b_kj)."""
    positions = upper_positions(n)
    check_order(ring.order ** len(positions), max_order)
    if alpha is None:
        alpha = RingEndomorphism.identity(ring)
    elif alpha.source != ring:
        raise NotAnEndomorphism('alpha is not an endomorphism of the base ring')
    alpha_powers = [alpha.power(t) for t in range(n)]
    slot = {position: s for s, position in enumerate(positions)}
    codec = TupleCodec([ring.order] * len(positions))

    def mul(x: Components, y: Components) -> List[np.ndarray]:
        return [
            _ring_sum(ring, (
                ring.mul_table[x[slot[i, t]], alpha_powers[t - i][y[slot[t, j]]]]
                for t in range(i, j + 1)
            ))
            for i, j in positions
        ]

    identity = [ring.one if i == j else ring.zero for i, j in positions]
    return _tabulate(
        codec,
        lambda x, y: [ring.add_table[xi, yi] for xi, yi in zip(x, y)],
        mul,
        identity,
        max_order,
    )


def truncated_skew_power_series(
    ring: FiniteRing,
    alpha: Optional[RingEndomorphism],
    n: int,
    max_order: Optional[int] = None,
) -> FiniteRing:
    """R[[x, alpha]]/(x^n) with x·r = alpha(r)·x; coefficients little-endian."""
    check_order(ring.order ** n, max_order)
    if alpha is None:
        alpha = RingEndomorphism.identity(ring)
    alpha_powers = [alpha.power(t) for t in range(n)]
    codec = TupleCodec([ring.order] * n, little_endian=True)

    def mul(x: Components, y: Components) -> List[np.ndarray]:
        return [
            _ring_sum(ring, (
                ring.mul_table[x[i], alpha_powers[i][y[degree - i]]]
                for i in range(degree + 1)
            ))
            for degree in range(n)
        ]

    return _tabulate(
        codec,
        lambda x, y: [ring.add_table[xi, yi] for xi, yi in zip(x, y)],
        mul,
        [ring.one] + [ring.zero] * (n - 1),
        max_order,
    )


def generalized_matrix(ring: FiniteRing, s: int, max_order: Optional[int] = None) -> FiniteRing:
    """M_(s)(R) on row-major quadruples (a, b, c, d)."""
    s = ring.check(s)
    if not ring.center_mask[s]:
        raise ConstructionError(f'{ring.label(s)} is not central')
    check_order(ring.order ** 4, max_order)
    add, mul = ring.add_table, ring.mul_table
    scaled = mul[s]

    def product(x: Components, y: Components) -> List[np.ndarray]:
        a, b, c, d = x
        a2, b2, c2, d2 = y
        return [
            add[mul[a, a2], scaled[mul[b, c2]]],
            add[mul[a, b2], mul[b, d2]],
            add[mul[c, a2], mul[d, c2]],
            add[scaled[mul[c, b2]], mul[d, d2]],
        ]

    return _tabulate(
        TupleCodec([ring.order] * 4),
        lambda x, y: [add[xi, yi] for xi, yi in zip(x, y)],
        product,
        [ring.one, ring.zero, ring.zero, ring.one],
        max_order,
    )


def generalized_context(ring: FiniteRing, s: int) -> MoritaContextSpec:
    """(R, R, R, R, psi, phi) with psi(n, m) = snm and phi(m, n) = smn."""
    regular = BimoduleSpec.regular(ring)
    return MoritaContextSpec.from_ring_products(ring, regular, regular, scale=ring.check(s))


def morita_ring(
    spec: MoritaContextSpec,
    max_order: Optional[int] = None,
    validate: bool = True,
) -> FiniteRing:
    """The ring of generalized matrices on quadruples (a, n, m, b)."""
    check_order(spec.order, max_order)
    if validate:
        spec.validate()
    A, B, M, N, psi, phi = spec.A, spec.B, spec.M, spec.N, spec.psi, spec.phi

    def add(x: Components, y: Components) -> List[np.ndarray]:
        return [
            A.add_table[x[0], y[0]],
            N.add_table[x[1], y[1]],
            M.add_table[x[2], y[2]],
            B.add_table[x[3], y[3]],
        ]

    def mul(x: Components, y: Components) -> List[np.ndarray]:
        a1, n1, m1, b1 = x
        a2, n2, m2, b2 = y
        return [
            A.add_table[A.mul_table[a1, a2], psi[n1, m2]],
            N.add_table[N.left_action[a1, n2], N.right_action[n1, b2]],
            M.add_table[M.right_action[m1, a2], M.left_action[b1, m2]],
            B.add_table[phi[m1, n2], B.mul_table[b1, b2]],
        ]

    codec = TupleCodec((A.order, N.order, M.order, B.order))
    return _tabulate(codec, add, mul, (A.one, 0, 0, B.one), max_order)


def formal_triangular_context(ring: FiniteRing, module: BimoduleSpec) -> MoritaContextSpec:
    """[[R, M], [0, R]] as a Morita context with zero pairings."""
    zero = BimoduleSpec.zero(ring, ring)
    return MoritaContextSpec(
        ring,
        ring,
        zero,
        module,
        np.zeros((module.order, 1), dtype=np.intp),
        np.zeros((1, module.order), dtype=np.intp),
    )


def formal_triangular(
    ring: FiniteRing,
    module: BimoduleSpec,
    max_order: Optional[int] = None,
) -> FiniteRing:
    return morita_ring(formal_triangular_context(ring, module), max_order=max_order)


def trivial_extension(
    ring: FiniteRing,
    module: BimoduleSpec,
    max_order: Optional[int] = None,
    validate: bool = True,
) -> FiniteRing:
    """T(R, M) on pairs (r, m) with (r1, m1)(r2, m2) = (r1r2, r1m2 + m1r2)."""
    check_order(ring.order * module.order, max_order)
    if validate:
        module.validate()
    M = module

    def mul(x: Components, y: Components) -> List[np.ndarray]:
        return [
            ring.mul_table[x[0], y[0]],
            M.add_table[M.left_action[x[0], y[1]], M.right_action[x[1], y[0]]],
        ]

    return _tabulate(
        TupleCodec((ring.order, module.order)),
        lambda x, y: [ring.add_table[x[0], y[0]], M.add_table[x[1], y[1]]],
        mul,
        (ring.one, 0),
        max_order,
    )


def trivial_extension_embedding(ring: FiniteRing, module: BimoduleSpec) -> np.ndarray:
    """Image of (r, m) in [[R, M], [0, R]] as (r, m, 0, r)."""
    pairs = TupleCodec((ring.order, module.order)).decode(np.arange(ring.order * module.order))
    codec = TupleCodec((ring.order, module.order, 1, ring.order))
    return codec.encode([pairs[:, 0], pairs[:, 1], np.zeros(len(pairs), dtype=np.intp),
                         pairs[:, 0]])


class Quotient(NamedTuple):
    ring: FiniteRing
    projection: np.ndarray
    representatives: np.ndarray


def quotient(ring: FiniteRing, members: Iterable[int]) -> Quotient:
    """R/I with the least index of each coset as its representative.

    ``members`` must be a two-sided ideal; `ringbench.ideals.IdealSet` is
    accepted directly.
    """
    ideal = np.array(sorted(set(members)), dtype=np.intp)
    mask = np.zeros(ring.order, dtype=bool)
    mask[ideal] = True
    if not mask[0] or not mask[ring.add_table[np.ix_(ideal, ideal)]].all():
        raise NotAnIdeal('not an additive subgroup')
    if not (mask[ring.mul_table[:, ideal]].all() and mask[ring.mul_table[ideal, :]].all()):
        raise NotAnIdeal('not a two-sided ideal')
    cosets = ring.add_table[:, ideal].min(axis=1)
    representatives = np.unique(cosets)
    projection = np.searchsorted(representatives, cosets)
    grid = np.ix_(representatives, representatives)
    quotient_ring = FiniteRing(
        projection[ring.add_table[grid]],
        projection[ring.mul_table[grid]],
        int(projection[ring.one]),
    )
    return Quotient(quotient_ring, projection, representatives)


def closure(ring: FiniteRing, seeds: Iterable[int], include_one: bool = True) -> frozenset:
    """Least subset containing the seeds that is closed under +, - and ·."""
    members = {0, *(ring.check(seed) for seed in seeds)}
    if include_one:
        members.add(ring.one)
    while True:
        current = np.array(sorted(members), dtype=np.intp)
        grid = np.ix_(current, current)
        generated = set(np.unique(ring.add_table[grid]).tolist())
        generated |= set(np.unique(ring.mul_table[grid]).tolist())
        if generated <= members:
            return frozenset(members)
        members |= generated


class Subring(NamedTuple):
    ring: FiniteRing
    embedding: np.ndarray


def restrict(ring: FiniteRing, members: Iterable[int], one: int) -> Subring:
    embedding = np.array(sorted(set(members)), dtype=np.intp)
    position = np.full(ring.order, -1, dtype=np.intp)
    position[embedding] = np.arange(embedding.size)
    grid = np.ix_(embedding, embedding)
    labels = [ring.label(int(i)) for i in embedding] if ring.labels is not None else None
    subring = FiniteRing(
        position[ring.add_table[grid]],
        position[ring.mul_table[grid]],
        int(position[one]),
        labels=labels,
    )
    return Subring(subring, embedding)


def subring_generated(
    ring: FiniteRing,
    seeds: Iterable[int],
    include_one: bool = True,
) -> Subring:
    """Subring generated by the seeds, as a ring plus its embedding.

    Without ``include_one`` the closure is accepted only if it has an identity
    of its own; otherwise `NoIdentityError` carries the closed subset.
    """
    members = closure(ring, seeds, include_one)
    if include_one:
        return restrict(ring, members, ring.one)
    current = np.array(sorted(members), dtype=np.intp)
    for candidate in current:
        if ((ring.mul_table[candidate, current] == current).all()
                and (ring.mul_table[current, candidate] == current).all()):
            return restrict(ring, members, int(candidate))
    raise NoIdentityError(members)


def example_3_6_block(n: int, max_order: Optional[int] = None) -> FiniteRing:
    """R_n: n×n upper triangular matrices over Z2 with a constant diagonal.

    Components are (a, a_12, a_13, ..., a_(n-1)n): the diagonal value, then the
    strictly upper entries row-major.
    """
    if n < 3:
        raise ConstructionError('R_n is defined for n >= 3')
    strict = [(i, j) for i, j in upper_positions(n) if i < j]
    codec = TupleCodec([2] * (1 + len(strict)))
    check_order(codec.order, max_order)
    parts = codec.decode(np.arange(codec.order))
    matrices = np.zeros((codec.order, n, n), dtype=np.intp)
    matrices[:, np.arange(n), np.arange(n)] = parts[:, :1]
    for s, (i, j) in enumerate(strict, start=1):
        matrices[:, i, j] = parts[:, s]

    def encode(products: np.ndarray) -> np.ndarray:
        components = [products[..., 0, 0]] + [products[..., i, j] for i, j in strict]
        return codec.encode(components)

    add = encode((matrices[:, None] + matrices[None, :]) % 2)
    mul = encode(np.einsum('xik,ykj->xyij', matrices, matrices) % 2)
    return FiniteRing(add, mul, codec.encode_one([1] + [0] * len(strict)))


def example_3_6_matrix(n: int, entries: Sequence[Tuple[int, int]], diagonal: int = 0) -> int:
    """Index in R_n of the matrix with ones at the given 1-based strictly upper entries."""
    strict = [(i, j) for i, j in upper_positions(n) if i < j]
    components = [diagonal] + [1 if (i + 1, j + 1) in entries else 0 for i, j in strict]
    return TupleCodec([2] * len(components)).encode_one(components)


def example_3_9_context() -> MoritaContextSpec:
    """A = B = Z4, M = 2Z4, N = Z4 with the products of Z4 as pairings."""
    ring = zmod(4)
    return MoritaContextSpec.from_ring_products(
        ring, BimoduleSpec.from_ideal(ring, {0, 2}), BimoduleSpec.regular(ring),
    )


def example_2_5_context(ring: FiniteRing) -> MoritaContextSpec:
    """Diagonal 3×3 rings A = B with M = R e_32 and N = R e_31 + R e_32.

    Both matrix-product pairings vanish, so this is a trivial Morita context.
    """
    diagonal = direct_power([ring] * 3)
    codec = TupleCodec([ring.order] * 3)
    d = codec.decode(np.arange(diagonal.order))
    mul = ring.mul_table
    module_m = BimoduleSpec(
        diagonal,
        diagonal,
        ring.add_table,
        mul[d[:, 2][:, None], np.arange(ring.order)[None, :]],
        mul[np.arange(ring.order)[:, None], d[:, 1][None, :]],
    )
    pairs = TupleCodec((ring.order, ring.order))
    n = pairs.decode(np.arange(ring.order ** 2))
    n31, n32 = n[:, 0], n[:, 1]
    module_n = BimoduleSpec(
        diagonal,
        diagonal,
        pairs.encode([
            ring.add_table[n31[:, None], n31[None, :]],
            ring.add_table[n32[:, None], n32[None, :]],
        ]),
        pairs.encode([mul[d[:, 2][:, None], n31[None, :]], mul[d[:, 2][:, None], n32[None, :]]]),
        pairs.encode([mul[n31[:, None], d[:, 0][None, :]], mul[n32[:, None], d[:, 1][None, :]]]),
    )
    return MoritaContextSpec(
        diagonal,
        diagonal,
        module_m,
        module_n,
        np.zeros((module_n.order, module_m.order), dtype=np.intp),
        np.zeros((module_m.order, module_n.order), dtype=np.intp),
    )


def frobenius_twisted_ring(max_order: Optional[int] = None) -> FiniteRing:
    """{[[x, y, z], [0, x^2, 0], [0, 0, x]] : x, y, z in GF(4)} on triples (x, y, z).

    Built as T(GF(4), GF(4)_sigma ⊕ GF(4)), sigma the Frobenius map.
    """
    field_ = galois_field(2, 2)
    module = BimoduleSpec.direct_sum(
        BimoduleSpec.twisted(field_, frobenius(field_)), BimoduleSpec.regular(field_),
    )
    return trivial_extension(field_, module, max_order=max_order)
