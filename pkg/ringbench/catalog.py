"""Declarative construction recipes and the named catalog of rings.

A recipe is a JSON-compatible mapping ``{'constructor': <id>, **arguments}``;
ring-valued arguments are recipes themselves or catalog names.
"""
from dataclasses import dataclass, field, replace
from functools import lru_cache
import json
import logging
from typing import Any, Callable, Dict, List, NamedTuple, Optional, Union

from ringbench import constructions as c
from ringbench.core import FiniteRing
from ringbench.exceptions import RecipeError, RingBenchError

logger = logging.getLogger(__name__)

Recipe = Dict[str, Any]
RecipeLike = Union[str, Recipe]


class Built(NamedTuple):
    ring: FiniteRing
    context: Optional[c.MoritaContextSpec] = None


CONSTRUCTORS: Dict[str, Callable[..., Built]] = {}


def constructor(name: str) -> Callable:
    def decorator(function: Callable[..., Built]) -> Callable[..., Built]:
        CONSTRUCTORS[name] = function
        return function
    return decorator


def parse_recipe(text: str) -> RecipeLike:
    """A catalog name, or an inline JSON recipe."""
    text = text.strip()
    if not text.startswith('{'):
        return text
    try:
        recipe = json.loads(text)
    except ValueError as error:
        raise RecipeError(f'malformed recipe: {error}') from error
    if not isinstance(recipe, dict):
        raise RecipeError('a recipe is a JSON object')
    return recipe


def build(recipe: RecipeLike, max_order: Optional[int] = None) -> Built:
    if isinstance(recipe, str):
        return build(get_entry(recipe).recipe, max_order)
    if not isinstance(recipe, dict) or 'constructor' not in recipe:
        raise RecipeError(f'not a recipe: {recipe!r}')
    name = recipe['constructor']
    try:
        function = CONSTRUCTORS[name]
    except KeyError:
        raise RecipeError(f'unknown constructor {name!r}') from None
    arguments = {key: value for key, value in recipe.items() if key != 'constructor'}
    try:
        return function(max_order=max_order, **arguments)
    except TypeError as error:
        raise RecipeError(f'{name}: {error}') from error


def build_ring(recipe: RecipeLike, max_order: Optional[int] = None) -> FiniteRing:
    return build(recipe, max_order).ring


def _endomorphism(ring: FiniteRing, alpha: Optional[str]) -> Optional[c.RingEndomorphism]:
    if alpha in (None, 'identity'):
        return None
    if alpha == 'frobenius':
        return c.frobenius(ring)
    raise RecipeError(f'unknown endomorphism {alpha!r}')


def _module(ring: FiniteRing, module: Any) -> c.BimoduleSpec:
    if module == 'regular':
        return c.BimoduleSpec.regular(ring)
    if isinstance(module, dict) and 'ideal' in module:
        return c.BimoduleSpec.from_ideal(ring, module['ideal'])
    raise RecipeError(f'unknown bimodule {module!r}')


@constructor('zmod')
def _zmod(n: int, max_order: Optional[int] = None) -> Built:
    return Built(c.zmod(n, max_order=max_order))


@constructor('galois_field')
def _galois_field(
    p: int,
    k: int = 1,
    poly: Optional[List[int]] = None,
    max_order: Optional[int] = None,
) -> Built:
    return Built(c.galois_field(p, k, poly, max_order=max_order))


@constructor('direct_product')
def _direct_product(factors: List[RecipeLike], max_order: Optional[int] = None) -> Built:
    return Built(c.direct_power([build_ring(f, max_order) for f in factors], max_order))


@constructor('matrix_ring')
def _matrix_ring(ring: RecipeLike, k: int, max_order: Optional[int] = None) -> Built:
    return Built(c.matrix_ring(build_ring(ring, max_order), k, max_order))


@constructor('triangular_matrix_ring')
def _triangular(
    ring: RecipeLike,
    n: int,
    alpha: Optional[str] = None,
    max_order: Optional[int] = None,
) -> Built:
    base = build_ring(ring, max_order)
    return Built(c.triangular_matrix_ring(base, _endomorphism(base, alpha), n, max_order))


@constructor('truncated_skew_power_series')
def _power_series(
    ring: RecipeLike,
    n: int,
    alpha: Optional[str] = None,
    max_order: Optional[int] = None,
) -> Built:
    base = build_ring(ring, max_order)
    return Built(c.truncated_skew_power_series(base, _endomorphism(base, alpha), n, max_order))


@constructor('generalized_matrix')
def _generalized_matrix(ring: RecipeLike, s: int, max_order: Optional[int] = None) -> Built:
    base = build_ring(ring, max_order)
    return Built(c.generalized_matrix(base, s, max_order), c.generalized_context(base, s))


@constructor('trivial_extension')
def _trivial_extension(
    ring: RecipeLike,
    module: Any = 'regular',
    max_order: Optional[int] = None,
) -> Built:
    base = build_ring(ring, max_order)
    return Built(c.trivial_extension(base, _module(base, module), max_order))


@constructor('quotient')
def _quotient(ring: RecipeLike, ideal: List[int], max_order: Optional[int] = None) -> Built:
    return Built(c.quotient(build_ring(ring, max_order), ideal).ring)


@constructor('example_3_6_block')
def _example_3_6(n: int, max_order: Optional[int] = None) -> Built:
    return Built(c.example_3_6_block(n, max_order))


@constructor('example_3_9')
def _example_3_9(max_order: Optional[int] = None) -> Built:
    context = c.example_3_9_context()
    return Built(c.morita_ring(context, max_order), context)


@constructor('example_2_5')
def _example_2_5(ring: RecipeLike, max_order: Optional[int] = None) -> Built:
    context = c.example_2_5_context(build_ring(ring, max_order))
    return Built(c.morita_ring(context, max_order), context)


@constructor('frobenius_twisted_ring')
def _frobenius_twisted(max_order: Optional[int] = None) -> Built:
    return Built(c.frobenius_twisted_ring(max_order))


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    recipe: Recipe
    expected: Dict[str, bool] = field(default_factory=dict)
    description: str = ''
    content_hash: Optional[str] = None

    def build(self) -> Built:
        return build_entry(self.name)

    def as_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'description': self.description,
            'recipe': self.recipe,
            'expected': self.expected,
            'content_hash': self.content_hash,
        }


def _zmod_recipe(n: int) -> Recipe:
    return {'constructor': 'zmod', 'n': n}


GF4 = {'constructor': 'galois_field', 'p': 2, 'k': 2}
Z2X = {'constructor': 'truncated_skew_power_series', 'ring': _zmod_recipe(2), 'n': 2}

ENTRIES: List[CatalogEntry] = [
    CatalogEntry(
        'Z2', _zmod_recipe(2),
        {'potent': True, 'J-clean': True, 'strongly-periodic': True, 'generalized-n-like': True},
    ),
    CatalogEntry('Z3', _zmod_recipe(3), {'potent': True, 'J-clean': False}),
    CatalogEntry(
        'Z4', _zmod_recipe(4),
        {'potent': False, 'strongly-periodic': True, 'J-clean': True, 'potent-lifting': True},
    ),
    CatalogEntry('Z5', _zmod_recipe(5), {'potent': True}),
    CatalogEntry('Z6', _zmod_recipe(6), {'potent': True}),
    CatalogEntry('Z7', _zmod_recipe(7), {'potent': True}),
    CatalogEntry('Z8', _zmod_recipe(8), {'potent': False, 'strongly-periodic': True}),
    CatalogEntry('GF4', GF4, {'potent': True, 'commutative': True}),
    CatalogEntry('GF9', {'constructor': 'galois_field', 'p': 3, 'k': 2}, {'potent': True}),
    CatalogEntry(
        'M2(Z2)', {'constructor': 'matrix_ring', 'ring': _zmod_recipe(2), 'k': 2},
        {
            'periodic': True,
            'weakly-periodic': True,
            'strongly-periodic': False,
            '2-primal': False,
            'abelian': False,
            'right-quasi-duo': False,
            'J-clean-like': False,
        },
        'simple, not strongly periodic',
    ),
    CatalogEntry(
        'E4.6', {'constructor': 'triangular_matrix_ring', 'ring': _zmod_recipe(3), 'n': 2},
        {'J-clean-like': True, 'J-clean': False, 'right-quasi-duo': True},
        'T2(Z3): J-clean-like but not J-clean',
    ),
    CatalogEntry(
        'T3(Z2)', {'constructor': 'triangular_matrix_ring', 'ring': _zmod_recipe(2), 'n': 3},
        {'strongly-periodic': True, '2-primal': True},
    ),
    CatalogEntry(
        'R3', {'constructor': 'example_3_6_block', 'n': 3},
        {'strongly-periodic': True, '2-primal': True},
    ),
    CatalogEntry(
        'E3.6', {'constructor': 'example_3_6_block', 'n': 4},
        {'strongly-periodic': True, 'nil-semicommutative': False, '2-primal': True},
        'R4: strongly periodic, not nil-semicommutative',
    ),
    CatalogEntry(
        'E3.9', {'constructor': 'example_3_9'}, {'strongly-periodic': True},
        'Morita context (Z4, Z4, 2Z4, Z4) with the products of Z4',
    ),
    CatalogEntry(
        'G7', {'constructor': 'frobenius_twisted_ring'},
        {
            'generalized-n-like': True,
            'abelian': True,
            'commutative': False,
            'strongly-periodic': True,
        },
        'GF(4) matrices [[x, y, z], [0, x^2, 0], [0, 0, x]]',
    ),
    CatalogEntry(
        'M_(2)(Z4)', {'constructor': 'generalized_matrix', 'ring': _zmod_recipe(4), 's': 2},
        {'periodic': True, 'strongly-periodic': True},
    ),
    CatalogEntry(
        'M_(x)(Z2[x]/(x^2))', {'constructor': 'generalized_matrix', 'ring': Z2X, 's': 2},
        {'strongly-periodic': True, 'J-clean-like': True},
        'truncation of M_(x)(R[[x]])',
    ),
    CatalogEntry(
        'T(Z2,Z2)', {'constructor': 'trivial_extension', 'ring': _zmod_recipe(2)},
        {'strongly-periodic': True},
    ),
    CatalogEntry(
        'T(Z4,Z4)', {'constructor': 'trivial_extension', 'ring': _zmod_recipe(4)},
        {'strongly-periodic': True},
    ),
    CatalogEntry(
        'T2(GF4,Frobenius)',
        {'constructor': 'triangular_matrix_ring', 'ring': GF4, 'n': 2, 'alpha': 'frobenius'},
        {'periodic': True, 'strongly-periodic': True},
    ),
    CatalogEntry(
        'GF4[x;Frobenius]/(x^2)',
        {'constructor': 'truncated_skew_power_series', 'ring': GF4, 'n': 2, 'alpha': 'frobenius'},
        {'periodic': True, 'strongly-periodic': True},
    ),
    CatalogEntry(
        'E2.5', {'constructor': 'example_2_5', 'ring': _zmod_recipe(2)},
        {'periodic': True, 'strongly-periodic': True},
        'trivial Morita context over diagonal 3×3 matrices, R = Z2',
    ),
]


def get_entry(name: str) -> CatalogEntry:
    for entry in ENTRIES:
        if entry.name == name:
            return entry
    raise RecipeError(f'no catalog entry named {name!r}')


@lru_cache(maxsize=None)
def build_entry(name: str) -> Built:
    entry = get_entry(name)
    try:
        built = build(entry.recipe)
    except RingBenchError as error:
        raise RecipeError(f'catalog entry {name!r}: {error}') from error
    logger.info('Built catalog entry %s (order %s)', name, built.ring.order)
    return built


def catalog_build(names: Optional[List[str]] = None) -> List[CatalogEntry]:
    entries = ENTRIES if names is None else [get_entry(name) for name in names]
    return [
        replace(entry, content_hash=build_entry(entry.name).ring.content_hash)
        for entry in entries
    ]


def entry_hash(name: str) -> str:
    return build_entry(name).ring.content_hash


def expectation_mismatches(
    entry: CatalogEntry,
    ring: FiniteRing,
    bits: Dict[str, bool],
) -> Dict[str, Dict[str, bool]]:
    observed = dict(bits, commutative=ring.is_commutative)
    return {
        name: {'expected': value, 'observed': observed[name]}
        for name, value in entry.expected.items()
        if observed.get(name) != value
    }
