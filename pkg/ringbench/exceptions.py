from typing import Any, FrozenSet, List, NamedTuple, Tuple


class RingBenchError(Exception):
    pass


class Violation(NamedTuple):
    axiom: str
    witness: Tuple[int, ...]
    message: str

    def __str__(self) -> str:
        return f'{self.axiom}: {self.message} (witness {self.witness})'


class RingValidationError(RingBenchError):
    def __init__(self, violations: List[Violation]):
        self.violations = violations
        super().__init__('; '.join(str(violation) for violation in violations))


class OrderCapExceeded(RingBenchError):
    def __init__(self, order: int, cap: int):
        self.order = order
        self.cap = cap
        super().__init__(f'order {order} exceeds the cap of {cap}')


class OracleCapExceeded(OrderCapExceeded):
    pass


class ElementError(RingBenchError):
    pass


class RingMismatchError(RingBenchError):
    pass


class NotAnEndomorphism(RingBenchError):
    pass


class ModuleValidationError(RingBenchError):
    def __init__(self, condition: str, witness: Tuple[int, ...]):
        self.condition = condition
        self.witness = witness
        super().__init__(f'{condition} fails on {witness}')


class IrreducibilityError(RingBenchError):
    pass


class NotAnIdeal(RingBenchError):
    pass


class SidednessMismatch(RingBenchError):
    pass


class NoIdentityError(RingBenchError):
    def __init__(self, members: FrozenSet[int]):
        self.members = members
        super().__init__(f'closure of {len(members)} elements has no multiplicative identity')


class DocumentError(RingBenchError):
    pass


class RecipeError(RingBenchError):
    pass


class UnknownCheck(RingBenchError):
    pass


class SchemaMismatch(RingBenchError):
    def __init__(self, check_id: str, expected: Any, actual: Any):
        self.check_id = check_id
        super().__init__(
            f'{check_id} expects {getattr(expected, "__name__", expected)}, '
            f'got {type(actual).__name__}'
        )


class ConstructionError(RingBenchError):
    pass
