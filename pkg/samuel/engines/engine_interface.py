from typing import Any, List, Sequence, Tuple

from typing_extensions import Protocol

from samuel.core.polynomials import Polynomial


class IdealEngine(Protocol):
    """Ideal arithmetic in one fixed ring; ideals are opaque, hashable values of the engine"""
    kind: str
    dimension: int
    names: Tuple[str, ...]

    def ideal(self, gens: Sequence[Polynomial]) -> Any: ...
    def maximal_ideal(self) -> Any: ...
    def product(self, a, b) -> Any: ...
    def power(self, a, n: int) -> Any: ...
    def sum(self, a, b) -> Any: ...
    def intersect(self, a, b) -> Any: ...
    def colon(self, a, b) -> Any: ...
    def contains(self, a, b) -> bool: ...
    def equal(self, a, b) -> bool: ...
    def colength(self, a) -> int: ...
    def quotient_length(self, outer, inner) -> int: ...
    def parameter_powers(self, q, n: int) -> Any: ...
    def generators(self, a) -> List[str]: ...
    def missing_generators(self, a, b) -> List[str]: ...
    def generator_count(self, a) -> int: ...
