"""
Exact engine for monomial ideals of k[[X_1, ..., X_n]]; lengths do not depend on k.
"""
from typing import Dict, List, Sequence, Tuple

from samuel.core import monomials
from samuel.core.exceptions import ProblemSpecError
from samuel.core.monomials import Monomial, MonomialIdeal
from samuel.core.polynomials import Polynomial
from samuel.core.problems import ParsedProblem
from samuel.core.staircase import colength, quotient_length


class MonomialEngine:
    kind = 'monomial'

    def __init__(self, names: Sequence[str]):
        self.names: Tuple[str, ...] = tuple(names)
        self.dimension = len(self.names)
        self._powers: Dict[Tuple[MonomialIdeal, int], MonomialIdeal] = {}
        self._colengths: Dict[MonomialIdeal, int] = {}

    @classmethod
    def from_problem(cls, problem: ParsedProblem) -> 'MonomialEngine':
        return cls(problem.names)

    def ideal(self, gens: Sequence[Polynomial]) -> MonomialIdeal:
        for g in gens:
            if not g.is_monomial:
                raise ProblemSpecError(f'Monomial engine needs monomial generators, found {g.to_string(self.names)}')
        return monomials.ideal_minimalize([g.leading_monomial() for g in gens], self.dimension)

    def maximal_ideal(self) -> MonomialIdeal:
        return monomials.maximal_ideal(self.dimension)

    def product(self, a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
        return monomials.ideal_product(a, b)

    def power(self, a: MonomialIdeal, n: int) -> MonomialIdeal:
        key = (a, n)
        if key not in self._powers:
            if n <= 1:
                self._powers[key] = monomials.ideal_power(a, n)
            else:
                self._powers[key] = monomials.ideal_product(self.power(a, n - 1), a)
        return self._powers[key]

    def sum(self, a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
        return monomials.ideal_sum(a, b)

    def intersect(self, a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
        return monomials.ideal_intersect(a, b)

    def colon(self, a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
        return monomials.ideal_colon(a, b)

    def contains(self, a: MonomialIdeal, b: MonomialIdeal) -> bool:
        return monomials.ideal_contains(a, b)

    def equal(self, a: MonomialIdeal, b: MonomialIdeal) -> bool:
        return monomials.ideal_equal(a, b)

    def colength(self, a: MonomialIdeal) -> int:
        if a not in self._colengths:
            self._colengths[a] = colength(a).value
        return self._colengths[a]

    def quotient_length(self, outer: MonomialIdeal, inner: MonomialIdeal) -> int:
        return quotient_length(outer, inner)

    def parameter_powers(self, q: MonomialIdeal, n: int) -> MonomialIdeal:
        return monomials.ideal_minimalize([Monomial(tuple(n * e for e in g.exps)) for g in q.gens], self.dimension)

    def generators(self, a: MonomialIdeal) -> List[str]:
        return a.to_strings(self.names)

    def missing_generators(self, a: MonomialIdeal, b: MonomialIdeal) -> List[str]:
        """Generators of a outside b"""
        return [g.to_string(self.names) for g in a.gens if g not in b]

    def generator_count(self, a: MonomialIdeal) -> int:
        return len(a)
