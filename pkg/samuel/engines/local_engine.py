"""
Engine for ideals of A = F_p[[X_1, ..., X_n]]/a, backed by Nakayama-certified truncations.

An ideal is its generator list; the certified truncation of each ideal is built on first
use and cached, as are powers. Binary comparisons lift both sides to a common order.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from samuel.core import local_ring
from samuel.core.exceptions import CertificationError, ContainmentError, ZeroIdealError
from samuel.core.local_ring import LocalRingSpec, TruncatedIdeal
from samuel.core.polynomials import Polynomial
from samuel.core.problems import ParsedProblem
from samuel.core.settings import Settings


@dataclass(frozen=True)
class LocalIdeal:
    gens: Tuple[Polynomial, ...]

    def __len__(self):
        return len(self.gens)


class LocalEngine:
    kind = 'local'

    def __init__(self, ring: LocalRingSpec, dimension: int, graded: Optional[bool] = None,
                 truncation_max: Optional[int] = None):
        self.ring = ring
        self.names: Tuple[str, ...] = ring.vars
        self.dimension = dimension
        self.graded = ring.homogeneous if graded is None else graded
        self.truncation_max = truncation_max or Settings.truncation_max
        self._truncations: Dict[LocalIdeal, TruncatedIdeal] = {}
        self._powers: Dict[Tuple[LocalIdeal, int], LocalIdeal] = {}

    @classmethod
    def from_problem(cls, problem: ParsedProblem) -> 'LocalEngine':
        ring = LocalRingSpec(vars=problem.names, char=problem.char, relations=problem.relations)
        return cls(
            ring,
            dimension=problem.spec.d,
            graded=local_ring.use_graded(ring, problem.I + problem.Q),
            truncation_max=problem.spec.options.N_max,
        )

    def ideal(self, gens: Sequence[Polynomial]) -> LocalIdeal:
        gens = tuple(g for g in gens if not g.is_zero)
        if not gens:
            raise ZeroIdealError('Ideal has no nonzero generators')
        if self.graded and not all(g.is_homogeneous for g in gens):
            raise ValueError('Graded engine needs homogeneous generators')
        return LocalIdeal(gens)

    def truncation(self, a: LocalIdeal) -> TruncatedIdeal:
        if a not in self._truncations:
            self._truncations[a] = local_ring.certify(self.ring, a.gens, self.truncation_max, self.graded)
        return self._truncations[a]

    def _common(self, a: LocalIdeal, b: LocalIdeal) -> Tuple[TruncatedIdeal, TruncatedIdeal]:
        ta, tb = self.truncation(a), self.truncation(b)
        order = max(ta.order, tb.order)
        return local_ring.at_order(ta, order), local_ring.at_order(tb, order)

    def _from_truncated(self, J: TruncatedIdeal) -> LocalIdeal:
        result = LocalIdeal(tuple(local_ring.minimal_generators(J)))
        if J.certified:
            self._truncations.setdefault(result, J)
        return result

    def _compact(self, gens: List[Polynomial]) -> LocalIdeal:
        if len(gens) <= Settings.product_compaction:
            return LocalIdeal(tuple(gens))
        if self.graded:
            # Minimal generators of a homogeneous ideal live below its top generator degree
            J = local_ring.build_truncated(self.ring, gens, max(g.degree for g in gens) + 1, graded=True)
            return LocalIdeal(tuple(local_ring.minimal_generators(J)))
        try:
            J = local_ring.certify(self.ring, gens, self.truncation_max, graded=False)
        except CertificationError:
            logging.debug(f'Keeping {len(gens)} uncompacted generators')
            return LocalIdeal(tuple(gens))
        return self._from_truncated(J)

    def maximal_ideal(self) -> LocalIdeal:
        n, p = self.ring.nvars, self.ring.char
        return LocalIdeal(tuple(Polynomial.variable(n, p, i) for i in range(n)))

    def product(self, a: LocalIdeal, b: LocalIdeal) -> LocalIdeal:
        gens = local_ring.ideal_product_local(a.gens, b.gens)
        if not gens:
            raise ZeroIdealError('Product vanishes in the polynomial ring')
        return self._compact(gens)

    def power(self, a: LocalIdeal, n: int) -> LocalIdeal:
        key = (a, n)
        if key not in self._powers:
            if n == 0:
                self._powers[key] = LocalIdeal((Polynomial.constant(self.ring.nvars, self.ring.char),))
            elif n == 1:
                self._powers[key] = a
            else:
                self._powers[key] = self.product(self.power(a, n - 1), a)
        return self._powers[key]

    def sum(self, a: LocalIdeal, b: LocalIdeal) -> LocalIdeal:
        return self._compact(list(dict.fromkeys(a.gens + b.gens)))

    def intersect(self, a: LocalIdeal, b: LocalIdeal) -> LocalIdeal:
        ta, tb = self._common(a, b)
        return self._from_truncated(local_ring.ideal_intersect_local(ta, tb))

    def colon(self, a: LocalIdeal, b: LocalIdeal) -> LocalIdeal:
        J = local_ring.ideal_colon_local(self.ring, self.truncation(a), list(b.gens), check_stability=False)
        return self._from_truncated(J)

    def contains(self, a: LocalIdeal, b: LocalIdeal) -> bool:
        """a ⊇ b; exact since a contains m^(N-1) at its certified order N"""
        ta = self.truncation(a)
        return all(ta.contains_polynomial(g) for g in b.gens)

    def equal(self, a: LocalIdeal, b: LocalIdeal) -> bool:
        if a.gens == b.gens:
            return True
        ta, tb = self._common(a, b)
        return local_ring.equal_truncated(ta, tb)

    def colength(self, a: LocalIdeal) -> int:
        return self.truncation(a).colength

    def quotient_length(self, outer: LocalIdeal, inner: LocalIdeal) -> int:
        if not self.contains(outer, inner):
            raise ContainmentError('quotient_length needs inner contained in outer')
        return self.colength(inner) - self.colength(outer)

    def parameter_powers(self, q: LocalIdeal, n: int) -> LocalIdeal:
        gens = []
        for g in q.gens:
            power = Polynomial.constant(self.ring.nvars, self.ring.char)
            for _ in range(n):
                power = power * g
            gens.append(power)
        return self.ideal(gens)

    def generators(self, a: LocalIdeal) -> List[str]:
        return [g.to_string(self.names) for g in a.gens]

    def missing_generators(self, a: LocalIdeal, b: LocalIdeal) -> List[str]:
        """Representatives of generators of a modulo b"""
        ta, tb = self._common(a, b)
        return [g.to_string(self.names) for g in local_ring.minimal_generators(ta, modulo=tb)]

    def generator_count(self, a: LocalIdeal) -> int:
        return len(a)
