"""
Ideals of A = U/a over F_p as echelonized spans in a degree-truncated quotient.

An ideal truncated at order N is certified once its span contains every monomial of
degree N - 1. By Nakayama the ideal then contains m^(N-1), so its colength, its
membership test and its colon ideals read off at order N are exact.
"""
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from samuel.core.ambient import Ambient, DenseAmbient, DenseQuotient, GradedAlgebra, GradedAmbient
from samuel.core.exceptions import CertificationError, ContainmentError, DimensionMismatch, TruncationMismatch, \
    ZeroIdealError
from samuel.core.linalg import check_prime, intersect_rowspaces, nullspace, reduce_vectors, rref
from samuel.core.monomials import Exponents
from samuel.core.polynomials import Polynomial, products
from samuel.core.settings import Settings

Block = Tuple[np.ndarray, List[int]]


@dataclass(frozen=True)
class LocalRingSpec:
    vars: Tuple[str, ...]
    char: int
    relations: Tuple[Polynomial, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'vars', tuple(self.vars))
        object.__setattr__(self, 'relations', tuple(self.relations))
        check_prime(self.char)
        for g in self.relations:
            if g.is_zero:
                raise ValueError('Relations must be nonzero')
            if (g.nvars, g.char) != (self.nvars, self.char):
                raise DimensionMismatch('Relation does not belong to the ring')

    @property
    def nvars(self) -> int:
        return len(self.vars)

    @property
    def homogeneous(self) -> bool:
        return all(g.is_homogeneous for g in self.relations)


class LocalRing:
    """Holds the graded or dense quotient and the ambients built for one ring, reused across ideals"""

    def __init__(self, spec: LocalRingSpec, graded: bool):
        if graded and not spec.homogeneous:
            raise ValueError('Graded mode needs homogeneous relations')
        self.spec = spec
        self.graded = graded
        self._algebra = GradedAlgebra(spec.nvars, spec.char, spec.relations) if graded else None
        self._quotient = None if graded else DenseQuotient(spec.nvars, spec.char, spec.relations)
        self._ambients: Dict[int, Ambient] = {}

    def ambient(self, order: int) -> Ambient:
        if order not in self._ambients:
            if self.graded:
                self._ambients[order] = GradedAmbient(self._algebra, order)
            else:
                self._ambients[order] = DenseAmbient(self._quotient, order)
        return self._ambients[order]


@lru_cache(maxsize=32)
def get_local_ring(spec: LocalRingSpec, graded: bool) -> LocalRing:
    return LocalRing(spec, graded)


@dataclass(frozen=True, eq=False)
class TruncatedIdeal:
    ring: LocalRingSpec
    order: int
    graded: bool
    ambient: Ambient = field(repr=False)
    blocks: Tuple[Block, ...] = field(repr=False)
    certified: bool
    gens: Tuple[Polynomial, ...] = ()
    stable: Optional[bool] = None

    @property
    def rank(self) -> int:
        return sum(len(pivots) for _, pivots in self.blocks)

    @property
    def truncated_colength(self) -> int:
        return self.ambient.dimension - self.rank

    @property
    def colength(self) -> int:
        if not self.certified:
            raise CertificationError(f'Ideal is not certified at order {self.order}', order=self.order)
        return self.truncated_colength

    def standard_monomials(self) -> List[Exponents]:
        result = []
        for k, (_, pivots) in enumerate(self.blocks):
            pivot_set = set(pivots)
            result.extend(label for c, label in enumerate(self.ambient.labels(k)) if c not in pivot_set)
        return result

    def contains_polynomial(self, f: Polynomial) -> bool:
        for k, vector in self.ambient.vectors(f).items():
            basis, pivots = self.blocks[k]
            if reduce_vectors(vector[None, :], basis, pivots, self.ring.char).any():
                return False
        return True


def _check_gens(ring: LocalRingSpec, gens: Sequence[Polynomial]):
    for g in gens:
        if (g.nvars, g.char) != (ring.nvars, ring.char):
            raise DimensionMismatch('Generator does not belong to the ring')


def use_graded(ring: LocalRingSpec, gens: Iterable[Polynomial]) -> bool:
    return ring.homogeneous and all(g.is_homogeneous for g in gens)


def build_truncated(ring: LocalRingSpec, gens: Sequence[Polynomial], N: int,
                    graded: Optional[bool] = None) -> TruncatedIdeal:
    if N < 1:
        raise ValueError(f'Truncation order must be positive, found {N}')
    gens = tuple(g for g in gens if not g.is_zero)
    _check_gens(ring, gens)
    if graded is None:
        graded = use_graded(ring, gens)
    elif graded and not use_graded(ring, gens):
        raise ValueError('Graded mode needs homogeneous generators')
    ambient = get_local_ring(ring, graded).ambient(N)
    spans = ambient.empty_spans()
    for g in gens:
        for k, vector in ambient.vectors(g).items():
            spans[k] = np.vstack([spans[k], vector[None, :]])
    blocks = ambient.close(spans)
    return TruncatedIdeal(
        ring=ring, order=N, graded=graded, ambient=ambient, blocks=tuple(blocks),
        certified=ambient.certificate(blocks), gens=gens,
    )


def certify(ring: LocalRingSpec, gens: Sequence[Polynomial], truncation_max: Optional[int] = None,
            graded: Optional[bool] = None, start: Optional[int] = None) -> TruncatedIdeal:
    """Builds at increasing orders (doubling) until the Nakayama certificate holds"""
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        raise ZeroIdealError('Cannot certify the zero ideal')
    truncation_max = truncation_max or Settings.truncation_max
    N = start or max(g.degree for g in gens) + 2
    while True:
        J = build_truncated(ring, gens, min(N, truncation_max), graded)
        if J.certified:
            return J
        if N >= truncation_max:
            raise CertificationError(
                f'No certificate up to order {truncation_max}: possibly not m-primary or N_max too small',
                order=truncation_max,
            )
        logging.info(f'Truncation order {N} not certified, trying {min(2 * N, truncation_max)}')
        N *= 2


def colength_certified(ring: LocalRingSpec, gens: Sequence[Polynomial], truncation_max: Optional[int] = None,
                       graded: Optional[bool] = None) -> int:
    return certify(ring, gens, truncation_max, graded).colength


def ideal_product_local(a: Sequence[Polynomial], b: Sequence[Polynomial]) -> List[Polynomial]:
    return products(a, b)


def minimal_generators(J: TruncatedIdeal, modulo: Optional[TruncatedIdeal] = None) -> List[Polynomial]:
    """Rows of J independent modulo mJ (plus modulo, when given), as polynomials.

    Exact for certified ideals, and in graded mode for every degree below the order.
    """
    ambient = J.ambient
    p = J.ring.char
    below: Dict[int, List[np.ndarray]] = {k: [] for k in range(len(J.blocks))}
    for k, (basis, _) in enumerate(J.blocks):
        for target, rows in ambient.shifted(k, basis).items():
            below[target].append(rows)
    if modulo is not None:
        _check_compatible(J, modulo, exact=False)
        for k, (basis, _) in enumerate(modulo.blocks):
            below[k].append(basis)
    gens = []
    for k, (basis, _) in enumerate(J.blocks):
        if len(basis) == 0:
            continue
        reference, pivots = rref(np.vstack([np.zeros((0, basis.shape[1]), dtype=np.int64)] + below[k]), p)
        remainder, _ = rref(reduce_vectors(basis, reference, pivots, p), p)
        gens.extend(ambient.polynomial(k, row) for row in remainder)
    return gens


def at_order(J: TruncatedIdeal, N: int) -> TruncatedIdeal:
    if N == J.order:
        return J
    gens = J.gens or tuple(minimal_generators(J))
    return build_truncated(J.ring, gens, N, J.graded)


def _check_compatible(a: TruncatedIdeal, b: TruncatedIdeal, exact: bool):
    if a.ring != b.ring or a.graded != b.graded:
        raise TruncationMismatch('Truncated ideals from different ambients')
    if a.order != b.order:
        raise TruncationMismatch(f'Truncation orders differ: {a.order} and {b.order}')
    if exact and not (a.certified and b.certified):
        raise CertificationError('Exact span operations need certified ideals', order=a.order)


def _derived(a: TruncatedIdeal, blocks: List[Block], stable: Optional[bool] = None) -> TruncatedIdeal:
    return TruncatedIdeal(
        ring=a.ring, order=a.order, graded=a.graded, ambient=a.ambient, blocks=tuple(blocks),
        certified=a.ambient.certificate(blocks), stable=stable,
    )


def ideal_sum_local(a: TruncatedIdeal, b: TruncatedIdeal, exact: bool = True) -> TruncatedIdeal:
    _check_compatible(a, b, exact)
    p = a.ring.char
    blocks = [rref(np.vstack([ba, bb]), p) for (ba, _), (bb, _) in zip(a.blocks, b.blocks)]
    return _derived(a, blocks)


def ideal_intersect_local(a: TruncatedIdeal, b: TruncatedIdeal, exact: bool = True) -> TruncatedIdeal:
    _check_compatible(a, b, exact)
    p = a.ring.char
    blocks = [intersect_rowspaces(ba, bb, p) for (ba, _), (bb, _) in zip(a.blocks, b.blocks)]
    return _derived(a, blocks)


def contains_truncated(a: TruncatedIdeal, b: TruncatedIdeal) -> bool:
    """a ⊇ b as spans at their common order"""
    _check_compatible(a, b, exact=False)
    p = a.ring.char
    return all(
        not reduce_vectors(bb, ba, pa, p).any()
        for (ba, pa), (bb, _) in zip(a.blocks, b.blocks)
    )


def equal_truncated(a: TruncatedIdeal, b: TruncatedIdeal) -> bool:
    _check_compatible(a, b, exact=False)
    return all(
        pa == pb and np.array_equal(ba, bb)
        for (ba, pa), (bb, pb) in zip(a.blocks, b.blocks)
    )


def colon_truncated(J: TruncatedIdeal, f: Polynomial) -> TruncatedIdeal:
    """{g : f g ∈ J} read off at J's order"""
    if J.graded and not f.is_homogeneous:
        raise ValueError('Colon by a non-homogeneous element needs the dense ambient')
    if f.is_zero:
        raise ZeroIdealError('Colon by zero')
    p = J.ring.char
    ambient = J.ambient
    blocks = []
    for k, (basis, pivots) in enumerate(J.blocks):
        pivot_set = set(pivots)
        complement = [c for c in range(ambient.block_sizes[k]) if c not in pivot_set]
        if not complement:
            blocks.append((basis, pivots))
            continue
        units = np.zeros((len(complement), ambient.block_sizes[k]), dtype=np.int64)
        units[np.arange(len(complement)), complement] = 1
        images = ambient.multiply_rows(k, units, f)
        reduced = [
            reduce_vectors(rows, J.blocks[t][0], J.blocks[t][1], p)
            for t, rows in sorted(images.items())
        ]
        if reduced:
            kernel = nullspace(np.hstack(reduced).T, p)
        else:
            kernel = np.eye(len(complement), dtype=np.int64)
        added = np.zeros((len(kernel), ambient.block_sizes[k]), dtype=np.int64)
        added[:, complement] = kernel
        blocks.append(rref(np.vstack([basis, added]), p))
    return _derived(J, ambient.close([basis for basis, _ in blocks]))


def colon_by_ideal(J: TruncatedIdeal, gens: Sequence[Polynomial]) -> TruncatedIdeal:
    result = None
    for f in gens:
        colon = colon_truncated(J, f)
        result = colon if result is None else ideal_intersect_local(result, colon, exact=False)
    if result is None:
        raise ZeroIdealError('Colon by the zero ideal')
    return result


def ideal_colon_local(ring: LocalRingSpec, a: Union[TruncatedIdeal, Sequence[Polynomial]],
                      f: Union[Polynomial, Sequence[Polynomial]], N: Optional[int] = None,
                      check_stability: bool = True) -> TruncatedIdeal:
    """(a : f) at order N; with check_stability the colength is recomputed at N + 1 and N + 2"""
    if isinstance(a, TruncatedIdeal):
        J = a if N is None else at_order(a, N)
    else:
        J = build_truncated(ring, a, N) if N is not None else certify(ring, a)
    if not J.certified:
        raise CertificationError(f'Colon needs a certified ideal, order {J.order} is not', order=J.order)
    divisors = [f] if isinstance(f, Polynomial) else list(f)
    result = colon_by_ideal(J, divisors)
    if not check_stability:
        return result
    lengths = {result.truncated_colength}
    for step in (1, 2):
        lengths.add(colon_by_ideal(at_order(J, J.order + step), divisors).truncated_colength)
    return _derived(result, list(result.blocks), stable=len(lengths) == 1)


def quotient_length_local(ring: LocalRingSpec, outer: Sequence[Polynomial], inner: Sequence[Polynomial],
                          truncation_max: Optional[int] = None) -> int:
    """ℓ(outer/inner), after checking inner ⊆ outer at a common certified order"""
    graded = use_graded(ring, list(outer) + list(inner))
    a = certify(ring, outer, truncation_max, graded)
    b = certify(ring, inner, truncation_max, graded)
    N = max(a.order, b.order)
    a, b = at_order(a, N), at_order(b, N)
    if not contains_truncated(a, b):
        raise ContainmentError('quotient_length_local needs inner contained in outer')
    return b.colength - a.colength
