"""
Monomials and monomial ideals.

A monomial is an exponent vector; a monomial ideal is kept as its minimal
generating set (an antichain under divisibility) sorted lexicographically
descending, so two ideals are equal exactly when their generator tuples are.
Bulk operations run on numpy int64 exponent matrices.
"""
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

from samuel.core.exceptions import DimensionMismatch, ExponentOverflow, ZeroIdealError

Exponents = Tuple[int, ...]

# Exponents above this would overflow int64 when two of them are added
EXPONENT_LIMIT = 2 ** 62

# Target number of booleans materialized per divisibility chunk
_CHUNK = 1 << 22


@dataclass(frozen=True)
class Monomial:
    exps: Exponents

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exps)
        if any(e < 0 for e in exps):
            raise ValueError(f'Negative exponent in {exps}')
        if any(e >= EXPONENT_LIMIT for e in exps):
            raise ExponentOverflow(f'Exponent out of range in {exps}')
        object.__setattr__(self, 'exps', exps)

    @property
    def nvars(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def divides(self, other: 'Monomial') -> bool:
        return monomial_divides(self, other)

    def __mul__(self, other: 'Monomial') -> 'Monomial':
        _check_same_ring(self.nvars, other.nvars)
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def to_string(self, names: Sequence[str]) -> str:
        factors = []
        for name, e in zip(names, self.exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f'{name}^{e}')
        return '*'.join(factors) or '1'


def _check_same_ring(a: int, b: int):
    if a != b:
        raise DimensionMismatch(f'Monomials live in rings with {a} and {b} variables')


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    _check_same_ring(a.nvars, b.nvars)
    return all(x <= y for x, y in zip(a.exps, b.exps))


@dataclass(frozen=True)
class MonomialIdeal:
    nvars: int
    gens: Tuple[Monomial, ...]

    @cached_property
    def matrix(self) -> np.ndarray:
        return np.array([g.exps for g in self.gens], dtype=np.int64).reshape(len(self.gens), self.nvars)

    @property
    def is_unit(self) -> bool:
        return any(g.degree == 0 for g in self.gens)

    def __contains__(self, monomial: Monomial) -> bool:
        _check_same_ring(self.nvars, monomial.nvars)
        return any(g.divides(monomial) for g in self.gens)

    def __len__(self):
        return len(self.gens)

    def to_strings(self, names: Sequence[str]) -> List[str]:
        return [g.to_string(names) for g in self.gens]

    def to_string(self, names: Sequence[str]) -> str:
        return '(' + ', '.join(self.to_strings(names)) + ')'


def _divisible_by_any(targets: np.ndarray, divisors: np.ndarray) -> np.ndarray:
    """Boolean mask over the rows of targets: true where some row of divisors divides it"""
    mask = np.zeros(len(targets), dtype=bool)
    if len(targets) == 0 or len(divisors) == 0:
        return mask
    width = max(1, targets.shape[1])
    step = max(1, _CHUNK // (len(divisors) * width))
    for start in range(0, len(targets), step):
        block = targets[start:start + step]
        mask[start:start + step] = (divisors[None, :, :] <= block[:, None, :]).all(axis=2).any(axis=1)
    return mask


def minimal_rows(rows: np.ndarray) -> np.ndarray:
    nvars = rows.shape[1]
    if nvars == 0:
        return rows[:1]
    rows = np.unique(rows, axis=0)
    degrees = rows.sum(axis=1)
    kept = np.empty((0, nvars), dtype=np.int64)
    for degree in np.unique(degrees):
        group = rows[degrees == degree]
        # Equal-degree rows cannot properly divide each other
        if len(kept):
            group = group[~_divisible_by_any(group, kept)]
        kept = np.vstack([kept, group])
    return kept


def _from_rows(nvars: int, rows: np.ndarray) -> MonomialIdeal:
    ordered = sorted((tuple(int(e) for e in row) for row in rows), reverse=True)
    return MonomialIdeal(nvars=nvars, gens=tuple(Monomial(exps) for exps in ordered))


def ideal_minimalize(gens: Iterable[Union[Monomial, Exponents]], nvars: int = None) -> MonomialIdeal:
    exponent_rows = [g.exps if isinstance(g, Monomial) else tuple(g) for g in gens]
    if not exponent_rows:
        raise ZeroIdealError('The zero ideal has no monomial generators')
    lengths = {len(exps) for exps in exponent_rows}
    if len(lengths) > 1 or (nvars is not None and lengths != {nvars}):
        raise DimensionMismatch(f'Generators with differing variable counts: {sorted(lengths)}')
    nvars = lengths.pop()
    for exps in exponent_rows:
        Monomial(exps)
    rows = np.array(exponent_rows, dtype=np.int64).reshape(len(exponent_rows), nvars)
    return _from_rows(nvars, minimal_rows(rows))


def unit_ideal(nvars: int) -> MonomialIdeal:
    return MonomialIdeal(nvars=nvars, gens=(Monomial((0,) * nvars),))


def maximal_ideal(nvars: int) -> MonomialIdeal:
    return ideal_minimalize([tuple(int(i == j) for j in range(nvars)) for i in range(nvars)], nvars)


def parameter_ideal(bounds: Sequence[int]) -> MonomialIdeal:
    """(X_1^b_1, ..., X_k^b_k)"""
    nvars = len(bounds)
    return ideal_minimalize([tuple(b if i == j else 0 for j in range(nvars)) for i, b in enumerate(bounds)], nvars)


def _check_pair(a: MonomialIdeal, b: MonomialIdeal):
    if a.nvars != b.nvars:
        raise DimensionMismatch(f'Ideals live in rings with {a.nvars} and {b.nvars} variables')


def ideal_product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_pair(a, b)
    if int(a.matrix.max(initial=0)) + int(b.matrix.max(initial=0)) >= EXPONENT_LIMIT:
        raise ExponentOverflow('Exponent overflow in ideal product')
    products = (a.matrix[:, None, :] + b.matrix[None, :, :]).reshape(-1, a.nvars)
    return _from_rows(a.nvars, minimal_rows(products))


def ideal_power(a: MonomialIdeal, n: int) -> MonomialIdeal:
    if n < 0:
        raise ValueError(f'Negative power {n}')
    result = unit_ideal(a.nvars)
    base = a
    while n:
        if n & 1:
            result = ideal_product(result, base)
        n >>= 1
        if n:
            base = ideal_product(base, base)
    return result


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_pair(a, b)
    return _from_rows(a.nvars, minimal_rows(np.vstack([a.matrix, b.matrix])))


def ideal_intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_pair(a, b)
    lcms = np.maximum(a.matrix[:, None, :], b.matrix[None, :, :]).reshape(-1, a.nvars)
    return _from_rows(a.nvars, minimal_rows(lcms))


def _colon_by_monomial(a: MonomialIdeal, g: Monomial) -> MonomialIdeal:
    quotients = np.maximum(a.matrix - np.array(g.exps, dtype=np.int64), 0)
    return _from_rows(a.nvars, minimal_rows(quotients))


def ideal_colon(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_pair(a, b)
    return reduce(ideal_intersect, (_colon_by_monomial(a, g) for g in b.gens))


def ideal_contains(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    """a ⊇ b"""
    _check_pair(a, b)
    return bool(_divisible_by_any(b.matrix, a.matrix).all())


def ideal_equal(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    _check_pair(a, b)
    return a.gens == b.gens
