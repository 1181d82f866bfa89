"""
Colengths of m-primary monomial ideals by counting the monomials under the staircase.
"""
import itertools
from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np

from samuel.core.exceptions import ContainmentError, NotMPrimaryError
from samuel.core.monomials import MonomialIdeal, ideal_contains, minimal_rows


@dataclass(frozen=True)
class ColengthResult:
    value: int
    box: Tuple[int, ...]

    def __int__(self):
        return self.value


def pure_power_bounds(j: MonomialIdeal) -> Tuple[int, ...]:
    """Exponent of the pure power of each variable among the generators, 0 when there is none"""
    bounds = [0] * j.nvars
    for g in j.gens:
        support = [i for i, e in enumerate(g.exps) if e]
        if len(support) == 1:
            bounds[support[0]] = g.exps[support[0]]
    return tuple(bounds)


def is_m_primary(j: MonomialIdeal) -> bool:
    if j.is_unit:
        return True
    return all(b > 0 for b in pure_power_bounds(j))


def _count(rows: np.ndarray, memo: Dict[Tuple[int, bytes], int]) -> int:
    nvars = rows.shape[1]
    if (rows.sum(axis=1) == 0).any():
        return 0
    if nvars == 1:
        return int(rows[:, 0].min())
    if nvars == 2:
        # Minimal generators sorted by first exponent have strictly falling second exponents
        ordered = rows[np.argsort(rows[:, 0])]
        return int(((ordered[1:, 0] - ordered[:-1, 0]) * ordered[:-1, 1]).sum())
    key = (nvars, rows.tobytes())
    if key in memo:
        return memo[key]

    # Slice on the variable with the most distinct exponents
    levels = [np.unique(rows[:, i]) for i in range(nvars)]
    var = max(range(nvars), key=lambda i: (len(levels[i]), -i))
    total = 0
    for low, high in zip(levels[var][:-1], levels[var][1:]):
        sliced = np.delete(rows[rows[:, var] <= low], var, axis=1)
        total += int(high - low) * _count(minimal_rows(sliced), memo)
    memo[key] = total
    return total


def colength(j: MonomialIdeal) -> ColengthResult:
    if not is_m_primary(j):
        raise NotMPrimaryError(f'Ideal with generators {[g.exps for g in j.gens]} is not m-primary')
    box = pure_power_bounds(j)
    if j.is_unit or j.nvars == 0:
        return ColengthResult(value=0, box=box)
    return ColengthResult(value=_count(minimal_rows(j.matrix), {}), box=box)


def colength_bruteforce(j: MonomialIdeal) -> int:
    """Counts every exponent vector of the bounding box outside j"""
    if not is_m_primary(j):
        raise NotMPrimaryError('Brute force colength needs an m-primary ideal')
    if j.is_unit:
        return 0
    box = pure_power_bounds(j)
    points = np.array(list(itertools.product(*(range(b) for b in box))), dtype=np.int64).reshape(-1, j.nvars)
    inside = (j.matrix[None, :, :] <= points[:, None, :]).all(axis=2).any(axis=1)
    return int((~inside).sum())


def quotient_length(outer: MonomialIdeal, inner: MonomialIdeal) -> int:
    """ℓ(outer/inner)"""
    if not ideal_contains(outer, inner):
        raise ContainmentError('quotient_length needs inner contained in outer')
    return colength(inner).value - colength(outer).value
