"""
Hilbert-Samuel tables H(n) = ℓ(A/I^(n+1)) and their coefficients in the binomial basis

    H(n) = sum_i (-1)^i e_i C(n+d-i, d-i)    for n >> 0
"""
import logging
from dataclasses import dataclass
from math import comb
from typing import List, Optional, Sequence, Tuple

import sympy

from samuel.core.exceptions import CertificationError, NoPolynomialTail, OptionError
from samuel.core.settings import Settings


def binomial(a: int, b: int) -> int:
    if b < 0 or a < b:
        return 0
    return comb(a, b)


def hilbert_polynomial_value(e: Sequence[int], d: int, n: int) -> int:
    return sum((-1) ** i * e[i] * binomial(n + d - i, d - i) for i in range(d + 1))


@dataclass(frozen=True)
class HilbertProfile:
    d: int
    table: Tuple[int, ...]
    e: Tuple[int, ...]
    postulation: int
    verified_points: int
    extensions: int = 0

    def value(self, n: int) -> int:
        return hilbert_polynomial_value(self.e, self.d, n)

    def coefficient(self, i: int) -> int:
        return self.e[i] if 0 <= i <= self.d else 0


def fit_hilbert_polynomial(table: Sequence[int], d: int) -> Tuple[Tuple[int, ...], int, int]:
    """Fits e_0..e_d on the last d+1 samples and validates the fit on earlier samples.

    Returns:
        (e, postulation, verified_points) where verified_points counts the samples
        below the fitting window that agree with the polynomial.
    Raises:
        NoPolynomialTail: fewer than two samples below the window agree.
    """
    if d < 0:
        raise ValueError(f'Dimension must be nonnegative, found {d}')
    top = len(table) - 1
    window = list(range(top - d, top + 1))
    if window[0] < 2:
        raise NoPolynomialTail(f'Table of length {len(table)} is too short to fit and validate degree {d}')
    system = sympy.Matrix([[(-1) ** i * binomial(n + d - i, d - i) for i in range(d + 1)] for n in window])
    solution = system.LUsolve(sympy.Matrix([table[n] for n in window]))
    if any(not value.is_integer for value in solution):
        raise NoPolynomialTail(f'Fitted coefficients {list(solution)} are not integers')
    e = tuple(int(value) for value in solution)

    postulation = window[0]
    while postulation > 0 and table[postulation - 1] == hilbert_polynomial_value(e, d, postulation - 1):
        postulation -= 1
    verified_points = window[0] - postulation
    if verified_points < 2:
        raise NoPolynomialTail(
            f'Only {verified_points} samples below the fitting window agree with e = {e}; no polynomial tail detected'
        )
    return e, postulation, verified_points


def postulation_number(profile: HilbertProfile) -> int:
    return profile.postulation


def hilbert_function(engine, I, n_max: int) -> List[int]:
    """[ℓ(A/I^(n+1)) for n in 0..n_max], powers computed incrementally"""
    table = []
    for n in range(n_max + 1):
        try:
            table.append(engine.colength(engine.power(I, n + 1)))
        except CertificationError as e:
            e.power = n + 1
            raise
    return table


def compute_hilbert_profile(engine, I, n_max: Optional[int] = None) -> HilbertProfile:
    """Table plus fit; when validation fails the table grows by Settings.extend_step, at most
    Settings.extend_attempts times"""
    d = engine.dimension
    n_max = n_max if n_max is not None else Settings.default_n_max(d)
    if n_max < d + 4:
        raise OptionError(f'n_max must be at least d + 4 = {d + 4}, found {n_max}')
    table = hilbert_function(engine, I, n_max)
    extensions = 0
    while True:
        try:
            e, postulation, verified_points = fit_hilbert_polynomial(table, d)
            break
        except NoPolynomialTail:
            if extensions >= Settings.extend_attempts:
                raise
            extensions += 1
            n_max += Settings.extend_step
            logging.info(f'No polynomial tail yet, extending the Hilbert table to n_max = {n_max}')
            table = hilbert_function(engine, I, n_max)
    profile = HilbertProfile(
        d=d, table=tuple(table), e=e, postulation=postulation,
        verified_points=verified_points, extensions=extensions,
    )
    validate_profile(profile)
    return profile


def validate_profile(profile: HilbertProfile):
    if any(b <= a for a, b in zip(profile.table, profile.table[1:])):
        raise NoPolynomialTail(f'Hilbert table {list(profile.table)} is not strictly increasing')
    if profile.e[0] < 1:
        raise NoPolynomialTail(f'Fitted multiplicity {profile.e[0]} is not positive')
    for n in range(profile.postulation, len(profile.table)):
        if profile.table[n] != profile.value(n):
            raise NoPolynomialTail(f'Fit disagrees with the table at n = {n}')
