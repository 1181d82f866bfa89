"""
Problem files: a ring, the ideal I and its reduction Q, plus engine options. Files are JSON,
polynomials are written in the grammar of samuel.core.parser.
"""
import re
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, Field, root_validator, validator

from samuel.core.exceptions import ProblemSpecError, UnsupportedCharacteristic
from samuel.core.linalg import check_prime
from samuel.core.parser import IDENTIFIER_REGEX, parse_polynomials
from samuel.core.polynomials import Polynomial
from samuel.core.settings import Settings

BUILTIN_EXAMPLES = ('ex32', 'sec5')


def _check_prime(p: int):
    try:
        check_prime(p)
    except UnsupportedCharacteristic as e:
        raise ValueError(str(e))


class RingSpec(BaseModel):
    vars: List[str] = Field(..., description='Variable names, in order')
    char: int = Field(0, description='0 or a prime; the local engine needs a prime')
    relations: List[str] = Field(default=[], description='Generators of the defining ideal; empty for a power series ring')

    @validator('vars')
    def vars_are_identifiers(cls, v):
        if not v:
            raise ValueError('A ring needs at least one variable')
        for name in v:
            if not re.match(IDENTIFIER_REGEX, name):
                raise ValueError(f'{name!r} is not a valid variable name')
        if len(set(v)) != len(v):
            raise ValueError(f'Repeated variable names in {v}')
        return v

    @validator('char')
    def char_is_zero_or_prime(cls, v):
        if v != 0:
            _check_prime(v)
        return v


class Options(BaseModel):
    n_max: Optional[int] = Field(None, ge=1, description='Largest n of the Hilbert table')
    r_max: Optional[int] = Field(None, ge=0, description='Search bound for the reduction number')
    N_max: Optional[int] = Field(None, ge=2, description='Largest truncation order of the local engine')
    stab_window: Optional[int] = Field(None, ge=1, description='Repeats needed to call a colon chain stable')
    prime: Optional[int] = Field(None, description='Characteristic override for the local engine')

    @validator('prime')
    def prime_is_prime(cls, v):
        if v is not None:
            _check_prime(v)
        return v


class ProblemSpec(BaseModel):
    name: Optional[str] = None
    ring: RingSpec
    dimension: Optional[int] = Field(None, ge=1, description='Krull dimension; defaults to the variable count')
    ideal_I: List[str] = Field(..., min_items=1)
    ideal_Q: List[str] = Field(..., min_items=1)
    options: Options = Field(default_factory=Options)

    @root_validator(skip_on_failure=True)
    def check_dimension(cls, values):
        ring = values['ring']
        dimension = values.get('dimension')
        if ring.relations and dimension is None:
            raise ValueError('dimension is required when the ring has relations')
        if not ring.relations and dimension is not None and dimension != len(ring.vars):
            raise ValueError(f'A power series ring in {len(ring.vars)} variables has dimension {len(ring.vars)}')
        d = dimension if dimension is not None else len(ring.vars)
        if len(values['ideal_Q']) != d:
            raise ValueError(f'ideal_Q must have exactly {d} generators, found {len(values["ideal_Q"])}')
        return values

    @property
    def d(self) -> int:
        return self.dimension if self.dimension is not None else len(self.ring.vars)

    def parsed(self) -> 'ParsedProblem':
        return ParsedProblem.from_spec(self)


@dataclass(frozen=True)
class ParsedProblem:
    spec: ProblemSpec
    names: Tuple[str, ...]
    char: int
    relations: Tuple[Polynomial, ...]
    I: Tuple[Polynomial, ...]
    Q: Tuple[Polynomial, ...]

    @property
    def engine_kind(self) -> str:
        if not self.relations and all(g.is_monomial for g in self.I + self.Q):
            return 'monomial'
        return 'local'

    @staticmethod
    def from_spec(spec: ProblemSpec) -> 'ParsedProblem':
        names = tuple(spec.ring.vars)
        char = spec.options.prime or spec.ring.char
        relations = parse_polynomials(spec.ring.relations, names, char, 'relations')
        I = parse_polynomials(spec.ideal_I, names, char, 'ideal_I')
        Q = parse_polynomials(spec.ideal_Q, names, char, 'ideal_Q')
        problem = ParsedProblem(spec=spec, names=names, char=char, relations=tuple(relations), I=tuple(I), Q=tuple(Q))
        if problem.engine_kind == 'local' and char == 0:
            raise ProblemSpecError('The local engine needs a prime characteristic (set ring.char or --prime)')
        return problem


def _parse_lambda(lam: Union[None, str, Sequence[int]]) -> List[int]:
    if lam is None or lam == '':
        return []
    if isinstance(lam, str):
        try:
            return sorted({int(x) for x in lam.split(',') if x.strip()})
        except ValueError:
            raise ProblemSpecError(f'Expected a comma separated list of integers, found {lam!r}')
    return sorted(set(lam))


def quartic_example(m: int = 0) -> ProblemSpec:
    """Q = (X^4, Y^4, Z_1, ..., Z_m) and I = Q + (X^3*Y, X*Y^3) in k[[X, Y, Z_1, ..., Z_m]]"""
    if m < 0:
        raise ProblemSpecError(f'ex32 needs m >= 0, found {m}')
    zs = [f'Z{i}' for i in range(1, m + 1)]
    q = ['X^4', 'Y^4'] + zs
    return ProblemSpec(
        name=f'ex32_m{m}',
        ring=RingSpec(vars=['X', 'Y'] + zs, char=0, relations=[]),
        ideal_I=q + ['X^3*Y', 'X*Y^3'],
        ideal_Q=q,
    )


def small_e1_family(m: int, d: int, lam: Union[None, str, Sequence[int]] = None, prime: Optional[int] = None) -> ProblemSpec:
    """A = k[[X_1..X_m, V, Y_1..Y_d]] / ((X)(X, V) + (V^2 - X_1 Y_1 - ... - X_d Y_d)),
    Q = (Y_1, ..., Y_d) and I = Q + (X_a : a in lam) + (V)"""
    lam = _parse_lambda(lam)
    if not m >= d > 0:
        raise ProblemSpecError(f'sec5 needs m >= d > 0, found m={m}, d={d}')
    if any(a < 1 or a > m for a in lam):
        raise ProblemSpecError(f'lambda must be a subset of 1..{m}, found {lam}')
    if any(a <= d for a in lam):
        raise ProblemSpecError(f'lambda must not meet 1..{d}, found {lam}')
    xs = [f'X{i}' for i in range(1, m + 1)]
    ys = [f'Y{j}' for j in range(1, d + 1)]
    relations = [f'{xs[i]}*{xs[j]}' for i in range(m) for j in range(i, m)]
    relations += [f'{x}*V' for x in xs]
    relations.append('V^2 - ' + ' - '.join(f'{xs[i]}*{ys[i]}' for i in range(d)))
    suffix = '_'.join(str(a) for a in lam) or 'empty'
    return ProblemSpec(
        name=f'sec5_m{m}_d{d}_lambda_{suffix}',
        ring=RingSpec(vars=xs + ['V'] + ys, char=prime or Settings.prime, relations=relations),
        dimension=d,
        ideal_I=ys + [xs[a - 1] for a in lam] + ['V'],
        ideal_Q=ys,
    )


def builtin_example(name: str, m: Optional[int] = None, d: Optional[int] = None,
                    lam: Union[None, str, Sequence[int]] = None, prime: Optional[int] = None) -> ProblemSpec:
    if name == 'ex32':
        if d is not None or lam:
            raise ProblemSpecError('ex32 only takes m')
        return quartic_example(0 if m is None else m)
    elif name == 'sec5':
        if m is None or d is None:
            raise ProblemSpecError('sec5 needs both m and d')
        return small_e1_family(m, d, lam, prime)
    raise ProblemSpecError(f'Unknown example {name!r}, expected one of {", ".join(BUILTIN_EXAMPLES)}')


def load_problem(path: Union[str, Path]) -> ProblemSpec:
    path = Path(path)
    if not path.is_file():
        raise ProblemSpecError(f'Problem file {path} does not exist')
    return ProblemSpec.parse_file(path)


def print_problem(spec: ProblemSpec) -> str:
    return spec.json(indent=2)


def parse_problem(text: str) -> ProblemSpec:
    return ProblemSpec.parse_raw(text)
