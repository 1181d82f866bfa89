"""
Sparse polynomials over F_p (or over the integers when char is 0, which only the
parser and the monomial engine use).
"""
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from samuel.core.monomials import Exponents, Monomial

Term = Tuple[Exponents, int]


def graded_lex_key(exps: Exponents):
    return sum(exps), exps


@dataclass(frozen=True)
class Polynomial:
    nvars: int
    char: int
    terms: Tuple[Term, ...]

    @staticmethod
    def from_dict(nvars: int, char: int, coefficients: Dict[Exponents, int]) -> 'Polynomial':
        cleaned = {}
        for exps, c in coefficients.items():
            if len(exps) != nvars:
                raise ValueError(f'Exponent vector {exps} does not have {nvars} entries')
            if char:
                c %= char
            if c:
                cleaned[tuple(exps)] = c
        ordered = sorted(cleaned.items(), key=lambda t: graded_lex_key(t[0]), reverse=True)
        return Polynomial(nvars=nvars, char=char, terms=tuple(ordered))

    @staticmethod
    def monomial(exps: Exponents, char: int, coefficient: int = 1) -> 'Polynomial':
        return Polynomial.from_dict(len(exps), char, {tuple(exps): coefficient})

    @staticmethod
    def constant(nvars: int, char: int, value: int = 1) -> 'Polynomial':
        return Polynomial.from_dict(nvars, char, {(0,) * nvars: value})

    @staticmethod
    def variable(nvars: int, char: int, index: int) -> 'Polynomial':
        return Polynomial.monomial(tuple(int(i == index) for i in range(nvars)), char)

    def as_dict(self) -> Dict[Exponents, int]:
        return dict(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((sum(e) for e, _ in self.terms), default=-1)

    @property
    def order(self) -> int:
        """Lowest total degree of a term"""
        return min((sum(e) for e, _ in self.terms), default=-1)

    @property
    def is_homogeneous(self) -> bool:
        return len({sum(e) for e, _ in self.terms}) <= 1

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def leading_monomial(self) -> Monomial:
        return Monomial(self.terms[0][0])

    def _combine(self, other: 'Polynomial', sign: int) -> 'Polynomial':
        if (self.nvars, self.char) != (other.nvars, other.char):
            raise ValueError('Polynomials from different rings')
        coefficients = self.as_dict()
        for exps, c in other.terms:
            coefficients[exps] = coefficients.get(exps, 0) + sign * c
        return Polynomial.from_dict(self.nvars, self.char, coefficients)

    def __add__(self, other: 'Polynomial') -> 'Polynomial':
        return self._combine(other, 1)

    def __sub__(self, other: 'Polynomial') -> 'Polynomial':
        return self._combine(other, -1)

    def __neg__(self) -> 'Polynomial':
        return self.scale(-1)

    def scale(self, factor: int) -> 'Polynomial':
        return Polynomial.from_dict(self.nvars, self.char, {e: c * factor for e, c in self.terms})

    def __mul__(self, other: 'Polynomial') -> 'Polynomial':
        if (self.nvars, self.char) != (other.nvars, other.char):
            raise ValueError('Polynomials from different rings')
        coefficients: Dict[Exponents, int] = {}
        for ea, ca in self.terms:
            for eb, cb in other.terms:
                exps = tuple(x + y for x, y in zip(ea, eb))
                coefficients[exps] = coefficients.get(exps, 0) + ca * cb
        return Polynomial.from_dict(self.nvars, self.char, coefficients)

    def homogeneous_components(self) -> Dict[int, 'Polynomial']:
        parts: Dict[int, Dict[Exponents, int]] = {}
        for exps, c in self.terms:
            parts.setdefault(sum(exps), {})[exps] = c
        return {k: Polynomial.from_dict(self.nvars, self.char, v) for k, v in parts.items()}

    def to_string(self, names: Sequence[str]) -> str:
        if self.is_zero:
            return '0'
        pieces: List[str] = []
        for exps, c in self.terms:
            negative = False
            if self.char and c > self.char // 2:
                c, negative = self.char - c, True
            elif c < 0:
                c, negative = -c, True
            body = Monomial(exps).to_string(names)
            if c != 1:
                body = str(c) if body == '1' else f'{c}*{body}'
            if not pieces:
                pieces.append(f'-{body}' if negative else body)
            else:
                pieces.append(f'- {body}' if negative else f'+ {body}')
        return ' '.join(pieces)


def products(a: Iterable[Polynomial], b: Iterable[Polynomial]) -> List[Polynomial]:
    b = list(b)
    result = []
    for f in a:
        for g in b:
            h = f * g
            if not h.is_zero:
                result.append(h)
    return result
