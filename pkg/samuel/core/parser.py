"""
Polynomial grammar of problem files:

    poly   := ['+' | '-'] term (('+' | '-') term)*
    term   := coeff ['*' factor ('*' factor)*] | factor ('*' factor)*
    factor := var ['^' nat]
    coeff  := nat

Whitespace is ignored and variable names are identifiers.
"""
import re
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence

from samuel.core.exceptions import PolynomialSyntaxError, UnknownVariable, ZeroPolynomialError
from samuel.core.monomials import Exponents
from samuel.core.polynomials import Polynomial

TOKEN_REGEX = re.compile(r'(?P<NAT>[0-9]+)|(?P<VAR>[A-Za-z_][A-Za-z0-9_]*)|(?P<OP>[-+*^])|(?P<SPACE>\s+)')
IDENTIFIER_REGEX = r'^[A-Za-z_][A-Za-z0-9_]*$'


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(src: str) -> Iterator[Token]:
    position = 0
    while position < len(src):
        match = TOKEN_REGEX.match(src, position)
        if not match:
            raise PolynomialSyntaxError(f'Unexpected character {src[position]!r}', position)
        if match.lastgroup != 'SPACE':
            yield Token(match.lastgroup, match.group(), position)
        position = match.end()
    yield Token('END', '', len(src))


class PolynomialParser:
    def __init__(self, src: str, names: Sequence[str], char: int):
        self.src = src
        self.index = {name: i for i, name in enumerate(names)}
        self.char = char
        self.tokens: List[Token] = list(tokenize(src))
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def accept(self, text: str) -> bool:
        if self.current.kind == 'OP' and self.current.text == text:
            self.pos += 1
            return True
        return False

    def error(self, expected: str) -> PolynomialSyntaxError:
        found = self.current.text or 'end of input'
        return PolynomialSyntaxError(f'Expected {expected}, found {found!r}', self.current.position)

    def parse(self) -> Dict[Exponents, int]:
        coefficients: Dict[Exponents, int] = {}
        sign = -1 if self.accept('-') else 1
        if sign == 1:
            self.accept('+')
        while True:
            exps, c = self.term()
            coefficients[exps] = coefficients.get(exps, 0) + sign * c
            if self.accept('+'):
                sign = 1
            elif self.accept('-'):
                sign = -1
            elif self.current.kind == 'END':
                return coefficients
            else:
                raise self.error("'+', '-' or end of input")

    def term(self):
        exps = [0] * len(self.index)
        coefficient = 1
        if self.current.kind == 'NAT':
            coefficient = int(self.current.text)
            self.pos += 1
            if not self.accept('*'):
                return tuple(exps), coefficient
        self.factor(exps)
        while self.accept('*'):
            self.factor(exps)
        return tuple(exps), coefficient

    def factor(self, exps: List[int]):
        token = self.current
        if token.kind != 'VAR':
            raise self.error('a variable')
        if token.text not in self.index:
            raise UnknownVariable(f'Unknown variable {token.text!r} at offset {token.position}')
        self.pos += 1
        power = 1
        if self.accept('^'):
            if self.current.kind != 'NAT':
                raise self.error('an exponent')
            power = int(self.current.text)
            self.pos += 1
        exps[self.index[token.text]] += power


def parse_polynomial(src: str, names: Sequence[str], char: int, allow_zero: bool = False) -> Polynomial:
    coefficients = PolynomialParser(src, names, char).parse()
    polynomial = Polynomial.from_dict(len(names), char, coefficients)
    if polynomial.is_zero and not allow_zero:
        raise ZeroPolynomialError(f'{src!r} is the zero polynomial')
    return polynomial


def parse_polynomials(sources: Sequence[str], names: Sequence[str], char: int,
                      label: Optional[str] = None) -> List[Polynomial]:
    result = []
    for src in sources:
        try:
            result.append(parse_polynomial(src, names, char))
        except PolynomialSyntaxError as e:
            if label:
                e.args = (f'{label}: {e.args[0]}',)
            raise
    return result
