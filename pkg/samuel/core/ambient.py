"""
Truncated coordinate spaces for A = U/a over F_p.

Two ambients share one interface:

- GradedAmbient: used when the relations and every generator are homogeneous. A is
  built degree by degree, A_k presented as U_1 ⊗ A_{k-1} modulo the commutation rows
  and the lifted relations of degree k. Each degree is one block and multiplication by
  a variable maps block k-1 to block k.
- DenseAmbient: one block over the standard monomials of degree < N, for relations of any
  kind. A DenseQuotient, shared by every order, echelonizes the relations in the local order
  and gives normal forms of monomials.
"""
import heapq
import itertools
import logging
from abc import ABC, abstractmethod
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from samuel.core.linalg import matmul_mod, reduce_vectors, rref
from samuel.core.monomials import Exponents
from samuel.core.polynomials import Polynomial


def _add_unit(exps: Exponents, i: int, amount: int = 1) -> Exponents:
    return exps[:i] + (exps[i] + amount,) + exps[i + 1:]


class GradedAlgebra:
    """Standard monomial bases and multiplication maps of U/a for homogeneous relations"""

    def __init__(self, nvars: int, p: int, relations: Sequence[Polynomial]):
        self.nvars = nvars
        self.p = p
        self._relations_by_degree: Dict[int, List[Polynomial]] = {}
        for g in relations:
            if not g.is_homogeneous:
                raise ValueError('GradedAlgebra needs homogeneous relations')
            if g.degree == 0:
                raise ValueError('A nonzero constant relation presents the zero ring')
            self._relations_by_degree.setdefault(g.degree, []).append(g)
        one = (0,) * nvars
        self.basis: List[List[Exponents]] = [[one]]
        # mult[k][i] maps A_{k-1} coordinates to A_k coordinates
        self.mult: List[List[np.ndarray]] = [[]]
        self._normal_forms: Dict[Exponents, np.ndarray] = {one: np.ones(1, dtype=np.int64)}

    @property
    def top(self) -> int:
        return len(self.basis) - 1

    def extend_to(self, degree: int):
        while self.top < degree:
            self._build_next()

    def dim(self, degree: int) -> int:
        self.extend_to(degree)
        return len(self.basis[degree])

    def _lift(self, g: Polynomial, k: int, width: int, h: int) -> np.ndarray:
        row = np.zeros(width, dtype=np.int64)
        for exps, c in g.terms:
            i = next(v for v, e in enumerate(exps) if e)
            row[i * h:(i + 1) * h] += c * self.normal_form(_add_unit(exps, i, -1))
        return row % self.p

    def _build_next(self):
        k = self.top + 1
        n, p = self.nvars, self.p
        previous = self.basis[k - 1]
        h = len(previous)
        width = n * h
        blocks = []
        if k >= 2:
            h2 = len(self.basis[k - 2])
            for i in range(n):
                for j in range(i + 1, n):
                    block = np.zeros((h2, width), dtype=np.int64)
                    block[:, i * h:(i + 1) * h] = self.mult[k - 1][j]
                    block[:, j * h:(j + 1) * h] = (-self.mult[k - 1][i]) % p
                    blocks.append(block)
        for g in self._relations_by_degree.get(k, []):
            blocks.append(self._lift(g, k, width, h)[None, :])
        kernel = np.vstack(blocks) if blocks else np.zeros((0, width), dtype=np.int64)
        R, pivots = rref(kernel, p)
        pivot_set = set(pivots)
        free = [c for c in range(width) if c not in pivot_set]
        images = np.zeros((width, len(free)), dtype=np.int64)
        images[free, np.arange(len(free))] = 1
        if pivots:
            images[pivots] = (-R[:, free]) % p
        self.basis.append([_add_unit(previous[c % h], c // h) for c in free])
        self.mult.append([images[i * h:(i + 1) * h] for i in range(n)])
        logging.debug(f'Graded quotient: degree {k} has dimension {len(free)}')

    def normal_form(self, exps: Exponents) -> np.ndarray:
        """Coordinates of the monomial x^exps in the standard basis of its degree"""
        if exps in self._normal_forms:
            return self._normal_forms[exps]
        k = sum(exps)
        self.extend_to(k)
        i = next(v for v, e in enumerate(exps) if e)
        vector = matmul_mod(self.normal_form(_add_unit(exps, i, -1))[None, :], self.mult[k][i], self.p)[0]
        self._normal_forms[exps] = vector
        return vector


class Ambient(ABC):
    """A truncated coordinate space split into blocks"""
    p: int
    order: int
    nvars: int

    @property
    @abstractmethod
    def block_sizes(self) -> List[int]:
        pass

    @abstractmethod
    def labels(self, block: int) -> List[Exponents]:
        """Monomial attached to each coordinate of a block"""
        pass

    @abstractmethod
    def vectors(self, f: Polynomial) -> Dict[int, np.ndarray]:
        """Coordinates of f truncated at the order, per block (blocks where f vanishes omitted)"""
        pass

    @abstractmethod
    def multiply_rows(self, block: int, rows: np.ndarray, f: Polynomial) -> Dict[int, np.ndarray]:
        """Images of the rows of a block under multiplication by f, per target block"""
        pass

    @abstractmethod
    def shifted(self, block: int, rows: np.ndarray) -> Dict[int, np.ndarray]:
        """Products of the rows of a block with every variable, stacked per target block"""
        pass

    @abstractmethod
    def close(self, spans: List[np.ndarray]) -> List[Tuple[np.ndarray, List[int]]]:
        """Echelonized closure of per-block spans under multiplication by the variables"""
        pass

    @abstractmethod
    def certificate(self, blocks: List[Tuple[np.ndarray, List[int]]]) -> bool:
        """Nakayama test: the span contains every monomial of degree order - 1"""
        pass

    @property
    def dimension(self) -> int:
        return sum(self.block_sizes)

    def empty_spans(self) -> List[np.ndarray]:
        return [np.zeros((0, size), dtype=np.int64) for size in self.block_sizes]

    def polynomial(self, block: int, vector: np.ndarray) -> Polynomial:
        labels = self.labels(block)
        return Polynomial.from_dict(self.nvars, self.p, {labels[c]: int(vector[c]) for c in np.flatnonzero(vector)})


class GradedAmbient(Ambient):
    def __init__(self, algebra: GradedAlgebra, order: int):
        self.algebra = algebra
        self.p = algebra.p
        self.nvars = algebra.nvars
        self.order = order
        algebra.extend_to(order - 1)

    @property
    def block_sizes(self) -> List[int]:
        return [len(self.algebra.basis[k]) for k in range(self.order)]

    def labels(self, block: int) -> List[Exponents]:
        return self.algebra.basis[block]

    def vectors(self, f: Polynomial) -> Dict[int, np.ndarray]:
        result: Dict[int, np.ndarray] = {}
        for exps, c in f.terms:
            k = sum(exps)
            if k >= self.order:
                continue
            vector = (c * self.algebra.normal_form(exps)) % self.p
            result[k] = (result[k] + vector) % self.p if k in result else vector
        return result

    def _apply_monomial(self, block: int, rows: np.ndarray, exps: Exponents) -> Optional[np.ndarray]:
        k = block
        for i, e in enumerate(exps):
            for _ in range(e):
                k += 1
                if k >= self.order:
                    return None
                rows = matmul_mod(rows, self.algebra.mult[k][i], self.p)
        return rows

    def multiply_rows(self, block: int, rows: np.ndarray, f: Polynomial) -> Dict[int, np.ndarray]:
        result: Dict[int, np.ndarray] = {}
        for exps, c in f.terms:
            image = self._apply_monomial(block, rows, exps)
            if image is None:
                continue
            target = block + sum(exps)
            image = (c * image) % self.p
            result[target] = (result[target] + image) % self.p if target in result else image
        return result

    def shifted(self, block: int, rows: np.ndarray) -> Dict[int, np.ndarray]:
        if block + 1 >= self.order or len(rows) == 0:
            return {}
        mult = self.algebra.mult[block + 1]
        return {block + 1: np.vstack([matmul_mod(rows, mult[i], self.p) for i in range(self.nvars)])}

    def close(self, spans: List[np.ndarray]) -> List[Tuple[np.ndarray, List[int]]]:
        closed: List[Tuple[np.ndarray, List[int]]] = []
        for k in range(self.order):
            pieces = [spans[k]]
            if k > 0:
                pieces.extend(self.shifted(k - 1, closed[k - 1][0]).values())
            closed.append(rref(np.vstack(pieces), self.p))
        return closed

    def certificate(self, blocks: List[Tuple[np.ndarray, List[int]]]) -> bool:
        top = self.order - 1
        return len(blocks[top][1]) == self.block_sizes[top]


class DenseQuotient:
    """Echelon of the relations of U/a over the monomials of degree < order.

    Columns run through the monomials in graded-lex ascending order and every row pivots on
    its lowest column, so the columns of order N are a prefix of those of any higher order and
    dropping the later columns gives the echelon at order N. Homogeneous relations extend one
    degree at a time; otherwise a higher order rebuilds the rows, whose tails were cut.
    """

    def __init__(self, nvars: int, p: int, relations: Sequence[Polynomial]):
        self.nvars = nvars
        self.p = p
        self.relations = list(relations)
        self.homogeneous = all(g.is_homogeneous for g in self.relations)
        self.order = 0
        self.monomials: List[Exponents] = []
        self.index: Dict[Exponents, int] = {}
        # offsets[k] is the number of monomials of degree < k
        self.offsets = [0]
        self.pivots: Dict[int, Dict[int, int]] = {}

    def extend_to(self, order: int):
        if order <= self.order:
            return
        start = self.order if self.homogeneous else 0
        if start == 0:
            self.pivots = {}
        self._enumerate(order)
        self.order = order
        for k in range(start, order):
            for g in self.relations:
                if g.order > k:
                    continue
                du = k - g.order
                for u in self.monomials[self.offsets[du]:self.offsets[du + 1]]:
                    self._insert(self._row(g, u, order))
        logging.debug(f'Dense quotient: order {order}, {len(self.pivots)} of {self.offsets[order]} monomials reduce')

    def _enumerate(self, order: int):
        for degree in range(len(self.offsets) - 1, order):
            layer = []
            for combo in itertools.combinations_with_replacement(range(self.nvars), degree):
                exps = [0] * self.nvars
                for v in combo:
                    exps[v] += 1
                layer.append(tuple(exps))
            for exps in sorted(layer):
                self.index[exps] = len(self.monomials)
                self.monomials.append(exps)
            self.offsets.append(len(self.monomials))

    def _row(self, g: Polynomial, u: Exponents, order: int) -> Dict[int, int]:
        row = {}
        for exps, c in g.terms:
            target = tuple(a + b for a, b in zip(u, exps))
            if sum(target) < order and c % self.p:
                row[self.index[target]] = c % self.p
        return row

    def _subtract(self, row: Dict[int, int], pivot: Dict[int, int], factor: int, limit: int) -> List[int]:
        """row -= factor * pivot on the columns below limit; returns the columns that appeared"""
        appeared = []
        for c, v in pivot.items():
            if c >= limit:
                continue
            if c not in row:
                appeared.append(c)
            value = (row.get(c, 0) - factor * v) % self.p
            if value:
                row[c] = value
            else:
                row.pop(c, None)
        return appeared

    def _insert(self, row: Dict[int, int]):
        while row:
            lead = min(row)
            pivot = self.pivots.get(lead)
            if pivot is None:
                inverse = pow(row[lead], self.p - 2, self.p)
                self.pivots[lead] = {c: v * inverse % self.p for c, v in row.items()}
                return
            self._subtract(row, pivot, row[lead], self.order)

    def normal_form(self, row: Dict[int, int], limit: int) -> Dict[int, int]:
        """Reduces a sparse row on the columns below limit until no pivot column is left"""
        row = {c: v % self.p for c, v in row.items() if c < limit and v % self.p}
        pending = list(row)
        heapq.heapify(pending)
        while pending:
            c = heapq.heappop(pending)
            if c not in row or c not in self.pivots:
                continue
            for added in self._subtract(row, self.pivots[c], row[c], limit):
                heapq.heappush(pending, added)
        return row

    def standard(self, limit: int) -> List[int]:
        return [c for c in range(limit) if c not in self.pivots]


class DenseAmbient(Ambient):
    """One block over the standard monomials of U/a below the order, for any relations"""

    def __init__(self, quotient: DenseQuotient, order: int):
        quotient.extend_to(order)
        self.quotient = quotient
        self.p = quotient.p
        self.nvars = quotient.nvars
        self.order = order
        self._limit = quotient.offsets[order]
        columns = quotient.standard(self._limit)
        self.monomials: List[Exponents] = [quotient.monomials[c] for c in columns]
        self._position = {c: i for i, c in enumerate(columns)}
        self._degrees = np.array([sum(m) for m in self.monomials], dtype=np.int64)
        self.mult = [self._multiplication(i) for i in range(self.nvars)]

    def _coordinates(self, row: Dict[int, int]) -> np.ndarray:
        vector = np.zeros(len(self.monomials), dtype=np.int64)
        for c, v in self.quotient.normal_form(row, self._limit).items():
            vector[self._position[c]] = v
        return vector

    def _multiplication(self, i: int) -> np.ndarray:
        size = len(self.monomials)
        matrix = np.zeros((size, size), dtype=np.int64)
        for s, exps in enumerate(self.monomials):
            target = self.quotient.index.get(_add_unit(exps, i))
            if target is not None and target < self._limit:
                matrix[s] = self._coordinates({target: 1})
        return matrix

    @property
    def block_sizes(self) -> List[int]:
        return [len(self.monomials)]

    def labels(self, block: int) -> List[Exponents]:
        return self.monomials

    def vectors(self, f: Polynomial) -> Dict[int, np.ndarray]:
        row = {}
        for exps, c in f.terms:
            target = self.quotient.index.get(exps)
            if target is not None and target < self._limit:
                row[target] = c
        vector = self._coordinates(row)
        return {0: vector} if vector.any() else {}

    def _apply_monomial(self, rows: np.ndarray, exps: Exponents) -> np.ndarray:
        if sum(exps) >= self.order:
            return np.zeros_like(rows)
        for i, e in enumerate(exps):
            for _ in range(e):
                rows = matmul_mod(rows, self.mult[i], self.p)
        return rows

    def multiply_rows(self, block: int, rows: np.ndarray, f: Polynomial) -> Dict[int, np.ndarray]:
        image = np.zeros_like(rows)
        for exps, c in f.terms:
            image = (image + c * self._apply_monomial(rows, exps)) % self.p
        return {0: image}

    def shifted(self, block: int, rows: np.ndarray) -> Dict[int, np.ndarray]:
        if len(rows) == 0:
            return {}
        return {0: np.vstack([matmul_mod(rows, m, self.p) for m in self.mult])}

    def close(self, spans: List[np.ndarray]) -> List[Tuple[np.ndarray, List[int]]]:
        R, pivots = rref(spans[0], self.p)
        # Only rows added in the last round still need their shifts
        frontier = R
        while len(frontier):
            images = self.shifted(0, frontier)[0]
            frontier, _ = rref(reduce_vectors(images, R, pivots, self.p), self.p)
            if len(frontier):
                R, pivots = rref(np.vstack([R, frontier]), self.p)
        return [(R, pivots)]

    def certificate(self, blocks: List[Tuple[np.ndarray, List[int]]]) -> bool:
        top_columns = np.flatnonzero(self._degrees == self.order - 1)
        return set(top_columns.tolist()) <= set(blocks[0][1])
