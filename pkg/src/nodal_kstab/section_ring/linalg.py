"""Sparse exact linear algebra over Q.

Vectors are dicts coordinate -> Fraction holding nonzero entries only. A
``Subspace`` keeps an echelon basis where each vector is tagged with its
pivot, the largest coordinate under ``key``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

Vector = Dict[Hashable, Fraction]


def add_scaled(target: Vector, source: Vector, factor: Fraction) -> Vector:
    """target + factor*source, in place."""
    for k, c in source.items():
        value = target.get(k, Fraction(0)) + factor * c
        if value:
            target[k] = value
        else:
            target.pop(k, None)
    return target


class Subspace:
    """A subspace of a sparse coordinate space."""

    def __init__(self, vectors: Optional[Iterable[Vector]] = None, *, key: Optional[Callable] = None):
        self.key = key
        self.data: List[Tuple[Vector, Hashable]] = []
        if vectors is not None:
            self.add_vectors(vectors)

    def _pivot(self, v: Vector) -> Hashable:
        return max(v, key=self.key) if self.key else max(v)

    def residue(self, vector: Vector) -> Vector:
        """vector mod self."""
        v = {k: Fraction(c) for k, c in vector.items() if c}
        for basis_vector, pivot in self.data:
            c = v.get(pivot)
            if c:
                add_scaled(v, basis_vector, -c / basis_vector[pivot])
        return v

    def add_vector(self, vector: Vector) -> bool:
        """Add a vector; True when it enlarged the span."""
        v = self.residue(vector)
        if not v:
            return False
        self.data.append((v, self._pivot(v)))
        return True

    def add_vectors(self, vectors: Iterable[Vector]) -> List[int]:
        """Add vectors and return the indices of those that enlarged the span."""
        return [i for i, v in enumerate(vectors) if self.add_vector(v)]

    def basis(self) -> List[Vector]:
        return [dict(v) for v, _ in self.data]

    @property
    def dim(self) -> int:
        return len(self.data)

    def copy(self) -> "Subspace":
        other = Subspace(key=self.key)
        other.data = [(dict(v), p) for v, p in self.data]
        return other

    def __contains__(self, vector: Vector) -> bool:
        return not self.residue(vector)

    def __le__(self, other: "Subspace") -> bool:
        """Return if self is a subspace of other."""
        return all(v in other for v, _ in self.data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.dim == other.dim and self <= other

    def __add__(self, other: "Subspace") -> "Subspace":
        result = self.copy()
        result.add_vectors(other.basis())
        return result

    def intersection(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: echelonize (u, u) and (w, 0); rows pivoting on the right half span the meet."""
        doubled = Subspace(key=_left_first(self.key))
        for u in self.basis():
            row = {(1, k): c for k, c in u.items()}
            row.update({(0, k): c for k, c in u.items()})
            doubled.add_vector(row)
        for w in other.basis():
            doubled.add_vector({(1, k): c for k, c in w.items()})
        meet = Subspace(key=self.key)
        for v, pivot in doubled.data:
            if pivot[0] == 0:
                meet.add_vector({k: c for (side, k), c in v.items()})
        return meet

    def complement_in(self, ambient: Iterable[Vector]) -> List[Vector]:
        """Vectors of ``ambient`` extending a basis of self to a basis of their joint span."""
        work = self.copy()
        return [dict(v) for v in ambient if work.add_vector(v)]


def _left_first(key: Optional[Callable]) -> Callable:
    if key is None:
        return lambda tagged: (tagged[0], tagged[1])
    return lambda tagged: (tagged[0], key(tagged[1]))


def rank(vectors: Iterable[Vector], key: Optional[Callable] = None) -> int:
    return Subspace(vectors, key=key).dim


def nullspace(rows: Sequence[Vector], columns: Sequence[Hashable]) -> List[Vector]:
    """Basis of {x : sum_c row[c] * x[c] = 0 for every row}, by reduced row echelon form."""
    position = {c: i for i, c in enumerate(columns)}
    reduced: List[Vector] = []
    pivots: List[Hashable] = []
    for row in rows:
        r = {c: Fraction(v) for c, v in row.items() if v}
        for pr, pc in zip(reduced, pivots):
            c = r.get(pc)
            if c:
                add_scaled(r, pr, -c)
        if not r:
            continue
        pc = min(r, key=position.__getitem__)
        inv = 1 / r[pc]
        r = {c: v * inv for c, v in r.items()}
        for pr in reduced:
            c = pr.get(pc)
            if c:
                add_scaled(pr, r, -c)
        reduced.append(r)
        pivots.append(pc)

    pivot_set = set(pivots)
    basis = []
    for free in columns:
        if free in pivot_set:
            continue
        vector: Vector = {free: Fraction(1)}
        for pr, pc in zip(reduced, pivots):
            c = pr.get(free)
            if c:
                vector[pc] = -c
        basis.append(vector)
    return basis
