"""Order complexes, joins, and reduced homology over prime fields.

All complexes are augmented: the empty face sits in dimension -1, so the
one-face complex {0} (written {emptyset}) has Betti number 1 in dimension
-1 and is not acyclic. GF(2) boundary ranks run on int bitsets; odd primes
use dense rows, which only the small complexes ever need.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .posets import FinitePoset


def _as_poset(p) -> FinitePoset:
    return p.poset if hasattr(p, "poset") else p


class SimplicialComplex:
    """Faces by dimension; dimension -1 holds exactly the empty face."""

    def __init__(self, faces_by_dimension: Mapping[int, list[tuple[int, ...]]],
                 n_vertices: int):
        self.faces: dict[int, list[tuple[int, ...]]] = {-1: [()]}
        for k, faces in faces_by_dimension.items():
            if k == -1:
                continue
            if faces:
                self.faces[k] = sorted(faces)
        self.n_vertices = n_vertices

    @classmethod
    def from_faces(cls, faces, n_vertices: int | None = None) -> "SimplicialComplex":
        """Close the given faces downward; vertices are the points mentioned."""
        by_dim: dict[int, set[tuple[int, ...]]] = {}
        stack = [tuple(sorted(set(f))) for f in faces]
        seen = set(stack)
        while stack:
            f = stack.pop()
            by_dim.setdefault(len(f) - 1, set()).add(f)
            for i in range(len(f)):
                sub = f[:i] + f[i + 1:]
                if sub not in seen:
                    seen.add(sub)
                    stack.append(sub)
        if n_vertices is None:
            n_vertices = 1 + max((v for f in by_dim.get(0, ()) for v in f), default=-1)
        return cls({k: sorted(v) for k, v in by_dim.items()}, n_vertices)

    @property
    def dimension(self) -> int:
        return max(self.faces)

    def f_vector(self) -> list[int]:
        """Face counts from dimension -1 upward."""
        return [len(self.faces.get(k, ())) for k in range(-1, self.dimension + 1)]

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialComplex) and self.faces == other.faces

    def __repr__(self) -> str:
        return f"<complex f={self.f_vector()}>"


def order_complex(poset) -> SimplicialComplex:
    """All chains of a poset, as faces; the empty poset yields {emptyset}."""
    p = _as_poset(poset)
    by_dim: dict[int, list[tuple[int, ...]]] = {}
    chain: list[int] = []

    def extend(v: int) -> None:
        chain.append(v)
        by_dim.setdefault(len(chain) - 1, []).append(tuple(chain))
        for w in p.above[v]:
            extend(w)
        chain.pop()

    for v in range(p.n):
        extend(v)
    return SimplicialComplex(by_dim, p.n)


def poset_f_vector(poset) -> list[int]:
    """f-vector of the order complex, counted without materializing faces."""
    p = _as_poset(poset)
    return [1] + p.chain_counts()


def poset_reduced_euler_characteristic(poset) -> int:
    chi = 0
    for k, f in enumerate(poset_f_vector(poset)):
        chi += f if (k - 1) % 2 == 0 else -f
    return chi


def join(X: SimplicialComplex, Y: SimplicialComplex) -> SimplicialComplex:
    """Join X * Y: unions of a face of X and a (reindexed) face of Y."""
    shift = X.n_vertices
    by_dim: dict[int, list[tuple[int, ...]]] = {}
    for i, xfaces in X.faces.items():
        for j, yfaces in Y.faces.items():
            k = i + j + 1
            if k == -1:
                continue
            acc = by_dim.setdefault(k, [])
            for s in xfaces:
                for t in yfaces:
                    acc.append(s + tuple(v + shift for v in t))
    return SimplicialComplex(by_dim, X.n_vertices + Y.n_vertices)


def reduced_euler_characteristic(X: SimplicialComplex) -> int:
    """Alternating face-count sum from dimension -1: -1 + f0 - f1 + ..."""
    chi = 0
    for k, faces in X.faces.items():
        chi += len(faces) if k % 2 == 0 else -len(faces)
    return chi


def rank_gf2(rows: list[int]) -> int:
    """Rank over GF(2) of rows given as int bitsets."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            bit = (row & -row).bit_length() - 1
            pivot = pivots.get(bit)
            if pivot is None:
                pivots[bit] = row
                rank += 1
                break
            row ^= pivot
    return rank


def rank_gfp(rows: list[list[int]], p: int) -> int:
    """Rank over GF(p) by Gaussian elimination on dense rows."""
    pivots: dict[int, list[int]] = {}
    rank = 0
    for row in rows:
        row = [x % p for x in row]
        while True:
            lead = next((i for i, x in enumerate(row) if x), None)
            if lead is None:
                break
            pivot = pivots.get(lead)
            if pivot is None:
                inv = pow(row[lead], -1, p)
                pivots[lead] = [x * inv % p for x in row]
                rank += 1
                break
            c = row[lead]
            row = [(x - c * y) % p for x, y in zip(row, pivot)]
    return rank


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers over GF(prime); absent dimensions are zero."""
    prime: int
    values: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, prime: int, d: Mapping[int, int]) -> "BettiVector":
        return cls(prime, tuple(sorted((k, v) for k, v in d.items() if v)))

    def get(self, k: int) -> int:
        return dict(self.values).get(k, 0)

    def as_dict(self) -> dict[int, int]:
        return dict(self.values)

    def as_array(self) -> list[int]:
        """Betti numbers as a list indexed from dimension -1."""
        top = max((k for k, _ in self.values), default=-1)
        d = dict(self.values)
        return [d.get(k, 0) for k in range(-1, top + 1)]

    def euler(self) -> int:
        return sum(v if k % 2 == 0 else -v for k, v in self.values)

    def is_zero(self) -> bool:
        return not self.values

    def __repr__(self) -> str:
        body = ", ".join(f"b{k}={v}" for k, v in self.values) or "0"
        return f"<Betti GF({self.prime}): {body}>"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _boundary_ranks(X: SimplicialComplex, p: int) -> dict[int, int]:
    """rank of the boundary map C_k -> C_{k-1} for k = 0..dim."""
    ranks: dict[int, int] = {}
    for k in range(0, X.dimension + 1):
        faces_k = X.faces.get(k, [])
        if not faces_k:
            ranks[k] = 0
            continue
        lower_index = {f: i for i, f in enumerate(X.faces[k - 1])}
        if p == 2:
            rows = []
            for f in faces_k:
                bits = 0
                for i in range(len(f)):
                    bits |= 1 << lower_index[f[:i] + f[i + 1:]]
                rows.append(bits)
            ranks[k] = rank_gf2(rows)
        else:
            width = len(X.faces[k - 1])
            rows = []
            for f in faces_k:
                row = [0] * width
                for i in range(len(f)):
                    row[lower_index[f[:i] + f[i + 1:]]] += (-1) ** i
                rows.append(row)
            ranks[k] = rank_gfp(rows, p)
    return ranks


def reduced_betti(X: SimplicialComplex, p: int) -> BettiVector:
    """Reduced Betti numbers of the augmented chain complex over GF(p)."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    ranks = _boundary_ranks(X, p)
    out: dict[int, int] = {}
    for k in range(-1, X.dimension + 1):
        f_k = len(X.faces.get(k, ()))
        out[k] = f_k - ranks.get(k, 0) - ranks.get(k + 1, 0)
    return BettiVector.from_dict(p, out)


def is_acyclic(X: SimplicialComplex, p: int) -> bool:
    return reduced_betti(X, p).is_zero()


def kunneth_join_betti(bX: BettiVector, bY: BettiVector) -> BettiVector:
    """Betti vector of a join from the factors: convolution shifted by one."""
    if bX.prime != bY.prime:
        raise ValueError("Betti vectors over different fields")
    out: dict[int, int] = {}
    for i, a in bX.values:
        for j, b in bY.values:
            k = i + j + 1
            out[k] = out.get(k, 0) + a * b
    return BettiVector.from_dict(bX.prime, out)


def boundary_square_is_zero(X: SimplicialComplex, p: int) -> bool:
    """Check that applying the boundary twice kills every face, over GF(p)."""
    for k in range(1, X.dimension + 1):
        for f in X.faces.get(k, ()):
            acc: dict[tuple[int, ...], int] = {}
            for i in range(len(f)):
                facet = f[:i] + f[i + 1:]
                sign_i = (-1) ** i
                for j in range(len(facet)):
                    sub = facet[:j] + facet[j + 1:]
                    acc[sub] = (acc.get(sub, 0) + sign_i * (-1) ** j) % p
            if any(v % p for v in acc.values()):
                return False
    return True
