"""The generation-probability Dirichlet polynomial of a finite group.

P(s) = sum over subgroups H of mu(H, G) [G:H]^(-s). At a positive integer
k this is the probability that k uniform random elements generate G; the
value at -1 is minus the reduced Euler characteristic of the coset poset's
order complex. Everything here is exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .groups import BudgetExceededError, PermutationGroup, _generated_order
from .lattice import MoebiusTable, SubgroupLattice
from .perm import _mul_bytes, _ID256

TUPLE_BUDGET = 10**7


@dataclass(frozen=True)
class DirichletPolynomial:
    """sum of a_n * n^(-s), stored as sorted (n, a_n) pairs with a_n != 0."""
    coefficients: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, d) -> "DirichletPolynomial":
        return cls(tuple(sorted((n, a) for n, a in d.items() if a)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.coefficients)

    def evaluate(self, k: int) -> Fraction:
        """Exact value at integer s = k; negative k makes n^(-k) an integer."""
        total = Fraction(0)
        for n, a in self.coefficients:
            if k >= 0:
                total += Fraction(a, n**k)
            else:
                total += Fraction(a * n**(-k))
        return total

    def __repr__(self) -> str:
        body = " + ".join(f"{a}*{n}^-s" for n, a in self.coefficients)
        return f"<DirichletPolynomial {body}>"


def hall_polynomial(lat: SubgroupLattice, mu: MoebiusTable) -> DirichletPolynomial:
    """a_n = sum of mu(H, G) over subgroups of index n."""
    if mu.lattice is not lat:
        raise ValueError("Moebius table does not belong to the lattice")
    coeffs: dict[int, int] = {}
    for i, entry in enumerate(lat.subgroups):
        n = lat.group.order // entry.order
        coeffs[n] = coeffs.get(n, 0) + mu[i]
    return DirichletPolynomial.from_dict(coeffs)


def evaluate(poly: DirichletPolynomial, k: int) -> Fraction:
    return poly.evaluate(k)


def brute_force_generation_probability(G: PermutationGroup, k: int,
                                       budget: int = TUPLE_BUDGET) -> Fraction:
    """Exact generating-tuple count over all |G|^k tuples.

    Independent of the subgroup lattice: the generation test is a
    stabilizer-chain order computation, memoized on the set of cyclic
    subgroups spanned by the tuple.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if G.order**k > budget:
        raise BudgetExceededError(
            f"|G|^k = {G.order**k} exceeds the tuple budget {budget}")
    elems = G.element_bytes()
    n = len(elems)
    degree = G.degree
    ident = _ID256[:degree]
    cyc_ids: list[int] = []
    cyc_rep: list[bytes] = []
    cyc_key: dict[frozenset[bytes], int] = {}
    for b in elems:
        powers = {b}
        x = b
        while x != ident:
            x = _mul_bytes(x, b)
            powers.add(x)
        key = frozenset(powers)
        cid = cyc_key.get(key)
        if cid is None:
            cid = len(cyc_key)
            cyc_key[key] = cid
            cyc_rep.append(b)
        cyc_ids.append(cid)
    memo: dict[frozenset[int], bool] = {}
    count = 0
    for tup in product(range(n), repeat=k):
        key = frozenset(cyc_ids[i] for i in tup)
        hit = memo.get(key)
        if hit is None:
            gens = [cyc_rep[c] for c in key]
            hit = _generated_order(gens, degree, stop_at=G.order) == G.order
            memo[key] = hit
        if hit:
            count += 1
    return Fraction(count, n**k)


def poset_moebius_hat(poset) -> int:
    """mu(0-hat, 1-hat) of the poset extended by a minimum and a maximum."""
    p = poset.poset if hasattr(poset, "poset") else poset
    return p.moebius_bottom_to_top()
