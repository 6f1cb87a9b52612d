"""Permutation groups via deterministic base/strong-generating-set chains.

Everything here is exact: orders are arbitrary-precision integers and
membership is decided by sifting through the stabilizer chain. Base points
are always chosen as the smallest moved point, so a group built twice from
the same generator sequence is identical, byte for byte.

Internally permutations are image tables of type ``bytes`` (0-based);
the public surface speaks :class:`~cosetposets.perm.Permutation`.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterable, Sequence

from .perm import Permutation, _ID256, _inv_bytes, _mul_bytes

ENUMERATION_BOUND = 10**6


class BudgetExceededError(RuntimeError):
    """An operation needed to enumerate more elements than its budget allows."""


def _min_moved(g: bytes) -> int:
    for i, x in enumerate(g):
        if x != i:
            return i
    raise ValueError("identity has no moved point")


class _Level:
    __slots__ = ("base", "gens", "orbit")

    def __init__(self, base: int, gens: list[bytes]):
        self.base = base
        self.gens = gens
        self.orbit: dict[int, bytes] = {}

    def recompute_orbit(self, degree: int) -> None:
        ident = _ID256[:degree]
        orbit = {self.base: ident}
        queue = [self.base]
        qi = 0
        while qi < len(queue):
            p = queue[qi]
            qi += 1
            u = orbit[p]
            for s in self.gens:
                q = s[p]
                if q not in orbit:
                    orbit[q] = _mul_bytes(u, s)
                    queue.append(q)
        self.orbit = orbit


def _strip(g: bytes, levels: list[_Level], start: int) -> tuple[bytes, int]:
    for idx in range(start, len(levels)):
        lv = levels[idx]
        x = g[lv.base]
        if x == lv.base:
            continue
        u = lv.orbit.get(x)
        if u is None:
            return g, idx
        g = _mul_bytes(g, _inv_bytes(u))
    return g, len(levels)


def _chain_order(levels: list[_Level]) -> int:
    order = 1
    for lv in levels:
        order *= len(lv.orbit)
    return order


def _build_chain(raw_gens: Iterable[bytes], degree: int,
                 stop_at: int | None = None) -> list[_Level]:
    """Deterministic Schreier-Sims.

    With ``stop_at`` set, construction returns as soon as the transversal
    product reaches that value; the partial chain then certifies the order
    (the product only counts distinct elements of the generated group) but
    must not be used for membership.
    """
    ident = _ID256[:degree]
    gens: list[bytes] = []
    seen = set()
    for g in raw_gens:
        if len(g) != degree:
            raise ValueError("degree mismatch among generators")
        if g != ident and g not in seen:
            seen.add(g)
            gens.append(g)
    levels: list[_Level] = []
    if not gens:
        return levels

    base0 = min(_min_moved(g) for g in gens)
    levels.append(_Level(base0, list(gens)))
    levels[0].recompute_orbit(degree)
    if stop_at is not None and _chain_order(levels) == stop_at:
        return levels

    i = 0
    while i >= 0:
        lv = levels[i]
        added_at = -1
        for p in sorted(lv.orbit):
            u_p = lv.orbit[p]
            for s in lv.gens:
                q = s[p]
                schreier = _mul_bytes(_mul_bytes(u_p, s), _inv_bytes(lv.orbit[q]))
                if schreier == ident:
                    continue
                h, j = _strip(schreier, levels, i + 1)
                if h == ident:
                    continue
                if j == len(levels):
                    levels.append(_Level(_min_moved(h), []))
                for l in range(i + 1, j + 1):
                    levels[l].gens.append(h)
                    levels[l].recompute_orbit(degree)
                if stop_at is not None and _chain_order(levels) == stop_at:
                    return levels
                added_at = j
                break
            if added_at >= 0:
                break
        i = added_at if added_at >= 0 else i - 1
    return levels


def _generated_order(raw_gens: Iterable[bytes], degree: int,
                     stop_at: int | None = None) -> int:
    return _chain_order(_build_chain(raw_gens, degree, stop_at=stop_at))


def _closure(raw_gens: Sequence[bytes], degree: int,
             abort_above: int | None = None) -> set[bytes] | None:
    """Element set of the generated subgroup by breadth-first products.

    Returns None if the closure exceeds ``abort_above`` elements.
    """
    ident = _ID256[:degree]
    out = {ident}
    queue = [ident]
    qi = 0
    while qi < len(queue):
        x = queue[qi]
        qi += 1
        for g in raw_gens:
            y = _mul_bytes(x, g)
            if y not in out:
                if abort_above is not None and len(out) >= abort_above:
                    return None
                out.add(y)
                queue.append(y)
    return out


class PermutationGroup:
    """A finite permutation group defined by generators.

    Immutable after construction; the stabilizer chain gives exact order
    and membership.
    """

    __slots__ = ("_degree", "_gens", "_levels", "_order")

    def __init__(self, generators: Sequence[Permutation], degree: int | None = None):
        gens = list(generators)
        if degree is None:
            if not gens:
                raise ValueError("degree is required for an empty generator list")
            degree = gens[0].degree
        if any(g.degree != degree for g in gens):
            raise ValueError("degree mismatch among generators")
        self._degree = degree
        self._gens = tuple(gens)
        self._levels = _build_chain([g._b for g in gens], degree)
        self._order = _chain_order(self._levels)

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def generators(self) -> tuple[Permutation, ...]:
        return self._gens

    @property
    def order(self) -> int:
        return self._order

    @property
    def base(self) -> tuple[int, ...]:
        """Base points, 1-based."""
        return tuple(lv.base + 1 for lv in self._levels)

    @property
    def strong_generators(self) -> tuple[Permutation, ...]:
        out: list[bytes] = []
        seen = set()
        for lv in self._levels:
            for g in lv.gens:
                if g not in seen:
                    seen.add(g)
                    out.append(g)
        return tuple(Permutation._from_bytes(g) for g in out)

    @property
    def fundamental_orbit_sizes(self) -> tuple[int, ...]:
        return tuple(len(lv.orbit) for lv in self._levels)

    def contains(self, p: Permutation) -> bool:
        if p.degree != self._degree:
            raise ValueError(f"degree mismatch: {p.degree} vs {self._degree}")
        return self._contains_bytes(p._b)

    def __contains__(self, p: Permutation) -> bool:
        return self.contains(p)

    def _contains_bytes(self, b: bytes) -> bool:
        residue, _ = _strip(b, self._levels, 0)
        return residue == _ID256[: self._degree]

    def is_trivial(self) -> bool:
        return self._order == 1

    def is_subgroup_of(self, other: "PermutationGroup") -> bool:
        if self._degree != other._degree:
            raise ValueError("degree mismatch")
        return all(other._contains_bytes(g) for g in self._gens_bytes())

    def is_abelian(self) -> bool:
        gens = self._gens_bytes()
        return all(_mul_bytes(a, b) == _mul_bytes(b, a) for a in gens for b in gens)

    def _gens_bytes(self) -> list[bytes]:
        return [g._b for g in self._gens]

    def element_bytes(self) -> list[bytes]:
        """All elements as image tables, sorted; the canonical enumeration."""
        if self._order > ENUMERATION_BOUND:
            raise BudgetExceededError(
                f"group of order {self._order} exceeds the enumeration bound {ENUMERATION_BOUND}")
        elems = [_ID256[: self._degree]]
        for lv in reversed(self._levels):
            transversal = [lv.orbit[p] for p in sorted(lv.orbit)]
            elems = [_mul_bytes(e, u) for e in elems for u in transversal]
        elems.sort()
        return elems

    def elements(self) -> list[Permutation]:
        return [Permutation._from_bytes(b) for b in self.element_bytes()]

    def conjugate_by(self, g: Permutation) -> "PermutationGroup":
        """The conjugate group with generators k^g for each generator k."""
        if g.degree != self._degree:
            raise ValueError("degree mismatch")
        return PermutationGroup([k ** g for k in self._gens], self._degree)

    def sylow_subgroup(self, p: int) -> "PermutationGroup":
        return sylow_subgroup(self, p)

    def __eq__(self, other) -> bool:
        """Equality as abstract subgroups of the same symmetric group."""
        if not isinstance(other, PermutationGroup):
            return NotImplemented
        if self._degree != other._degree or self._order != other._order:
            return False
        return all(other._contains_bytes(g) for g in self._gens_bytes())

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self._gens) or "()"
        return f"<group of order {self._order} on {self._degree} points: {gens}>"


def group_from_generators(gens: Sequence[Permutation], degree: int | None = None) -> PermutationGroup:
    return PermutationGroup(gens, degree)


def generated_order(gens: Sequence[Permutation], degree: int | None = None,
                    stop_at: int | None = None) -> int:
    """Order of <gens>, stopping early once ``stop_at`` is certified.

    ``stop_at`` must be an upper bound for the generated order (typically
    the order of an ambient group containing all the generators); the
    transversal product never overshoots it, so hitting it proves equality.
    """
    if degree is None:
        if not gens:
            raise ValueError("degree is required for an empty generator list")
        degree = gens[0].degree
    return _generated_order([g._b for g in gens], degree, stop_at=stop_at)


def cyclic_group(n: int) -> PermutationGroup:
    return PermutationGroup([Permutation.from_cycles([tuple(range(1, n + 1))], n)])


def symmetric_group(n: int) -> PermutationGroup:
    if n < 2:
        return PermutationGroup([], degree=max(n, 1))
    gens = [Permutation.from_cycles([(1, 2)], n),
            Permutation.from_cycles([tuple(range(1, n + 1))], n)]
    return PermutationGroup(gens)


def alternating_group(n: int) -> PermutationGroup:
    if n < 3:
        return PermutationGroup([], degree=max(n, 1))
    if n == 3:
        return PermutationGroup([Permutation.from_cycles([(1, 2, 3)], 3)])
    three = Permutation.from_cycles([(1, 2, 3)], n)
    if n % 2 == 1:
        big = Permutation.from_cycles([tuple(range(1, n + 1))], n)
    else:
        big = Permutation.from_cycles([tuple(range(2, n + 1))], n)
    G = PermutationGroup([three, big])
    assert G.order == factorial(n) // 2
    return G


def _p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _sylow2_wreath_gens(n: int) -> list[bytes]:
    """Generators of a Sylow 2-subgroup of S_n on 0-based points.

    Dyadic blocks in decreasing size; on a block of size 2^k the generators
    are the pointwise swaps of the two halves of each initial 2^j segment,
    giving the iterated wreath product of copies of C2.
    """
    gens: list[bytes] = []
    offset = 0
    remaining = n
    while remaining:
        size = 1 << (remaining.bit_length() - 1)
        k = size.bit_length() - 1
        for j in range(1, k + 1):
            half = 1 << (j - 1)
            images = list(range(n))
            for i in range(half):
                a, b = offset + i, offset + half + i
                images[a], images[b] = images[b], images[a]
            gens.append(bytes(images))
        offset += size
        remaining -= size
    return gens


def _even_part_gens(gens: list[bytes]) -> list[bytes]:
    """Generators of the even-permutation kernel of the group they generate.

    Schreier generators of the kernel for the transversal {1, t} with t the
    first odd generator.
    """
    def sign(b: bytes) -> int:
        return Permutation._from_bytes(b).sign()

    evens = [g for g in gens if sign(g) == 1]
    odds = [g for g in gens if sign(g) == -1]
    if not odds:
        return list(gens)
    t = odds[0]
    ti = _inv_bytes(t)
    out = list(evens)
    out.extend(_mul_bytes(g, ti) for g in odds)
    out.extend(_mul_bytes(_mul_bytes(t, g), ti) for g in evens)
    out.extend(_mul_bytes(t, g) for g in odds)
    ident = _ID256[: len(t)]
    deduped: list[bytes] = []
    seen: set[bytes] = set()
    for g in out:
        if g != ident and g not in seen:
            seen.add(g)
            deduped.append(g)
    return deduped or [ident]


def sylow_subgroup(G: PermutationGroup, p: int) -> PermutationGroup:
    """One Sylow p-subgroup, deterministic for a fixed group presentation.

    Uses the explicit wreath-product construction for full symmetric and
    alternating groups at p = 2 and degree >= 9; otherwise extends a cyclic
    p-subgroup by normalizing p-elements found in the element enumeration.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    pe = _p_part(G.order, p)
    if pe == 1:
        return PermutationGroup([], degree=G.degree)
    n = G.degree
    if p == 2 and n >= 9 and G.order in (factorial(n), factorial(n) // 2):
        gens = _sylow2_wreath_gens(n)
        if G.order == factorial(n) // 2:
            gens = _even_part_gens(gens)
        P = PermutationGroup([Permutation._from_bytes(g) for g in gens], n)
        assert P.order == pe, "wreath Sylow construction produced the wrong order"
        return P
    if G.order > ENUMERATION_BOUND:
        raise BudgetExceededError(
            f"sylow_subgroup needs element enumeration; order {G.order} exceeds bound")
    elems = G.element_bytes()
    # deduplicated p-elements, in canonical order
    p_elems: list[bytes] = []
    seen = set()
    for b in elems:
        m = Permutation._from_bytes(b).order()
        mp = _p_part(m, p)
        if mp == 1:
            continue
        q = Permutation._from_bytes(b) ** (m // mp)
        if q._b not in seen:
            seen.add(q._b)
            p_elems.append(q._b)
    current_gens = [p_elems[0]]
    current_set = _closure(current_gens, n)
    while len(current_set) < pe:
        for cand in p_elems:
            if cand in current_set:
                continue
            ci = _inv_bytes(cand)
            if all(_mul_bytes(_mul_bytes(ci, g), cand) in current_set for g in current_gens):
                current_gens.append(cand)
                current_set = _closure(current_gens, n)
                break
        else:  # pragma: no cover - impossible by Sylow theory
            raise RuntimeError("failed to extend p-subgroup")
    return PermutationGroup([Permutation._from_bytes(g) for g in current_gens], n)


def direct_power(L: PermutationGroup, t: int) -> PermutationGroup:
    """The direct product of t disjoint copies of L, on t * degree points."""
    if t < 1:
        raise ValueError("t must be positive")
    n = L.degree
    gens = []
    for block in range(t):
        for g in L.generators:
            images = list(range(n * t))
            for i, x in enumerate(g._b):
                images[block * n + i] = block * n + x
            gens.append(Permutation(images))
    G = PermutationGroup(gens, n * t)
    assert G.order == L.order ** t
    return G


def embed_in_power(p: Permutation, block: int, t: int) -> Permutation:
    """p acting on the given block of a t-fold direct power, fixing the rest."""
    n = p.degree
    images = list(range(n * t))
    for i, x in enumerate(p._b):
        images[block * n + i] = block * n + x
    return Permutation(images)


def diagonal_embedding(K: PermutationGroup, t: int) -> PermutationGroup:
    """The diagonal copy {(k, ..., k)} of K inside the t-fold direct power."""
    if t < 1:
        raise ValueError("t must be positive")
    n = K.degree
    gens = []
    for g in K.generators:
        images = list(range(n * t))
        for block in range(t):
            for i, x in enumerate(g._b):
                images[block * n + i] = block * n + x
        gens.append(Permutation(images))
    G = PermutationGroup(gens, n * t)
    assert G.order == K.order
    return G


def is_normal_subgroup(G: PermutationGroup, N: PermutationGroup) -> bool:
    if N.degree != G.degree:
        raise ValueError("degree mismatch")
    if not N.is_subgroup_of(G):
        raise ValueError("N is not a subgroup of G")
    return all(N._contains_bytes(_mul_bytes(_mul_bytes(_inv_bytes(g), x), g))
               for g in G._gens_bytes() for x in N._gens_bytes())


@dataclass(frozen=True)
class QuotientRepresentation:
    """G acting on the right cosets of a normal subgroup N.

    ``group.generators[i]`` is the image of ``G.generators[i]``, and
    ``coset_reps[j]`` is an element of the coset labelled j.
    """
    group: PermutationGroup
    coset_reps: tuple[Permutation, ...]


def quotient_representation(G: PermutationGroup, N: PermutationGroup) -> QuotientRepresentation:
    """Realize G/N as a permutation group on the [G:N] cosets of N."""
    if not is_normal_subgroup(G, N):
        raise ValueError("N is not normal in G")
    index = G.order // N.order
    ident = _ID256[: G.degree]
    reps: list[bytes] = [ident]
    gens_b = G._gens_bytes()

    def coset_of(x: bytes) -> int | None:
        for j, r in enumerate(reps):
            if N._contains_bytes(_mul_bytes(x, _inv_bytes(r))):
                return j
        return None

    qi = 0
    while qi < len(reps):
        r = reps[qi]
        qi += 1
        for g in gens_b:
            x = _mul_bytes(r, g)
            if coset_of(x) is None:
                reps.append(x)
    assert len(reps) == index
    images = []
    for g in gens_b:
        img = [coset_of(_mul_bytes(r, g)) for r in reps]
        images.append(Permutation(img))
    Q = PermutationGroup(images, index)
    assert Q.order * N.order == G.order
    return QuotientRepresentation(Q, tuple(Permutation._from_bytes(r) for r in reps))


def normal_closure(G: PermutationGroup, seeds: Sequence[Permutation]) -> PermutationGroup:
    """Smallest normal subgroup of G containing the seed elements."""
    gens = [s._b for s in seeds]
    group = PermutationGroup([Permutation._from_bytes(b) for b in gens], G.degree)
    changed = True
    while changed:
        changed = False
        for g in G._gens_bytes():
            gi = _inv_bytes(g)
            for x in list(gens):
                y = _mul_bytes(_mul_bytes(gi, x), g)
                if not group._contains_bytes(y):
                    gens.append(y)
                    group = PermutationGroup([Permutation._from_bytes(b) for b in gens], G.degree)
                    changed = True
    return group


def minimal_normal_subgroups(G: PermutationGroup) -> list[PermutationGroup]:
    """All minimal nontrivial normal subgroups, via closures of cyclic subgroups."""
    if G.order <= 1:
        raise ValueError("the trivial group has no minimal normal subgroups")
    if G.order > ENUMERATION_BOUND:
        raise BudgetExceededError(
            f"minimal_normal_subgroups needs element enumeration; order {G.order} exceeds bound")
    ident = _ID256[: G.degree]
    cyclic_reps: list[bytes] = []
    seen_cyclic: set[frozenset[bytes]] = set()
    for b in G.element_bytes():
        if b == ident:
            continue
        powers = {b}
        x = b
        while True:
            x = _mul_bytes(x, b)
            if x == ident:
                break
            powers.add(x)
        key = frozenset(powers)
        if key not in seen_cyclic:
            seen_cyclic.add(key)
            cyclic_reps.append(b)
    closures: dict[frozenset[bytes], PermutationGroup] = {}
    for b in cyclic_reps:
        cl = normal_closure(G, [Permutation._from_bytes(b)])
        key = frozenset(cl.element_bytes())
        closures.setdefault(key, cl)
    keys = list(closures)
    minimal = [k for k in keys
               if not any(other < k for other in keys if other != k)]
    minimal.sort(key=lambda k: (len(k), sorted(k)))
    return [closures[k] for k in minimal]


@dataclass(frozen=True)
class SubgroupRecord:
    """A subgroup of an ambient group, as indices into its element enumeration."""
    elements: frozenset[int]
    gens: tuple[bytes, ...]
    order: int


def intermediate_subgroups(G: PermutationGroup, H: PermutationGroup) -> list[SubgroupRecord]:
    """All subgroups K with H <= K <= G.

    Breadth-first closure of {H} under single-element extensions <K, g>,
    with g ranging over representatives of the double cosets K\\G/K; any
    subgroup between H and G is reached through a chain of such extensions.
    """
    if not H.is_subgroup_of(G):
        raise ValueError("H is not a subgroup of G")
    if G.order > ENUMERATION_BOUND:
        raise BudgetExceededError(
            f"intermediate_subgroups needs element enumeration; order {G.order} exceeds bound")
    elems = G.element_bytes()
    index = {b: i for i, b in enumerate(elems)}
    n_g = len(elems)

    def record_from(gens: Sequence[bytes]) -> SubgroupRecord:
        closure = _closure(gens, G.degree, abort_above=n_g // 2)
        if closure is None:
            # index < 2 forces the whole group
            return SubgroupRecord(frozenset(range(n_g)), tuple(G._gens_bytes()), n_g)
        fs = frozenset(index[b] for b in closure)
        return SubgroupRecord(fs, tuple(gens), len(fs))

    start = record_from(tuple(g._b for g in H.generators))
    found: dict[frozenset[int], SubgroupRecord] = {start.elements: start}
    frontier = [start]
    full = frozenset(range(n_g))
    while frontier:
        rec = frontier.pop(0)
        if rec.elements == full:
            continue
        gens_b = rec.gens
        seen = bytearray(n_g)
        for i in rec.elements:
            seen[i] = 1
        for i in range(n_g):
            if seen[i]:
                continue
            # mark the double coset K g K and keep g as its representative
            stack = [elems[i]]
            seen[i] = 1
            while stack:
                x = stack.pop()
                for kb in gens_b:
                    for y in (_mul_bytes(kb, x), _mul_bytes(x, kb)):
                        j = index[y]
                        if not seen[j]:
                            seen[j] = 1
                            stack.append(y)
            new_rec = record_from(tuple(gens_b) + (elems[i],))
            if new_rec.elements not in found:
                found[new_rec.elements] = new_rec
                frontier.append(new_rec)
    out = sorted(found.values(), key=lambda r: (r.order, sorted(r.elements)))
    return out
