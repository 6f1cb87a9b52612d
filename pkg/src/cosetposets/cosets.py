"""Coset posets C(G) and relative coset posets C(G, N), with group actions.

Vertices are right cosets Hx of proper subgroups, keyed by the lattice
index of H and the minimal element id of the coset. Hx <= Ky holds iff
H <= K in the lattice and x y^-1 lies in K; both tests are index lookups.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import PermutationGroup
from .lattice import SubgroupLattice
from .perm import Permutation, cycle_string
from .posets import FinitePoset


@dataclass(frozen=True)
class OvergroupAutomorphism:
    """An automorphism of `group` realized as conjugation inside an overgroup."""
    group: PermutationGroup
    overgroup: PermutationGroup
    conjugator: Permutation

    def __post_init__(self):
        if not self.group.is_subgroup_of(self.overgroup):
            raise ValueError("group is not inside the overgroup")
        if self.conjugator not in self.overgroup:
            raise ValueError("conjugator is not in the overgroup")
        for g in self.group.generators:
            if g ** self.conjugator not in self.group:
                raise ValueError("conjugator does not normalize the group")

    def apply(self, p: Permutation) -> Permutation:
        return p ** self.conjugator

    def fixes_group_elementwise(self) -> bool:
        return all(self.apply(g) == g for g in self.group.generators)

    def squares_to_identity(self) -> bool:
        return all(self.apply(self.apply(g)) == g for g in self.group.generators)


@dataclass(frozen=True)
class ActionTriple:
    """(g, h, alpha): maps Hx to (g^-1 H x h)^alpha."""
    left: Permutation | None = None
    right: Permutation | None = None
    automorphism: OvergroupAutomorphism | None = None


@dataclass(frozen=True)
class ActionGroup:
    """Generators of a group acting on a coset poset.

    Fixed-point scans only consult the generators; callers assert that the
    generated set is closed (see the structural checks in the a7 module).
    """
    generators: tuple[ActionTriple, ...]


class CosetPoset:
    """Cosets Hx of the included proper subgroups, ordered by inclusion."""

    def __init__(self, lattice: SubgroupLattice, subgroup_ids: list[int],
                 normal_subgroup_id: int | None = None):
        self.lattice = lattice
        self.subgroup_ids = tuple(sorted(subgroup_ids))
        self.normal_subgroup_id = normal_subgroup_id
        lat = lattice
        n = len(lat.elements)
        self.coset_rep: dict[int, list[int]] = {}
        for hi in self.subgroup_ids:
            members = sorted(lat.subgroups[hi].elements)
            rep = [-1] * n
            for x in range(n):
                if rep[x] == -1:
                    coset = [lat.mul[h][x] for h in members]
                    r = min(coset)
                    for m in coset:
                        rep[m] = r
            self.coset_rep[hi] = rep
        self.vertices: list[tuple[int, int]] = []
        for hi in self.subgroup_ids:
            rep = self.coset_rep[hi]
            self.vertices.extend((hi, x) for x in range(n) if rep[x] == x)
        self.vertex_index = {v: i for i, v in enumerate(self.vertices)}
        included = set(self.subgroup_ids)
        pairs = []
        for kj in self.subgroup_ids:
            smaller = [hi for hi in lat.below[kj] if hi in included]
            rep_k = self.coset_rep[kj]
            for hi in smaller:
                rep_h = self.coset_rep[hi]
                for x in range(n):
                    if rep_h[x] == x:
                        pairs.append((self.vertex_index[(hi, x)],
                                      self.vertex_index[(kj, rep_k[x])]))
        self.poset = FinitePoset(len(self.vertices), pairs)

    @property
    def group(self) -> PermutationGroup:
        return self.lattice.group

    def __len__(self) -> int:
        return len(self.vertices)

    def vertex_label(self, v: int) -> str:
        hi, r = self.vertices[v]
        rep = Permutation._from_bytes(self.lattice.elements[r])
        return f"{self.lattice.subgroups[hi].order}:{cycle_string(rep)}"

    def is_antichain(self) -> bool:
        return self.poset.is_antichain()

    def dump(self) -> str:
        """One vertex per line, then cover pairs; stable ordering."""
        lines = [self.vertex_label(v) for v in range(len(self.vertices))]
        lines.append("--covers--")
        lines.extend(f"{u}<{v}" for u, v in self.poset.cover_pairs())
        return "\n".join(lines) + "\n"


def build_coset_poset(G: PermutationGroup, lat: SubgroupLattice) -> CosetPoset:
    """The poset of all cosets of all proper subgroups of G."""
    if lat.group is not G and not (lat.group == G):
        raise ValueError("lattice does not belong to the given group")
    proper = [i for i in range(len(lat.subgroups)) if i != lat.index_of_parent]
    return CosetPoset(lat, proper)


def _normal_in_parent(lat: SubgroupLattice, ni: int) -> bool:
    fs = lat.subgroups[ni].elements
    gen_ids = [lat.index[g._b] for g in lat.group.generators]
    return all(lat.conj_element(x, g) in fs for g in gen_ids for x in fs)


def build_relative_poset(G: PermutationGroup, N: PermutationGroup,
                         lat: SubgroupLattice) -> CosetPoset:
    """C(G, N): cosets Hx of proper subgroups with HN = G, for N normal in G."""
    if lat.group is not G and not (lat.group == G):
        raise ValueError("lattice does not belong to the given group")
    ni = lat.find(N)
    if not _normal_in_parent(lat, ni):
        raise ValueError("N is not normal in G")
    n_fs = lat.subgroups[ni].elements
    total = len(lat.elements)
    ids = []
    for i in range(len(lat.subgroups)):
        if i == lat.index_of_parent:
            continue
        h_fs = lat.subgroups[i].elements
        product_size = len(h_fs) * len(n_fs) // len(h_fs & n_fs)
        if product_size == total:
            ids.append(i)
    return CosetPoset(lat, ids, normal_subgroup_id=ni)


def _subgroup_ids_of(lat: SubgroupLattice, H: PermutationGroup) -> frozenset[int]:
    return frozenset(lat.index[b] for b in H.element_bytes())


def translation_fixed_points(poset: CosetPoset, P: PermutationGroup,
                             K: PermutationGroup) -> list[int]:
    """Vertices Hx fixed by P x K acting by left and right translation.

    Uses the containment criterion: Hx is fixed iff <P, K^(x^-1)> <= H.
    """
    lat = poset.lattice
    if not P.is_subgroup_of(lat.group) or not K.is_subgroup_of(lat.group):
        raise ValueError("P and K must be subgroups of the poset's group")
    p_fs = _subgroup_ids_of(lat, P)
    k_gens = [lat.index[g._b] for g in K.generators]
    contains_p = {hi: p_fs <= lat.subgroups[hi].elements for hi in poset.subgroup_ids}
    out = []
    for v, (hi, r) in enumerate(poset.vertices):
        if not contains_p[hi]:
            continue
        h_fs = lat.subgroups[hi].elements
        ri = lat.inv[r]
        # K^(x^-1) = x K x^-1
        if all(lat.mul[lat.mul[r][k]][ri] in h_fs for k in k_gens):
            out.append(v)
    return out


def translation_action_group(P: PermutationGroup, K: PermutationGroup) -> ActionGroup:
    triples = [ActionTriple(left=g) for g in P.generators]
    triples += [ActionTriple(right=g) for g in K.generators]
    return ActionGroup(tuple(triples))


def action_fixed_points(poset: CosetPoset, action: ActionGroup) -> list[int]:
    """Vertices fixed by every generator of the action.

    Raises ValueError if some generator does not map the poset to itself.
    """
    fixed = list(range(len(poset.vertices)))
    for triple in action.generators:
        mapping = vertex_action_map(poset, triple)
        fixed = [v for v in fixed if mapping[v] == v]
    return fixed


def vertex_action_map(poset: CosetPoset, triple: ActionTriple) -> list[int]:
    """Image vertex of each vertex under one action triple."""
    lat = poset.lattice
    n = len(lat.elements)
    g = triple.left
    h = triple.right
    gi = lat.index[g._b] if g is not None else 0
    hi_id = lat.index[h._b] if h is not None else 0
    g_inv = lat.inv[gi]
    if triple.automorphism is not None:
        conj = triple.automorphism.conjugator
        alpha = []
        for b in lat.elements:
            img = Permutation._from_bytes(b) ** conj
            j = lat.index.get(img._b)
            if j is None:
                raise ValueError("automorphism does not preserve the group")
            alpha.append(j)
    else:
        alpha = None

    def elem_map(x: int) -> int:
        y = lat.mul[lat.mul[g_inv][x]][hi_id]
        return alpha[y] if alpha is not None else y

    def subgroup_conj(x: int) -> int:
        y = lat.mul[lat.mul[g_inv][x]][gi]
        return alpha[y] if alpha is not None else y

    sub_image: dict[int, int] = {}
    for si in poset.subgroup_ids:
        fs = frozenset(subgroup_conj(x) for x in lat.subgroups[si].elements)
        target = lat.subgroup_index[fs]
        if target not in poset.coset_rep:
            raise ValueError("action does not preserve the poset")
        sub_image[si] = target

    out = []
    for (si, r) in poset.vertices:
        ti = sub_image[si]
        out.append(poset.vertex_index[(ti, poset.coset_rep[ti][elem_map(r)])])
    return out


def is_antichain(poset: CosetPoset) -> bool:
    return poset.is_antichain()
