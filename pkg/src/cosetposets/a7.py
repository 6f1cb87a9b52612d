"""Structure of A_7 around a Sylow 2-subgroup, and fixed-point scans.

A_7 is the one alternating group where a cyclic subgroup generated by a
long cycle fails to universally 2-generate: two conjugacy classes of
index-15 subgroups contain both a Sylow 2-subgroup and a 7-cycle.
Conjugation by (1,2)(3,4)(5,6) inside S_7 swaps the two classes, which is
what makes the fixed-point set of the extended action empty. Everything
here is computed on explicit element sets; the coset posets of A_7 and S_7
are far too large to materialize, so fixed cosets are found through the
containment criterion applied to the overgroups of the fixed Sylow
2-subgroup.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .complexes import order_complex, reduced_betti
from .cosets import (
    ActionGroup,
    ActionTriple,
    OvergroupAutomorphism,
    build_relative_poset,
)
from .groups import (
    PermutationGroup,
    SubgroupRecord,
    alternating_group,
    diagonal_embedding,
    embed_in_power,
    generated_order,
    intermediate_subgroups,
    is_normal_subgroup,
    minimal_normal_subgroups,
    symmetric_group,
    sylow_subgroup,
)
from .lattice import enumerate_subgroups
from .perm import Permutation, _inv_bytes, _mul_bytes, cycle_string, parse_permutation


@dataclass(frozen=True)
class A7Environment:
    A7: PermutationGroup
    S7: PermutationGroup
    P: PermutationGroup            # Sylow 2-subgroup of A_7, normalized by phi
    seven_cycle: Permutation       # generates a Sylow 7-subgroup normalized by phi
    phi: OvergroupAutomorphism     # conjugation by (1,2)(3,4)(5,6) in S_7

    @property
    def K(self) -> PermutationGroup:
        return PermutationGroup([self.seven_cycle], 7)


def _conjugate_set(elems: frozenset[bytes], g: bytes) -> frozenset[bytes]:
    gi = _inv_bytes(g)
    return frozenset(_mul_bytes(_mul_bytes(gi, x), g) for x in elems)


@lru_cache(maxsize=1)
def build_environment() -> A7Environment:
    """Fixed Sylow 2- and 7-subgroups of A_7, both normalized by phi.

    Existence of such a pair is part of what the structure checks verify;
    the sweep below finds the witnesses deterministically.
    """
    A7 = alternating_group(7)
    S7 = symmetric_group(7)
    x = parse_permutation("(1,2)(3,4)(5,6)", 7)
    phi = OvergroupAutomorphism(group=A7, overgroup=S7, conjugator=x)

    P0 = sylow_subgroup(A7, 2)
    p_set = frozenset(P0.element_bytes())
    chosen_p = None
    seen: set[frozenset[bytes]] = set()
    for g in A7.element_bytes():
        conj = _conjugate_set(p_set, g)
        if conj in seen:
            continue
        seen.add(conj)
        if _conjugate_set(conj, x._b) == conj:
            gens = [Permutation._from_bytes(b) ** Permutation._from_bytes(g)
                    for b in (gen._b for gen in P0.generators)]
            chosen_p = PermutationGroup(gens, 7)
            break
    assert chosen_p is not None, "no phi-invariant Sylow 2-subgroup found"

    chosen_h = None
    for b in A7.element_bytes():
        p = Permutation._from_bytes(b)
        if p.cycle_type() != (7,):
            continue
        subgroup = frozenset((p ** k)._b for k in range(1, 8))
        if _conjugate_set(subgroup, x._b) == subgroup:
            chosen_h = p
            break
    assert chosen_h is not None, "no phi-invariant Sylow 7-subgroup found"

    env = A7Environment(A7=A7, S7=S7, P=chosen_p, seven_cycle=chosen_h, phi=phi)
    assert env.A7.order == 2520 and env.P.order == 8 and env.seven_cycle.order() == 7
    assert env.phi.squares_to_identity()
    return env


@lru_cache(maxsize=4)
def _overgroup_census(ambient: str) -> list[SubgroupRecord]:
    env = build_environment()
    G = env.A7 if ambient == "A7" else env.S7
    return intermediate_subgroups(G, env.P)


def overgroups_of_sylow2(env: A7Environment) -> list[SubgroupRecord]:
    """All subgroups H with P <= H <= A_7, as element-index sets."""
    return _overgroup_census("A7")


def _seven_cycle_indices(G: PermutationGroup) -> frozenset[int]:
    return frozenset(i for i, b in enumerate(G.element_bytes())
                     if Permutation._from_bytes(b).cycle_type() == (7,))


def pgl_overgroups(env: A7Environment) -> list[SubgroupRecord]:
    """The proper overgroups of P that contain a 7-cycle."""
    sevens = _seven_cycle_indices(env.A7)
    out = [rec for rec in overgroups_of_sylow2(env)
           if rec.order < env.A7.order and rec.elements & sevens]
    return out


def conjugacy_orbit_of_subgroup(G: PermutationGroup,
                                members: frozenset[int]) -> set[frozenset[int]]:
    """Orbit of a subgroup (as element indices) under conjugation by G."""
    elems = G.element_bytes()
    index = {b: i for i, b in enumerate(elems)}
    gens = [g._b for g in G.generators]
    orbit = {members}
    stack = [members]
    while stack:
        fs = stack.pop()
        for g in gens:
            gi = _inv_bytes(g)
            image = frozenset(index[_mul_bytes(_mul_bytes(gi, elems[i]), g)] for i in fs)
            if image not in orbit:
                orbit.add(image)
                stack.append(image)
    return orbit


def subgroup_image_under(env: A7Environment, members: frozenset[int],
                         conjugator: Permutation) -> frozenset[int]:
    elems = env.A7.element_bytes()
    index = {b: i for i, b in enumerate(elems)}
    c = conjugator._b
    ci = _inv_bytes(c)
    return frozenset(index[_mul_bytes(_mul_bytes(ci, elems[i]), c)] for i in members)


def check_phi_properties(env: A7Environment) -> dict:
    """Facts about phi and the two special subgroup classes, verified directly."""
    x = env.phi.conjugator
    p_set = frozenset(env.P.element_bytes())
    k_set = frozenset((env.seven_cycle ** k)._b for k in range(1, 8))
    pgls = pgl_overgroups(env)
    report = {
        "phi_squares_to_identity": env.phi.squares_to_identity(),
        "phi_normalizes_P": _conjugate_set(p_set, x._b) == p_set,
        "phi_normalizes_seven_cycle_subgroup": _conjugate_set(k_set, x._b) == k_set,
        "pgl_count": len(pgls),
        "pgl_orders": sorted(rec.order for rec in pgls),
        "pgl_indices": sorted(env.A7.order // rec.order for rec in pgls),
    }
    if len(pgls) == 2:
        first, second = pgls[0].elements, pgls[1].elements
        orbit1 = conjugacy_orbit_of_subgroup(env.A7, first)
        orbit2 = conjugacy_orbit_of_subgroup(env.A7, second)
        report["classes_disjoint"] = second not in orbit1
        report["class_sizes"] = (len(orbit1), len(orbit2))
        image1 = {subgroup_image_under(env, fs, x) for fs in orbit1}
        report["phi_swaps_classes"] = (image1 == orbit2)
    return report


def check_pgl_strong_generation(env: A7Environment, rec: SubgroupRecord) -> bool:
    """<P^r : r in R> = K for a Sylow 2-subgroup P and Sylow 7-subgroup R of K."""
    elems = env.A7.element_bytes()
    K = PermutationGroup([Permutation._from_bytes(b) for b in rec.gens], 7)
    assert K.order == rec.order
    P_K = sylow_subgroup(K, 2)
    R = sylow_subgroup(K, 7)
    conj_gens = []
    for r in R.element_bytes():
        ri = _inv_bytes(r)
        conj_gens.extend(_mul_bytes(_mul_bytes(ri, p._b), r) for p in P_K.generators)
    got = generated_order([Permutation._from_bytes(b) for b in conj_gens], 7,
                          stop_at=rec.order)
    return got == rec.order


def check_rho_on_power(t: int) -> dict:
    """The involution rho = conjugation by (x, ..., x) on the t-th power of A_7.

    Verifies that rho normalizes each factor, the product of the factor
    Sylow 2-subgroups, and the cyclic group generated by the tuple of
    7-cycles; and that inside one factor the only rho-invariant overgroup
    of P containing the 7-cycle is the factor itself.
    """
    if t not in (1, 2):
        raise ValueError("t must be 1 or 2")
    env = build_environment()
    report: dict = {"t": t}
    sevens = _seven_cycle_indices(env.A7)
    h_index = env.A7.element_bytes().index(env.seven_cycle._b)
    assert h_index in sevens
    x = env.phi.conjugator
    invariant_overgroups = []
    for rec in overgroups_of_sylow2(env):
        if h_index not in rec.elements:
            continue
        if subgroup_image_under(env, rec.elements, x) == rec.elements:
            invariant_overgroups.append(rec.order)
    report["invariant_overgroups_with_seven_cycle"] = sorted(invariant_overgroups)
    report["factor_property_3"] = invariant_overgroups == [env.A7.order]
    if t == 1:
        phi_report = check_phi_properties(env)
        report["normalizes_factors"] = True
        report["normalizes_P_product"] = phi_report["phi_normalizes_P"]
        report["normalizes_K"] = phi_report["phi_normalizes_seven_cycle_subgroup"]
        report["rho_order"] = 2
        return report
    rho = diagonal_embedding(PermutationGroup([x], 7), t).generators[0]
    report["rho_order"] = rho.order()
    factors = [PermutationGroup([embed_in_power(g, b, t) for g in env.A7.generators])
               for b in range(t)]
    report["normalizes_factors"] = all(
        all(g ** rho in Li for g in Li.generators) for Li in factors)
    P_prod = PermutationGroup(
        [embed_in_power(g, b, t) for b in range(t) for g in env.P.generators])
    assert P_prod.order == env.P.order ** t
    report["normalizes_P_product"] = all(g ** rho in P_prod for g in P_prod.generators)
    K_diag = diagonal_embedding(env.K, t)
    report["normalizes_K"] = all(g ** rho in K_diag for g in K_diag.generators)
    per_factor = []
    for b in range(t):
        P_b = PermutationGroup([embed_in_power(q, b, t) for q in env.P.generators])
        per_factor.append(all(g ** rho in P_b for g in P_b.generators))
    report["normalizes_each_factor_sylow2"] = all(per_factor)
    return report


@dataclass(frozen=True)
class SmithActionSpec:
    """The extended action (P x K) with theta adjoined, on C(G, N)."""
    G: PermutationGroup
    N: PermutationGroup
    P: PermutationGroup
    K: PermutationGroup
    theta: OvergroupAutomorphism

    def action_group(self) -> ActionGroup:
        """Generators of the action: left P, right K, and theta.

        theta normalizing P and K (see shape_report) witnesses closure of
        the generated set of triples.
        """
        triples = [ActionTriple(left=g) for g in self.P.generators]
        triples += [ActionTriple(right=g) for g in self.K.generators]
        triples.append(ActionTriple(automorphism=self.theta))
        return ActionGroup(tuple(triples))

    def shape_report(self) -> dict:
        """Structural facts putting the action group in Smith-theory shape:
        a 2-group times a cyclic group, extended by an order-2 part."""
        p_order = self.P.order
        two_group = p_order & (p_order - 1) == 0
        cyclic = any(Permutation._from_bytes(b).order() == self.K.order
                     for b in self.K.element_bytes())
        theta_c = self.theta.conjugator
        return {
            "P_is_2_group": two_group,
            "K_is_cyclic": cyclic,
            "theta_order_2": self.theta.squares_to_identity()
                and not self.theta.fixes_group_elementwise(),
            "theta_normalizes_P": all(g ** theta_c in self.P for g in self.P.generators),
            "theta_normalizes_K": all(g ** theta_c in self.K for g in self.K.generators),
            "theta_normalizes_N": all(g ** theta_c in self.N for g in self.N.generators),
        }


def build_smith_spec(ambient: str = "A7") -> SmithActionSpec:
    """The shipped action spec on C(G, A_7) for G = A_7 or G = S_7."""
    env = build_environment()
    G = env.A7 if ambient == "A7" else env.S7
    theta = OvergroupAutomorphism(group=G, overgroup=env.S7,
                                  conjugator=env.phi.conjugator)
    return SmithActionSpec(G=G, N=env.A7, P=env.P, K=env.K, theta=theta)


def smith_fixed_point_check(spec: SmithActionSpec) -> dict:
    """Fixed cosets of C(G, N) under P x K, then additionally under theta.

    Fixed cosets Hx satisfy <P, K^(x^-1)> <= H, so only the overgroups of P
    can carry them; those are enumerated directly.
    """
    G, N = spec.G, spec.N
    if not is_normal_subgroup(G, N):
        raise ValueError("N is not normal in G")
    elems = G.element_bytes()
    index = {b: i for i, b in enumerate(elems)}
    n_set = frozenset(index[b] for b in N.element_bytes())
    census = intermediate_subgroups(G, spec.P)
    k_gens = [g._b for g in spec.K.generators]
    theta_b = spec.theta.conjugator._b
    theta_bi = _inv_bytes(theta_b)
    translation_fixed = []
    fully_fixed = []
    for rec in census:
        if rec.order == G.order:
            continue
        h_set = rec.elements
        if len(h_set) * len(n_set) // len(h_set & n_set) != G.order:
            continue
        h_bytes = [elems[i] for i in h_set]
        assigned = bytearray(len(elems))
        for xi in range(len(elems)):
            if assigned[xi]:
                continue
            coset = [index[_mul_bytes(hb, elems[xi])] for hb in h_bytes]
            for c in coset:
                assigned[c] = 1
            r = elems[min(coset)]
            ri = _inv_bytes(r)
            if not all(index[_mul_bytes(_mul_bytes(r, kg), ri)] in h_set
                       for kg in k_gens):
                continue
            vertex = (rec.order, cycle_string(Permutation._from_bytes(r)))
            translation_fixed.append(vertex)
            h_image = frozenset(index[_mul_bytes(_mul_bytes(theta_bi, elems[i]), theta_b)]
                                for i in h_set)
            r_image = _mul_bytes(_mul_bytes(theta_bi, r), theta_b)
            if h_image == h_set and index[_mul_bytes(r_image, ri)] in h_set:
                fully_fixed.append(vertex)
    return {
        "translation_fixed": sorted(translation_fixed),
        "fully_fixed": sorted(fully_fixed),
        "shape": spec.shape_report(),
    }


def abelian_antichain_check(G: PermutationGroup, N: PermutationGroup) -> dict:
    """For abelian minimal normal N: C(G, N) is an antichain of size
    divisible by |N|, hence its complex is disconnected or just {emptyset}."""
    if not N.is_abelian():
        raise ValueError("N is not abelian")
    if not any(N == M for M in minimal_normal_subgroups(G)):
        raise ValueError("N is not a minimal normal subgroup of G")
    lat = enumerate_subgroups(G)
    rel = build_relative_poset(G, N, lat)
    betti = reduced_betti(order_complex(rel), 2)
    return {
        "antichain": rel.is_antichain(),
        "size": len(rel),
        "size_divisible_by_N": len(rel) % N.order == 0,
        "low_dimensional_homology": betti.get(-1) + betti.get(0) > 0,
        "betti": betti.as_dict(),
    }
