from itertools import combinations

import pytest

from cosetposets.groups import (
    BudgetExceededError,
    PermutationGroup,
    alternating_group,
    cyclic_group,
    symmetric_group,
)
from cosetposets.lattice import (
    SubgroupLattice,
    enumerate_subgroups,
    lattice_dump,
    maximal_subgroups,
    moebius_to_top,
)
from cosetposets.perm import parse_permutation


def brute_force_subgroups(G):
    """Every multiplication-closed nonempty subset; the independent oracle."""
    elems = G.elements()
    n = len(elems)
    table = {(i, j): elems.index(elems[i] * elems[j]) for i in range(n) for j in range(n)}
    out = []
    for r in range(1, n + 1):
        for combo in combinations(range(n), r):
            s = set(combo)
            if all(table[(i, j)] in s for i in s for j in s):
                out.append(frozenset(combo))
    return out


def test_cyclic_prime_has_two_subgroups():
    assert len(enumerate_subgroups(cyclic_group(5))) == 2
    assert len(enumerate_subgroups(cyclic_group(7))) == 2


def test_s3_subgroups_match_exhaustive_oracle():
    S3 = symmetric_group(3)
    lat = enumerate_subgroups(S3)
    assert len(lat) == 6
    brute = brute_force_subgroups(S3)
    assert sorted(e.elements for e in lat.subgroups) == sorted(brute)


def test_s4_has_thirty_subgroups():
    lat = enumerate_subgroups(symmetric_group(4))
    assert len(lat) == 30
    by_order = {}
    for e in lat.subgroups:
        by_order[e.order] = by_order.get(e.order, 0) + 1
    # census: 1, 9 C2, 4 C3, 3 C4 + 4 V4, 4 S3, 3 D8, 1 A4, 1 S4
    assert by_order == {1: 1, 2: 9, 3: 4, 4: 7, 6: 4, 8: 3, 12: 1, 24: 1}


def test_a5_subgroup_and_maximal_census():
    lat = enumerate_subgroups(alternating_group(5))
    assert len(lat) == 59
    maxi = maximal_subgroups(lat)
    assert len(maxi) == 21
    indices = sorted(lat.index_in_group(i) for i in maxi)
    assert indices == [5] * 5 + [6] * 6 + [10] * 10


def test_maximal_of_z4():
    lat = enumerate_subgroups(cyclic_group(4))
    maxi = maximal_subgroups(lat)
    assert [lat.subgroups[i].order for i in maxi] == [2]


def test_moebius_values_s3():
    lat = enumerate_subgroups(symmetric_group(3))
    mu = moebius_to_top(lat)
    assert mu[lat.index_of_parent] == 1
    assert mu[lat.index_of_trivial] == 3
    for i, e in enumerate(lat.subgroups):
        if e.order == 2:
            assert mu[i] == -1


def test_moebius_defining_identity():
    for G in [symmetric_group(3), symmetric_group(4), cyclic_group(12),
              alternating_group(4)]:
        lat = enumerate_subgroups(G)
        mu = moebius_to_top(lat)
        for h in range(len(lat.subgroups)):
            interval = [k for k in lat.above[h]] + [h]
            total = sum(mu[k] for k in interval)
            assert total == (1 if h == lat.index_of_parent else 0)


def test_join_closure_invariant():
    lat = enumerate_subgroups(symmetric_group(4))
    subs = lat.subgroups
    for i in range(0, len(subs), 3):
        for j in range(0, len(subs), 5):
            gens = subs[i].generators + subs[j].generators
            assert lat._span(gens) in lat.subgroup_index


def test_conjugation_permutes_subgroup_list():
    G = alternating_group(5)
    lat = enumerate_subgroups(G)
    all_sets = set(lat.subgroup_index)
    for g in G.generators:
        gi = lat.index[g._b]
        for fs in all_sets:
            image = frozenset(lat.conj_element(x, gi) for x in fs)
            assert image in all_sets


def test_cyclic_phi_weights_reconstruct_order():
    def phi(n):
        return sum(1 for k in range(1, n + 1) if __import__("math").gcd(k, n) == 1)

    for G in [symmetric_group(4), cyclic_group(12), alternating_group(5)]:
        lat = enumerate_subgroups(G)
        cyclic_sizes = []
        for e in lat.subgroups:
            if any(_cyclic_span_size(lat, x) == e.order for x in e.elements):
                cyclic_sizes.append(e.order)
        assert sum(phi(s) for s in cyclic_sizes) == G.order


def _cyclic_span_size(lat, x):
    if x == 0:
        return 1
    size = 1  # identity
    j = x
    while j != 0:
        size += 1
        j = lat.mul[j][x]
    return size


def test_inclusion_respects_lagrange():
    lat = enumerate_subgroups(symmetric_group(4))
    for j, entry in enumerate(lat.subgroups):
        for i in lat.below[j]:
            assert entry.order % lat.subgroups[i].order == 0
            assert lat.subgroups[i].elements < entry.elements


def test_order_bound_enforced():
    with pytest.raises(BudgetExceededError):
        SubgroupLattice(alternating_group(7))


def test_lattice_dump_is_stable():
    lat = enumerate_subgroups(symmetric_group(3))
    mu = moebius_to_top(lat)
    d1 = lattice_dump(lat, mu)
    d2 = lattice_dump(enumerate_subgroups(symmetric_group(3)), mu)
    assert d1 == d2
    assert d1.splitlines()[0] == "1;0;3"


def test_find_subgroup():
    S4 = symmetric_group(4)
    lat = enumerate_subgroups(S4)
    V4 = PermutationGroup([parse_permutation("(1,2)(3,4)", 4),
                           parse_permutation("(1,3)(2,4)", 4)])
    i = lat.find(V4)
    assert lat.subgroups[i].order == 4
    with pytest.raises(ValueError):
        lat.find(PermutationGroup([parse_permutation("(1,2)", 2)]))
