import pytest

from cosetposets.generation import (
    check_alternating_claims,
    check_diagonal_universal,
    imprimitive_parity_identity,
    relative_fixed_cosets_by_criterion,
    sylow2_fixed_point_free_element,
    univ_gen_via_maximal_indices,
    universally_p_generates,
)
from cosetposets.groups import (
    PermutationGroup,
    alternating_group,
    cyclic_group,
    symmetric_group,
    sylow_subgroup,
)
from cosetposets.lattice import enumerate_subgroups
from cosetposets.perm import parse_permutation


def _group(*texts, degree):
    return PermutationGroup([parse_permutation(t, degree) for t in texts], degree)


def test_five_cycle_universally_2_generates_a5():
    A5 = alternating_group(5)
    K = _group("(1,2,3,4,5)", degree=5)
    report = universally_p_generates(A5, K, 2)
    assert report.verdict
    assert report.tests == 6  # six Sylow 5-subgroups of A5


def test_seven_cycle_fails_in_a7():
    A7 = alternating_group(7)
    K = _group("(1,2,3,4,5,6,7)", degree=7)
    report = universally_p_generates(A7, K, 2)
    assert not report.verdict
    assert report.first_witness()["generated_order"] == 168


def test_c3_universally_2_generates_z6():
    Z6 = cyclic_group(6)
    C3 = _group("(1,3,5)(2,4,6)", degree=6)
    assert universally_p_generates(Z6, C3, 2).verdict


def test_universal_generation_preconditions():
    A5 = alternating_group(5)
    with pytest.raises(ValueError):
        universally_p_generates(A5, _group("(1,2)", degree=5), 2)  # odd, not in A5
    with pytest.raises(ValueError):
        universally_p_generates(A5, _group("(1,2,3)", degree=5), 7)  # 7 does not divide 60


def test_conjugation_invariance_of_verdict():
    A5 = alternating_group(5)
    K = _group("(1,2,3,4,5)", degree=5)
    g = parse_permutation("(1,2,3)", 5)
    assert (universally_p_generates(A5, K, 2).verdict
            == universally_p_generates(A5, K.conjugate_by(g), 2).verdict)


def test_maximal_index_remark_a5():
    A5 = alternating_group(5)
    lat = enumerate_subgroups(A5)
    assert univ_gen_via_maximal_indices(A5, 5, 2, lat)
    assert (univ_gen_via_maximal_indices(A5, 5, 2, lat)
            == universally_p_generates(A5, sylow_subgroup(A5, 5), 2).verdict)


def test_maximal_index_remark_s3():
    S3 = symmetric_group(3)
    lat = enumerate_subgroups(S3)
    assert univ_gen_via_maximal_indices(S3, 3, 2, lat)


def test_remark_equivalence_sweep():
    """Index condition on maximal subgroups == direct Sylow sweep verdict."""
    groups = [symmetric_group(3), symmetric_group(4), alternating_group(4),
              alternating_group(5), cyclic_group(12)]
    for G in groups:
        lat = enumerate_subgroups(G)
        primes = sorted({p for p in range(2, G.order + 1)
                         if G.order % p == 0 and _is_prime(p)})
        for p in primes:
            for r in primes:
                direct = universally_p_generates(G, sylow_subgroup(G, r), p).verdict
                assert univ_gen_via_maximal_indices(G, r, p, lat) == direct


def _is_prime(p):
    return p > 1 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def test_alternating_claims_small():
    assert check_alternating_claims(5).verdict
    assert check_alternating_claims(6).verdict
    report7 = check_alternating_claims(7)
    assert not report7.verdict
    assert report7.tests == 720
    assert {w["generated_order"] for w in report7.witnesses} == {168}
    with pytest.raises(ValueError):
        check_alternating_claims(4)


def test_diagonal_universal_a5():
    A5 = alternating_group(5)
    K = _group("(1,2,3,4,5)", degree=5)
    assert check_diagonal_universal(A5, K, 2, 1).verdict
    assert check_diagonal_universal(A5, K, 2, 2).verdict


def test_diagonal_universal_a7_power_fails():
    A7 = alternating_group(7)
    K = _group("(1,2,3,4,5,6,7)", degree=7)
    report = check_diagonal_universal(A7, K, 2, 2)
    assert not report.verdict
    witness = report.first_witness()
    assert witness["generated_order"] < 2520 ** 2
    assert (2520 ** 2) % witness["generated_order"] == 0


def test_diagonal_requires_proper_subgroup():
    A5 = alternating_group(5)
    with pytest.raises(ValueError):
        check_diagonal_universal(A5, A5, 2, 2)


def test_sylow2_fixed_point_free_even_degrees():
    for n in (10, 12):
        witness = sylow2_fixed_point_free_element(n)
        assert witness is not None
        assert witness.fixed_points() == ()
        assert witness in sylow_subgroup(alternating_group(n), 2)


def test_sylow2_no_fixed_point_free_element_odd_degree():
    assert sylow2_fixed_point_free_element(7) is None
    assert sylow2_fixed_point_free_element(9) is None


def test_parity_identity_examples():
    assert imprimitive_parity_identity(9, 3) == (280, "even")
    assert imprimitive_parity_identity(15, 5) == (126126, "even")
    assert imprimitive_parity_identity(15, 3) == (1401400, "even")


def test_parity_identity_sweep():
    for n in range(4, 41):
        for d in range(2, n):
            if n % d == 0 and d != n:
                value, parity = imprimitive_parity_identity(n, d)
                if n % 2 == 1 and n <= 35:
                    assert parity == "even"


def test_parity_identity_rejects_bad_divisor():
    with pytest.raises(ValueError):
        imprimitive_parity_identity(9, 4)
    with pytest.raises(ValueError):
        imprimitive_parity_identity(9, 9)


def test_relative_fixed_cosets_empty_for_a5():
    A5 = alternating_group(5)
    K = _group("(1,2,3,4,5)", degree=5)
    P = sylow_subgroup(A5, 2)
    assert relative_fixed_cosets_by_criterion(A5, A5, P, K) == []


def test_relative_fixed_cosets_nonempty_example():
    # C3 x C3 on C(S3): the two cosets of A3 are fixed, so witnesses exist
    S3 = symmetric_group(3)
    C3 = _group("(1,2,3)", degree=3)
    witnesses = relative_fixed_cosets_by_criterion(S3, S3, C3, C3)
    assert witnesses
    assert all(w["subgroup_order"] == 3 for w in witnesses)


def test_universal_generation_forces_empty_fixed_sets_on_posets():
    """When K universally p-generates N and N is normal in G, the
    translation action of sylow(N, p) x K leaves no coset of C(G, N) fixed;
    checked on materialized posets."""
    from cosetposets.cosets import build_relative_poset, translation_fixed_points
    from cosetposets.lattice import enumerate_subgroups

    cases = [
        (symmetric_group(3), symmetric_group(3), _group("(1,2,3)", degree=3)),
        (alternating_group(5), alternating_group(5), _group("(1,2,3,4,5)", degree=5)),
        (symmetric_group(4),
         _group("(1,2)(3,4)", "(1,3)(2,4)", degree=4),
         _group("(1,2)(3,4)", degree=4)),
    ]
    for G, N, K in cases:
        assert universally_p_generates(N, K, 2).verdict
        P = sylow_subgroup(N, 2)
        lat = enumerate_subgroups(G)
        rel = build_relative_poset(G, N, lat)
        assert translation_fixed_points(rel, P, K) == []
        assert relative_fixed_cosets_by_criterion(G, N, P, K) == []
