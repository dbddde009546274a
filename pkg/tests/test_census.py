"""Tests for the enumeration layer: class partitions, character-pair
counts, the baseline Weierstrass census, and point counts."""

from fractions import Fraction

import pytest

from curvecensus.census import (
    GUARDS,
    baseline_short_weierstrass_census,
    census,
    projective_point_count,
    s_ij_census,
)
from curvecensus.families import CurveDescriptor, get_family, short_model
from curvecensus.gf import field_of_order, prime_powers


def test_legendre_census_example():
    part = census("legendre", 7)
    assert part.param_count == 5
    assert part.j_count == 2
    assert part.iso_count == 3
    assert sorted(len(c) for c in part.j_classes.values()) == [2, 3]
    assert part.j_class_of(3) == [3, 5]
    assert part.iso_class_of(3) == [3]
    assert part.iso_class_of(2) == [2, 4, 6]
    assert part.n_hist == {2: 2, 3: 3}
    assert part.m_hist == {1: 2, 3: 3}


def test_hessian_census_examples():
    part = census("hessian", 4)
    assert part.param_count == 1
    assert part.j_count == 1
    assert part.iso_count == 1
    part = census("hessian", 7)
    assert part.param_count == 4
    assert part.j_count == 1
    assert part.iso_count == 1
    assert part.iso_class_of(0) == [0, 1, 2, 4]


def test_generalized_hessian_census_example():
    part = census("generalized-hessian", 4)
    assert part.param_count == 9
    assert part.j_count == 3
    assert part.iso_count == 5


def test_jacobi_families_match_legendre_counts():
    base = census("legendre", 13)
    for name in ("jacobi-quartic", "jacobi-intersection"):
        part = census(name, 13)
        assert part.param_count == base.param_count
        assert part.j_count == base.j_count
        assert part.iso_count == base.iso_count


def test_partition_identities():
    jobs = [("legendre", q) for q in (5, 9, 13, 25, 27)]
    jobs += [("hessian", q) for q in (4, 7, 8, 9, 13, 16, 27)]
    jobs += [("generalized-hessian", q) for q in (4, 5, 7, 9, 13)]
    for name, q in jobs:
        part = census(name, q)
        assert part.param_count == sum(
            len(c) for c in part.j_classes.values())
        assert sum(part.n_hist.values()) == part.param_count
        assert sum(part.m_hist.values()) == part.param_count
        assert sum(Fraction(v, n) for n, v in part.n_hist.items()) \
            == part.j_count
        assert sum(Fraction(v, k) for k, v in part.m_hist.items()) \
            == part.iso_count
        # iso classes refine j classes
        for cls in part.iso_classes.values():
            assert len({part.param_to_j[p] for p in cls}) == 1
        # class member lists are sorted and consistent with the maps
        for j, cls in part.j_classes.items():
            assert cls == sorted(cls)
            for p in cls:
                assert part.param_to_j[p] == j


def test_hessian_iso_structure_by_residue():
    # one isomorphism class per j when 3 divides q - 1, singletons otherwise
    for q in (4, 5, 7, 8, 9, 13, 16, 25, 27):
        part = census("hessian", q)
        if q % 3 == 1:
            assert part.iso_count == part.j_count
            assert part.m_hist == part.n_hist
        else:
            assert part.iso_count == part.param_count
            assert part.m_hist == {1: part.param_count}


def test_gh_representative_mode_matches_full_j_count():
    for q in (4, 7, 13, 16):
        full = census("generalized-hessian", q)
        rep = census("generalized-hessian", q, with_iso=False)
        assert rep.iso_classes is None
        assert rep.m_hist is None
        assert rep.iso_count is None
        assert set(rep.j_classes) == set(full.j_classes)
        with pytest.raises(ValueError):
            rep.iso_class_of((0, 1))


def test_gh_per_coset_j_sets_meet_only_at_zero():
    for q in (7, 13, 25):
        F = field_of_order(q)
        reps = F.cube_coset_reps()
        assert len(reps) == 3
        fam = get_family("generalized-hessian")
        part = census("generalized-hessian", q)
        sets = []
        for v in reps:
            sets.append({part.param_to_j[(u, v)]
                         for u in fam.parameters_for_v(F, v)})
        for i in range(3):
            for k in range(i + 1, 3):
                assert sets[i] & sets[k] == {0}


def test_census_guards_and_compatibility():
    with pytest.raises(ValueError):
        census("legendre", 4)
    with pytest.raises(ValueError):
        census("legendre", 1013)
    with pytest.raises(ValueError):
        census("hessian", 521)
    with pytest.raises(ValueError):
        census("generalized-hessian", 131, with_iso=True)
    with pytest.raises(ValueError):
        census("generalized-hessian", 257)
    # above the iso guard the default census falls back to j-only mode
    part = census("generalized-hessian", 131)
    assert part.iso_classes is None
    assert part.j_count == 131 // 2


def test_s_ij_census_examples():
    counts = s_ij_census(7)
    assert counts[(-1, -1)] == 2
    assert counts[(1, 1)] == 1
    counts = s_ij_census(13)
    assert counts[(1, 1)] == 2
    assert counts[(1, -1)] == 3


def test_s_ij_census_totals_and_errors():
    for q in (5, 9, 11, 25, 27, 49):
        counts = s_ij_census(q)
        assert set(counts) == {(1, 1), (1, -1), (-1, 1), (-1, -1)}
        assert sum(counts.values()) == q - 2
    with pytest.raises(ValueError):
        s_ij_census(8)
    with pytest.raises(ValueError):
        s_ij_census(2039)


def test_baseline_census_examples():
    assert baseline_short_weierstrass_census(5) == 12
    assert baseline_short_weierstrass_census(7) == 18
    assert baseline_short_weierstrass_census(11) == 22
    assert baseline_short_weierstrass_census(13) == 32
    with pytest.raises(ValueError):
        baseline_short_weierstrass_census(9)
    with pytest.raises(ValueError):
        baseline_short_weierstrass_census(211)


def _brute_cubic_count(F, u, v):
    q = F.q
    hits = 0
    for x in range(q):
        for y in range(q):
            for z in range(q):
                lhs = F.add(F.pow(x, 3), F.add(F.pow(y, 3),
                                               F.mul(v, F.pow(z, 3))))
                if lhs == F.mul(u, F.mul(x, F.mul(y, z))):
                    hits += 1
    return (hits - 1) // (q - 1)


def _brute_weierstrass_count(w):
    F = w.field
    n = 1
    for x in range(F.q):
        rhs = F.add(F.mul(F.add(F.mul(F.add(x, w.a2), x), w.a4), x), w.a6)
        for y in range(F.q):
            lhs = F.add(F.mul(y, y),
                        F.mul(y, F.add(F.mul(w.a1, x), w.a3)))
            if lhs == rhs:
                n += 1
    return n


def test_hessian_point_count_example():
    F = field_of_order(4)
    c = CurveDescriptor("hessian", 0, F)
    n = projective_point_count(c)
    assert n == 9
    assert n == _brute_cubic_count(F, 0, 1)


def test_gh_point_counts_divisible_by_three():
    F = field_of_order(7)
    fam = get_family("generalized-hessian")
    seen = 0
    for (u, v) in fam.parameters(F):
        n = projective_point_count(CurveDescriptor("generalized-hessian",
                                                   (u, v), F))
        assert n % 3 == 0
        if seen < 3:
            assert n == _brute_cubic_count(F, u, v)
        seen += 1
    assert seen == 36


def test_weierstrass_point_counts_match_brute_force():
    for q, A, B in ((5, 1, 1), (7, 3, 2), (13, 0, 2)):
        F = field_of_order(q)
        c = CurveDescriptor("short-weierstrass", (A, B), F)
        assert projective_point_count(c) == _brute_weierstrass_count(c.model())
    for q, coeffs in ((8, (1, 1, 0, 0, 1)), (9, (1, 2, 1, 0, 1)),
                      (16, (0, 0, 1, 1, 0))):
        F = field_of_order(q)
        c = CurveDescriptor("long-weierstrass", coeffs, F)
        assert projective_point_count(c) == _brute_weierstrass_count(c.model())


def test_twist_pair_point_counts_sum():
    F = field_of_order(7)
    c = 3  # not a square mod 7
    assert F.chi2(c) == -1
    A, B = 1, 1
    At = F.mul(F.mul(c, c), A)
    Bt = F.mul(F.mul(c, F.mul(c, c)), B)
    n1 = projective_point_count(CurveDescriptor("short-weierstrass", (A, B), F))
    n2 = projective_point_count(CurveDescriptor("short-weierstrass", (At, Bt), F))
    assert n1 + n2 == 2 * 7 + 2


def test_point_count_guard_and_family_check():
    F = field_of_order(625)
    c = CurveDescriptor("hessian", 0, F)
    with pytest.raises(ValueError):
        projective_point_count(c)
    F7 = field_of_order(7)
    with pytest.raises(ValueError):
        projective_point_count(CurveDescriptor("legendre", 3, F7))
    assert GUARDS["points"] == 512
