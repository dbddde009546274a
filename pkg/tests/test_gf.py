"""Finite-field arithmetic checks, mostly by exhaustive sweep."""

import pytest

from curvecensus.gf import (
    Field,
    Element,
    make_field,
    field_of_order,
    prime_powers,
    prime_power_split,
    is_prime,
    factorize,
    _is_irreducible,
)


def test_is_prime_small():
    primes = [n for n in range(60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]


def test_factorize():
    assert factorize(1) == {}
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert factorize(1009) == {1009: 1}


def test_prime_power_split():
    assert prime_power_split(128) == (2, 7)
    assert prime_power_split(729) == (3, 6)
    assert prime_power_split(13) == (13, 1)
    with pytest.raises(ValueError):
        prime_power_split(12)
    with pytest.raises(ValueError):
        prime_power_split(1)


def test_prime_powers_list():
    assert prime_powers(30) == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29]
    assert prime_powers(30, min_q=10) == [11, 13, 16, 17, 19, 23, 25, 27, 29]


def test_invalid_parameters():
    with pytest.raises(ValueError):
        Field(4)
    with pytest.raises(ValueError):
        Field(2, 0)
    with pytest.raises(ValueError):
        Field(2, 21)
    with pytest.raises(ValueError):
        Field(1031, 2)


def test_make_field_is_shared():
    assert make_field(5) is make_field(5)
    assert field_of_order(49) is make_field(7, 2)


def test_prime_field_basics():
    F = make_field(7)
    assert F.q == 7 and F.p == 7 and F.k == 1
    assert F.add(5, 4) == 2
    assert F.sub(2, 5) == 4
    assert F.mul(3, 5) == 1
    assert F.inv(3) == 5
    assert F.neg(0) == 0 and F.neg(2) == 5
    assert F.pow(3, 6) == 1
    assert F.pow(3, -1) == 5
    assert F.pow(0, 0) == 1
    with pytest.raises(ZeroDivisionError):
        F.inv(0)
    with pytest.raises(ZeroDivisionError):
        F.div(1, 0)


def test_gf4_structure():
    F = make_field(2, 2)
    # X^2 + X + 1 is the only irreducible quadratic over GF(2)
    assert F.modulus == (1, 1, 1)
    # with t the residue of X: t*t = t + 1, encoded 2*2 = 3
    assert F.mul(2, 2) == 3
    assert F.mul(2, 3) == 1
    assert F.add(2, 3) == 1
    assert F.inv(2) == 3
    assert {F.pow(2, i) for i in range(3)} == {1, 2, 3}


def test_gf9_modulus_matches_exhaustive_scan():
    # oracle: smallest-encoded monic irreducible quadratic over GF(3),
    # found here by brute force over all 9 candidates
    best = None
    for c0 in range(3):
        for c1 in range(3):
            f = (c0, c1, 1)
            if any((r * r + c1 * r + c0) % 3 == 0 for r in range(3)):
                continue
            enc = c0 + 3 * c1
            if best is None or enc < best[0]:
                best = (enc, f)
    F = make_field(3, 2)
    assert F.modulus == best[1] == (1, 0, 1)


@pytest.mark.parametrize("p,k", [(2, 5), (3, 3), (5, 2), (7, 2), (2, 8)])
def test_modulus_is_monic_irreducible(p, k):
    F = make_field(p, k)
    assert len(F.modulus) == k + 1
    assert F.modulus[-1] == 1
    assert _is_irreducible(F.modulus, p)


@pytest.mark.parametrize("q", [4, 8, 9, 16, 25, 27, 49, 64, 81, 121, 128, 125, 243, 256, 512, 343, 1024])
def test_field_axioms_by_sweep(q):
    F = field_of_order(q)
    add, mul, neg, inv = F.add, F.mul, F.neg, F.inv
    for a in F.elements():
        assert add(a, 0) == a
        assert mul(a, 1) == a
        assert add(a, neg(a)) == 0
        if a:
            assert mul(a, inv(a)) == 1
    # spot-check associativity and distributivity on a grid
    pts = list(range(0, q, max(1, q // 7)))[:7]
    for a in pts:
        for b in pts:
            assert add(a, b) == add(b, a)
            assert mul(a, b) == mul(b, a)
            for c in pts:
                assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
                assert add(add(a, b), c) == add(a, add(b, c))
                assert mul(mul(a, b), c) == mul(a, mul(b, c))


@pytest.mark.parametrize("q", [16, 27, 49, 101, 1024])
def test_pow_against_repeated_multiplication(q):
    F = field_of_order(q)
    for a in list(F.elements())[:12] + [q - 1]:
        acc = 1
        for e in range(9):
            assert F.pow(a, e) == acc
            acc = F.mul(acc, a)
    for a in F.units():
        assert F.pow(a, q - 1) == 1
        assert F.mul(F.pow(a, -3), F.pow(a, 3)) == 1


def test_coeffs_round_trip():
    for q in (8, 9, 25, 343):
        F = field_of_order(q)
        for a in F.elements():
            cs = F.coeffs(a)
            assert len(cs) == F.k
            assert F.from_coeffs(cs) == a
    with pytest.raises(ValueError):
        make_field(2, 3).from_coeffs((1, 0))
    with pytest.raises(ValueError):
        make_field(3, 2).from_coeffs((3, 0))


def test_of_int_embedding():
    F = make_field(5, 2)
    assert F.of_int(7) == 2
    assert F.of_int(-1) == 4
    assert F.of_int(0) == 0


def test_chi2_prime_field_table():
    F = make_field(7)
    # squares mod 7 are {1, 2, 4}
    assert [F.chi2(a) for a in range(7)] == [0, 1, 1, -1, 1, -1, -1]


@pytest.mark.parametrize("q", [9, 25, 27, 81, 121, 125])
def test_chi2_matches_square_listing(q):
    F = field_of_order(q)
    squares = {F.mul(x, x) for x in F.units()}
    assert F.chi2(0) == 0
    for a in F.units():
        assert F.chi2(a) == (1 if a in squares else -1)
    assert sum(1 for a in F.units() if F.chi2(a) == 1) == (q - 1) // 2


def test_chi2_multiplicative():
    F = make_field(3, 4)
    for a in (1, 5, 17, 29, 44, 80):
        for b in (2, 7, 26, 53):
            assert F.chi2(F.mul(a, b)) == F.chi2(a) * F.chi2(b)


def test_chi2_rejects_char_two():
    with pytest.raises(ValueError):
        make_field(2, 4).chi2(3)


@pytest.mark.parametrize("q", [7, 9, 25, 27, 169])
def test_sqrt_by_sweep(q):
    F = field_of_order(q)
    assert F.sqrt(0) == (0, 0)
    for a in F.units():
        r = F.sqrt(a)
        if F.chi2(a) == -1:
            assert r is None
            continue
        lo, hi = r
        assert lo <= hi
        assert F.mul(lo, lo) == a
        assert hi == F.neg(lo)


def test_trace_binary_fields():
    # GF(2): trace is the identity
    F2 = make_field(2)
    assert [F2.trace(a) for a in range(2)] == [0, 1]
    # GF(4): zero exactly on the prime subfield's kernel {0, 1}? no:
    # Tr(a) = a + a^2, which vanishes on {0, 1}
    F4 = make_field(2, 2)
    assert [F4.trace(a) for a in range(4)] == [0, 0, 1, 1]
    # every trace map is onto and balanced
    for q in (8, 16, 64, 512):
        F = field_of_order(q)
        vals = [F.trace(a) for a in F.elements()]
        assert vals.count(0) == q // 2
        assert vals.count(1) == q // 2


@pytest.mark.parametrize("q", [9, 27, 25, 49])
def test_trace_is_additive_and_frobenius_invariant(q):
    F = field_of_order(q)
    for a in F.elements():
        t = F.trace(a)
        assert 0 <= t < F.p
        assert F.trace(F.pow(a, F.p)) == t
    for a in (1, 3, 5):
        for b in (2, 6, 7):
            assert F.trace(F.add(a, b)) == (F.trace(a) + F.trace(b)) % F.p


def test_generator_orders():
    for q in (7, 9, 16, 25, 1024):
        F = field_of_order(q)
        g = F.generator()
        seen = set()
        x = 1
        for _ in range(q - 1):
            x = F.mul(x, g)
            seen.add(x)
        assert len(seen) == q - 1


def test_third_roots_of_unity():
    assert make_field(5).third_roots_of_unity() == [1]
    assert make_field(7).third_roots_of_unity() == [1, 2, 4]
    assert make_field(2, 2).third_roots_of_unity() == [1, 2, 3]
    for q in (13, 25, 27, 64):
        F = field_of_order(q)
        roots = F.third_roots_of_unity()
        expect = 3 if (q - 1) % 3 == 0 else 1
        assert len(roots) == expect
        for z in roots:
            assert F.pow(z, 3) == 1


def test_cube_classes_mod_7():
    F = make_field(7)
    cubes = sorted(a for a in F.units() if F.is_cube(a))
    assert cubes == [1, 6]
    assert F.cube_roots(6) == [3, 5, 6]
    assert F.cube_roots(0) == [0]
    assert F.cube_roots(3) == []


@pytest.mark.parametrize("q", [4, 5, 7, 8, 9, 13, 16, 25, 27, 64, 81])
def test_cube_machinery_by_sweep(q):
    F = field_of_order(q)
    for a in F.elements():
        roots = F.cube_roots(a)
        for y in roots:
            assert F.mul(y, F.mul(y, y)) == a
        if (q - 1) % 3 == 0:
            assert len(roots) in (0, 3) or (a == 0 and len(roots) == 1)
            assert F.is_cube(a) == (len(roots) > 0)
        else:
            assert len(roots) == 1
            assert F.is_cube(a)
    reps = F.cube_coset_reps()
    if (q - 1) % 3 == 0:
        assert len(reps) == 3
        assert reps[0] == 1
        # the three cosets partition the units
        seen = set()
        for r in reps:
            coset = {F.mul(r, F.mul(x, F.mul(x, x))) for x in F.units()}
            assert len(coset) == (q - 1) // 3
            seen |= coset
        assert seen == set(F.units())
    else:
        assert reps == [1]


def test_element_wrapper_arithmetic():
    F = make_field(7)
    a = F(3)
    b = F(5)
    assert int(a + b) == 1
    assert int(a - b) == 5
    assert int(a * b) == 1
    assert int(a / b) == 2
    assert int(-a) == 4
    assert int(a ** 6) == 1
    assert int(2 + a) == 5
    assert int(1 / a) == 5
    assert a == 3 and a != 4
    assert a == F(3)
    assert hash(a) == hash(F(3))


def test_element_wrapper_rejects_field_mixing():
    a = make_field(5)(2)
    b = make_field(7)(2)
    with pytest.raises(ValueError):
        _ = a + b
    with pytest.raises(ValueError):
        _ = a == b


def test_element_validates_encoding():
    F = make_field(5)
    with pytest.raises(ValueError):
        Element(F, 5)
    assert int(F.element(4)) == 4


def test_modulus_str():
    assert make_field(2, 2).modulus_str() == "X^2 + X + 1"
    assert make_field(3, 2).modulus_str() == "X^2 + 1"
    assert make_field(7).modulus_str() == "prime field"
