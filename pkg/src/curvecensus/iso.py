"""Isomorphism testing over the ground field.

Three layers, each validating the one above it:

  * family predicates (legendre_iso, hessian_iso) decide isomorphism
    directly from the parameters;
  * weierstrass_iso decides it on Weierstrass models via characteristic-
    specific reduced forms, in O(1) field operations for most shapes;
  * weierstrass_iso_oracle enumerates every admissible change of variables
    (u, r, s, t) and is the ground truth on small fields.

canonical_class_key assigns each curve the orbit-minimal reduced
coefficient tuple (prefixed by j) so that censuses can group classes by
hashing instead of pairwise tests.
"""

from functools import lru_cache
from math import gcd

from .families import get_family

ORACLE_MAX_Q = 64


# ---------------------------------------------------------------------------
# family-parameter predicates


def legendre_iso(field, u, v):
    """Whether the curves y^2 = x(x-1)(x-t) at t = u and t = v are isomorphic
    over the field; p >= 3 and both parameters outside {0, 1}."""
    F = field
    if F.p < 3:
        raise ValueError("Legendre parameters need odd characteristic")
    for t in (u, v):
        if not 0 <= t < F.q or t in (0, 1):
            raise ValueError("invalid Legendre parameter %r" % (t,))
    if v == u:
        return True
    chi = F.chi2
    if v == F.inv(u) and chi(u) == 1:
        return True
    if v == F.sub(1, u) and chi(F.neg(1)) == 1:
        return True
    if v == F.inv(F.sub(1, u)) and chi(F.sub(u, 1)) == 1:
        return True
    if v == F.div(F.sub(u, 1), u) and chi(F.neg(u)) == 1:
        return True
    if v == F.div(u, F.sub(u, 1)) and chi(F.sub(1, u)) == 1:
        return True
    return False


def hessian_iso(field, u, v):
    """Whether the cubics x^3 + y^3 + 1 = txy at t = u and t = v are
    isomorphic over the field; u^3 != 27 and v^3 != 27."""
    F = field
    c27 = F.of_int(27)
    for t in (u, v):
        if not 0 <= t < F.q or F.pow(t, 3) == c27:
            raise ValueError("invalid parameter %r" % (t,))
    zetas = F.third_roots_of_unity()
    for z1 in zetas:
        if v == F.mul(z1, u):
            return True
    if (F.q - 1) % 3 == 0:
        three = F.of_int(3)
        six = F.of_int(6)
        for z2 in zetas:
            den = F.sub(u, F.mul(three, z2))
            if den == 0:
                continue
            base = F.div(F.mul(three, F.add(u, F.mul(six, z2))), den)
            for z1 in zetas:
                if v == F.mul(z1, base):
                    return True
    return False


# ---------------------------------------------------------------------------
# reduced forms per characteristic


def short_form(w):
    """(A, B) with the model isomorphic to y^2 = x^3 + Ax + B; needs p >= 5."""
    F = w.field
    assert F.p >= 5
    if w.a1 == 0 and w.a2 == 0 and w.a3 == 0:
        return w.a4, w.a6
    # kill a1 and a3 by completing the square, then shift out a2
    two = F.of_int(2)
    flat = w.transformed(1, 0, F.neg(F.div(w.a1, two)), F.neg(F.div(w.a3, two)))
    dep = flat.transformed(1, F.neg(F.div(flat.a2, F.of_int(3))), 0, 0)
    assert dep.a1 == 0 and dep.a2 == 0 and dep.a3 == 0
    return dep.a4, dep.a6


def _char3_reduced(w):
    """("nz", a2, a6) for j != 0 or ("z", a4, a6) for j = 0, after completing
    the square and shifting; characteristic 3."""
    F = w.field
    assert F.p == 3
    flat = w.transformed(1, 0, F.neg(F.div(w.a1, F.of_int(2))),
                         F.neg(F.div(w.a3, F.of_int(2))))
    assert flat.a1 == 0 and flat.a3 == 0
    if flat.a2 != 0:
        shifted = flat.transformed(1, F.div(flat.a4, flat.a2), 0, 0)
        assert shifted.a4 == 0
        return ("nz", shifted.a2, shifted.a6)
    return ("z", flat.a4, flat.a6)


def _char2_reduced(w):
    """("nz", a2, a6) in the form y^2 + xy = x^3 + a2 x^2 + a6 when a1 != 0,
    else ("z", a3, a4, a6) in the form y^2 + a3 y = x^3 + a4 x + a6."""
    F = w.field
    assert F.p == 2
    if w.a1 != 0:
        t = w.transformed(w.a1, 0, 0, 0)
        t = t.transformed(1, t.a3, 0, 0)
        t = t.transformed(1, 0, 0, t.a4)
        assert t.a1 == 1 and t.a3 == 0 and t.a4 == 0
        return ("nz", t.a2, t.a6)
    t = w.transformed(1, w.a2, 0, 0)
    assert t.a1 == 0 and t.a2 == 0
    return ("z", t.a3, t.a4, t.a6)


# ---------------------------------------------------------------------------
# per-field lookup tables for d-th-power cosets


class _PowerTables:
    """For a fixed d: coset minima of x (F*)^d, one d-th root per d-th power,
    and the d-th roots of unity."""

    __slots__ = ("cmin", "root", "mu")

    def __init__(self, F, d):
        q = F.q
        n = q - 1
        mul = F.mul
        g = F.generator()
        # subgroup of d-th powers, as a list
        gd = F.pow(g, d)
        sub = [1]
        x = gd
        while x != 1:
            sub.append(x)
            x = mul(x, gd)
        root = {}
        for a in range(1, q):
            y = F.pow(a, d)
            if y not in root:
                root[y] = a
        cmin = {}
        for a in range(1, q):
            if a in cmin:
                continue
            coset = [mul(a, s) for s in sub]
            m = min(coset)
            for y in coset:
                cmin[y] = m
        k = gcd(d, n)
        step = F.pow(g, n // k)
        mu = [1]
        x = step
        while x != 1:
            mu.append(x)
            x = mul(x, step)
        mu.sort()
        self.cmin = cmin
        self.root = root
        self.mu = mu


@lru_cache(maxsize=None)
def _power_tables(F, d):
    return _PowerTables(F, d)


@lru_cache(maxsize=None)
def _min_trace_one(F):
    for x in F.elements():
        if F.trace(x) == 1:
            return x
    raise AssertionError("trace map is onto; unreachable")


# ---------------------------------------------------------------------------
# the decision procedure and canonical keys


def _check_pair(w1, w2):
    if w1.field is not w2.field:
        raise ValueError("models live in different fields")
    if w1.disc == 0 or w2.disc == 0:
        raise ValueError("singular model")


def weierstrass_iso(w1, w2):
    """Whether two nonsingular long Weierstrass models over the same field
    are isomorphic over that field."""
    _check_pair(w1, w2)
    F = w1.field
    if w1.j != w2.j:
        return False
    p = F.p
    if p >= 5:
        A1, B1 = short_form(w1)
        A2, B2 = short_form(w2)
        n = F.q - 1
        if A1 == 0:
            # j = 0: isomorphic iff B1/B2 is a sixth power
            assert A2 == 0
            return F.pow(F.div(B1, B2), n // gcd(6, n)) == 1
        if B1 == 0:
            # j = 1728: isomorphic iff A1/A2 is a fourth power
            assert B2 == 0
            return F.pow(F.div(A1, A2), n // gcd(4, n)) == 1
        # generic j: the square class of AB is a complete invariant
        return F.chi2(F.mul(A1, B1)) == F.chi2(F.mul(A2, B2))
    if p == 3:
        s1 = _char3_reduced(w1)
        s2 = _char3_reduced(w2)
        assert s1[0] == s2[0]
        if s1[0] == "nz":
            _, a2a, a6a = s1
            _, a2b, a6b = s2
            rho = F.div(a2a, a2b)
            return F.chi2(rho) == 1 and a6a == F.mul(a6b, F.pow(rho, 3))
        _, a4a, a6a = s1
        _, a4b, a6b = s2
        for u in F.units():
            if a4a != F.mul(F.pow(u, 4), a4b):
                continue
            target = F.mul(F.pow(u, 6), a6b)
            for r in F.elements():
                if F.add(a6a, F.add(F.mul(r, a4a), F.pow(r, 3))) == target:
                    return True
        return False
    # p == 2
    s1 = _char2_reduced(w1)
    s2 = _char2_reduced(w2)
    assert s1[0] == s2[0]
    if s1[0] == "nz":
        _, a2a, a6a = s1
        _, a2b, a6b = s2
        return a6a == a6b and F.trace(F.add(a2a, a2b)) == 0
    _, a3a, a4a, a6a = s1
    _, a3b, a4b, a6b = s2
    inv_a3_sq = F.inv(F.mul(a3a, a3a))
    for u in F.cube_roots(F.div(a3a, a3b)):
        u4 = F.pow(u, 4)
        u6 = F.pow(u, 6)
        for s in F.elements():
            if F.add(a4a, F.add(F.mul(s, a3a), F.pow(s, 4))) != F.mul(u4, a4b):
                continue
            ss = F.mul(s, s)
            c = F.add(F.add(a6a, F.mul(ss, a4a)),
                      F.add(F.mul(ss, F.mul(ss, ss)), F.mul(u6, a6b)))
            if F.trace(F.mul(c, inv_a3_sq)) == 0:
                return True
    return False


def weierstrass_iso_oracle(w1, w2):
    """Definition-level search over all admissible (u, r, s, t); the ground
    truth for small fields (q <= 64)."""
    _check_pair(w1, w2)
    F = w1.field
    if F.q > ORACLE_MAX_Q:
        raise ValueError("field too large for the enumeration oracle")
    add, sub, mul = F.add, F.sub, F.mul
    two, three = F.of_int(2), F.of_int(3)
    a1, a2, a3, a4, a6 = w1.coefficients()
    b1, b2, b3, b4, b6 = w2.coefficients()
    for u in F.units():
        u2 = mul(u, u)
        u3 = mul(u2, u)
        t1 = mul(u, b1)
        t2 = mul(u2, b2)
        t3 = mul(u3, b3)
        t4 = mul(mul(u2, u2), b4)
        t6 = mul(u3, mul(u3, b6))
        for s in F.elements():
            if add(a1, mul(two, s)) != t1:
                continue
            sa1 = mul(s, a1)
            ss = mul(s, s)
            for r in F.elements():
                if sub(add(a2, mul(three, r)), add(sa1, ss)) != t2:
                    continue
                ra1 = mul(r, a1)
                for t in F.elements():
                    if add(a3, add(ra1, mul(two, t))) != t3:
                        continue
                    c4 = sub(
                        add(a4, add(mul(two, mul(r, a2)), mul(three, mul(r, r)))),
                        add(add(mul(s, a3), mul(add(t, mul(r, s)), a1)),
                            mul(two, mul(s, t))),
                    )
                    if c4 != t4:
                        continue
                    c6 = sub(
                        add(a6, add(mul(r, a4),
                                    add(mul(mul(r, r), a2), mul(r, mul(r, r))))),
                        add(add(mul(t, a3), mul(t, t)), mul(r, mul(t, a1))),
                    )
                    if c6 == t6:
                        return True
    return False


def canonical_class_key(w):
    """Orbit-minimal reduced coefficient tuple, prefixed by j.  Two models
    receive equal keys exactly when weierstrass_iso accepts them."""
    F = w.field
    if w.disc == 0:
        raise ValueError("singular model")
    j = w.j
    p = F.p
    if p >= 5:
        A, B = short_form(w)
        if A == 0:
            return (j, 0, _power_tables(F, 6).cmin[B])
        if B == 0:
            return (j, _power_tables(F, 4).cmin[A], 0)
        t4 = _power_tables(F, 4)
        m4 = t4.cmin[A]
        a0 = t4.root[F.div(m4, A)]
        base = F.mul(B, F.pow(a0, 6))
        best = None
        for z in t4.mu:
            cand = F.mul(base, F.mul(z, z))
            if best is None or cand < best:
                best = cand
        return (j, m4, best)
    if p == 3:
        shape = _char3_reduced(w)
        if shape[0] == "nz":
            _, a2, a6 = shape
            t2 = _power_tables(F, 2)
            m2 = t2.cmin[a2]
            sigma = F.div(m2, a2)
            return (j, m2, F.mul(a6, F.pow(sigma, 3)))
        _, a4, a6 = shape
        t4 = _power_tables(F, 4)
        m4 = t4.cmin[a4]
        u0 = t4.root[F.div(a4, m4)]
        m6 = None
        for z in t4.mu:
            u = F.mul(u0, z)
            iu6 = F.inv(F.pow(u, 6))
            for r in F.elements():
                val = F.mul(F.add(a6, F.add(F.mul(r, a4), F.pow(r, 3))), iu6)
                if m6 is None or val < m6:
                    m6 = val
        return (j, m4, m6)
    # p == 2
    shape = _char2_reduced(w)
    if shape[0] == "nz":
        _, a2, a6 = shape
        rep = 0 if F.trace(a2) == 0 else _min_trace_one(F)
        return (j, rep, a6)
    _, a3, a4, a6 = shape
    t3 = _power_tables(F, 3)
    m3 = t3.cmin[a3]
    m4 = None
    stage = []
    for u in F.cube_roots(F.div(a3, m3)):
        iu4 = F.inv(F.pow(u, 4))
        for s in F.elements():
            val = F.mul(F.add(a4, F.add(F.mul(s, a3), F.pow(s, 4))), iu4)
            if m4 is None or val < m4:
                m4 = val
                stage = [(u, s)]
            elif val == m4:
                stage.append((u, s))
    m6 = None
    for (u, s) in stage:
        iu6 = F.inv(F.pow(u, 6))
        ss = F.mul(s, s)
        c0 = F.add(a6, F.add(F.mul(ss, a4), F.mul(ss, F.mul(ss, ss))))
        for t in F.elements():
            val = F.mul(F.add(c0, F.add(F.mul(t, a3), F.mul(t, t))), iu6)
            if m6 is None or val < m6:
                m6 = val
    return (j, m3, m4, m6)


def class_sets(family, field, param):
    """(J_set, I_set) for one parameter: all valid parameters sharing its j,
    and the subset isomorphic to it over the field."""
    fam = get_family(family) if isinstance(family, str) else family
    fam.validate(field, param)
    j0 = fam.j_invariant(field, param)
    jset = {t for t in fam.parameters(field)
            if fam.j_invariant(field, t) == j0}
    if fam.name == "legendre":
        iset = {t for t in jset if legendre_iso(field, param, t)}
    elif fam.name == "hessian":
        iset = {t for t in jset if hessian_iso(field, param, t)}
    else:
        k0 = canonical_class_key(fam.model(field, param))
        iset = {t for t in jset
                if canonical_class_key(fam.model(field, t)) == k0}
    assert param in iset and iset <= jset
    return jset, iset
