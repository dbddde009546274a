"""Curve families, validity conditions, Weierstrass models and j-invariants.

Five parametrized families are covered, in every characteristic where the
defining equation makes sense:

    legendre               y^2 = x(x-1)(x-u),           u not in {0,1}, p >= 3
    jacobi-quartic         y^2 = x^4 - 2ux^2 + 1,       u != +-1,       p >= 3
    jacobi-intersection    s^2 + c^2 = 1, us^2 + d^2 = 1, u not in {0,1}, p >= 3
    hessian                x^3 + y^3 + 1 = uxy,         u^3 != 27
    generalized-hessian    x^3 + y^3 + v = uxy,         v != 0, u^3 != 27v

Every family converts to a long Weierstrass model over the ground field.
The quartic and intersection forms use their standard cubic models; the
cubic families go through a flex-based projective reduction that works
uniformly in characteristics 2, 3 and above, with closed-form shortcuts
where a characteristic allows one.  Whenever a closed-form j exists it is
cross-checked against the model-derived j at computation time.
"""

from .gf import Field, field_of_order

FAMILY_NAMES = (
    "legendre",
    "jacobi-quartic",
    "jacobi-intersection",
    "hessian",
    "generalized-hessian",
)


class LongWeierstrass:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with int-encoded coefficients."""

    __slots__ = ("field", "a1", "a2", "a3", "a4", "a6", "_b", "_disc")

    def __init__(self, field, a1, a2, a3, a4, a6):
        self.field = field
        self.a1 = a1
        self.a2 = a2
        self.a3 = a3
        self.a4 = a4
        self.a6 = a6
        self._b = None
        self._disc = None

    def coefficients(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def invariants(self):
        """(b2, b4, b6, b8)."""
        if self._b is None:
            F = self.field
            add, sub, mul = F.add, F.sub, F.mul
            a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
            four = F.of_int(4)
            two = F.of_int(2)
            a1a1 = mul(a1, a1)
            b2 = add(a1a1, mul(four, a2))
            b4 = add(mul(a1, a3), mul(two, a4))
            b6 = add(mul(a3, a3), mul(four, a6))
            b8 = sub(
                add(add(mul(a1a1, a6), mul(four, mul(a2, a6))),
                    sub(mul(a2, mul(a3, a3)), mul(a1, mul(a3, a4)))),
                mul(a4, a4),
            )
            self._b = (b2, b4, b6, b8)
        return self._b

    @property
    def disc(self):
        if self._disc is None:
            F = self.field
            add, sub, mul = F.add, F.sub, F.mul
            b2, b4, b6, b8 = self.invariants()
            t1 = mul(mul(b2, b2), b8)
            t2 = mul(F.of_int(8), mul(b4, mul(b4, b4)))
            t3 = mul(F.of_int(27), mul(b6, b6))
            t4 = mul(F.of_int(9), mul(b2, mul(b4, b6)))
            self._disc = sub(t4, add(t1, add(t2, t3)))
        return self._disc

    def is_nonsingular(self):
        return self.disc != 0

    @property
    def j(self):
        if self.disc == 0:
            raise ValueError("j-invariant of a singular model")
        F = self.field
        b2, b4, _, _ = self.invariants()
        c4 = F.sub(F.mul(b2, b2), F.mul(F.of_int(24), b4))
        return F.div(F.mul(c4, F.mul(c4, c4)), self.disc)

    def transformed(self, u, r, s, t):
        """The model in coordinates x = u^2 x' + r, y = u^3 y' + u^2 s x' + t."""
        F = self.field
        if u == 0:
            raise ValueError("scaling factor must be a unit")
        add, sub, mul = F.add, F.sub, F.mul
        a1, a2, a3, a4, a6 = self.coefficients()
        two, three = F.of_int(2), F.of_int(3)
        iu = F.inv(u)
        iu2 = mul(iu, iu)
        iu3 = mul(iu2, iu)
        iu4 = mul(iu2, iu2)
        iu6 = mul(iu3, iu3)
        n1 = add(a1, mul(two, s))
        n2 = sub(add(a2, mul(three, r)), add(mul(s, a1), mul(s, s)))
        n3 = add(a3, add(mul(r, a1), mul(two, t)))
        n4 = sub(
            add(a4, add(mul(two, mul(r, a2)), mul(three, mul(r, r)))),
            add(add(mul(s, a3), mul(add(t, mul(r, s)), a1)),
                mul(two, mul(s, t))),
        )
        n6 = sub(
            add(a6, add(mul(r, a4), add(mul(mul(r, r), a2), mul(r, mul(r, r))))),
            add(add(mul(t, a3), mul(t, t)), mul(r, mul(t, a1))),
        )
        return LongWeierstrass(
            F,
            mul(n1, iu),
            mul(n2, iu2),
            mul(n3, iu3),
            mul(n4, iu4),
            mul(n6, iu6),
        )

    def __eq__(self, other):
        if not isinstance(other, LongWeierstrass):
            return NotImplemented
        return self.field is other.field and self.coefficients() == other.coefficients()

    def __hash__(self):
        return hash((id(self.field), self.coefficients()))

    def __repr__(self):
        return "LongWeierstrass(%r, a1=%d, a2=%d, a3=%d, a4=%d, a6=%d)" % (
            (self.field,) + self.coefficients())


def j_of_long_weierstrass(w):
    """(b2^2 - 24 b4)^3 / disc; raises ValueError on singular input."""
    return w.j


def short_model(field, A, B):
    """y^2 = x^3 + Ax + B as a LongWeierstrass."""
    return LongWeierstrass(field, 0, 0, 0, A, B)


# ---------------------------------------------------------------------------
# flex-based reduction of x^3 + y^3 + v z^3 = u xyz to Weierstrass form.
#
# The projective point P0 = (1 : -1 : 0) lies on the cubic for every u, v.
# A linear change of coordinates moves P0 to (0:1:0) and its tangent line
# to z = 0; the cubic is then asserted to have multiplicity-3 contact there
# (coefficients of Y^3, XY^2, X^2Y all vanish), after which a diagonal
# rescaling normalizes the leading terms.  Every step stays inside the
# ground field and no division by 2 or 3 occurs.

def _quad_product(F, r, s):
    mul, add = F.mul, F.add
    a0, a1, a2 = r
    b0, b1, b2 = s
    return (
        mul(a0, b0),
        add(mul(a0, b1), mul(a1, b0)),
        add(mul(a0, b2), mul(a2, b0)),
        mul(a1, b1),
        add(mul(a1, b2), mul(a2, b1)),
        mul(a2, b2),
    )


def _cubic_product(F, quad, t):
    mul, add = F.mul, F.add
    x2, xy, xz, y2, yz, z2 = quad
    c0, c1, c2 = t
    return [
        mul(x2, c0),
        add(mul(x2, c1), mul(xy, c0)),
        add(mul(x2, c2), mul(xz, c0)),
        add(mul(xy, c1), mul(y2, c0)),
        add(mul(xy, c2), add(mul(xz, c1), mul(yz, c0))),
        add(mul(xz, c2), mul(z2, c0)),
        mul(y2, c1),
        add(mul(y2, c2), mul(yz, c1)),
        add(mul(yz, c2), mul(z2, c1)),
        mul(z2, c2),
    ]


def _form_cube(F, r):
    return _cubic_product(F, _quad_product(F, r, r), r)


# cubic coefficient vector indices: X^3, X^2Y, X^2Z, XY^2, XYZ, XZ^2,
# Y^3, Y^2Z, YZ^2, Z^3
_X3, _X2Y, _X2Z, _XY2, _XYZ, _XZ2, _Y3, _Y2Z, _YZ2, _Z3 = range(10)


def flex_cubic_model(field, u, v):
    """Weierstrass model of x^3 + y^3 + v z^3 - u xyz over the ground field."""
    F = field
    q = F.q
    add, sub, mul, neg, inv = F.add, F.sub, F.mul, F.neg, F.inv
    three = F.of_int(3)

    p0 = (1, neg(1), 0)
    # gradient of the cubic at p0
    tangent = (three, three, u)
    assert tangent != (0, 0, 0), "tangent undefined; invalid parameters"

    def cross_is_zero(w):
        w0, w1, w2 = w
        t0, t1, t2 = tangent
        return (sub(mul(w1, t2), mul(w2, t1)) == 0
                and sub(mul(w2, t0), mul(w0, t2)) == 0
                and sub(mul(w0, t1), mul(w1, t0)) == 0)

    # smallest-encoded vector orthogonal to p0 and not parallel to the
    # tangent; the kernel of w . p0 is exactly {(a, a, b)}, enumerated in
    # ascending vector encoding (component 0 least significant)
    r1 = None
    for b in range(q):
        for a in range(q):
            if a == 0 and b == 0:
                continue
            w = (a, a, b)
            if not cross_is_zero(w):
                r1 = w
                break
        if r1 is not None:
            break
    assert r1 is not None

    # smallest-encoded vector with w . p0 != 0
    r2 = None
    for enc in range(1, q * q * q):
        w = (enc % q, (enc // q) % q, enc // (q * q))
        if sub(w[0], w[1]) != 0:
            r2 = w
            break
    assert r2 is not None

    n = (r1, r2, tangent)
    (na, nb, nc), (nd, ne, nf), (ng, nh, ni) = n
    co_a = sub(mul(ne, ni), mul(nf, nh))
    co_b = sub(mul(nf, ng), mul(nd, ni))
    co_c = sub(mul(nd, nh), mul(ne, ng))
    det = add(mul(na, co_a), add(mul(nb, co_b), mul(nc, co_c)))
    assert det != 0, "coordinate change is degenerate"
    idet = inv(det)
    m = (
        (mul(co_a, idet), mul(sub(mul(nc, nh), mul(nb, ni)), idet),
         mul(sub(mul(nb, nf), mul(nc, ne)), idet)),
        (mul(co_b, idet), mul(sub(mul(na, ni), mul(nc, ng)), idet),
         mul(sub(mul(nc, nd), mul(na, nf)), idet)),
        (mul(co_c, idet), mul(sub(mul(nb, ng), mul(na, nh)), idet),
         mul(sub(mul(na, ne), mul(nb, nd)), idet)),
    )

    # old coordinates as linear forms in the new ones: row i of m gives the
    # i-th old coordinate; expand x^3 + y^3 + v z^3 - u xyz
    g = _form_cube(F, m[0])
    for i, c in enumerate(_form_cube(F, m[1])):
        g[i] = add(g[i], c)
    for i, c in enumerate(_form_cube(F, m[2])):
        g[i] = add(g[i], mul(v, c))
    xyz = _cubic_product(F, _quad_product(F, m[0], m[1]), m[2])
    for i, c in enumerate(xyz):
        g[i] = sub(g[i], mul(u, c))

    assert g[_Y3] == 0, "base point missed the cubic"
    assert g[_XY2] == 0, "tangency failed"
    assert g[_X2Y] == 0, "flex multiplicity failed"
    alpha = g[_Y2Z]
    beta = g[_X3]
    assert alpha != 0 and beta != 0, "degenerate flex normalization"

    ab = mul(alpha, beta)
    ab2 = mul(ab, beta)        # alpha beta^2
    a2b2 = mul(ab, ab)         # alpha^2 beta^2
    a2b3 = mul(a2b2, beta)     # alpha^2 beta^3
    a3b4 = mul(a2b3, ab)       # alpha^3 beta^4
    a1 = neg(F.div(g[_XYZ], ab))
    a3 = F.div(g[_YZ2], a2b2)
    a2 = neg(F.div(g[_X2Z], ab2))
    a4 = F.div(g[_XZ2], a2b3)
    a6 = neg(F.div(g[_Z3], a3b4))
    return LongWeierstrass(F, a1, a2, a3, a4, a6)


# ---------------------------------------------------------------------------
# the family descriptors


class CurveDescriptor:
    """A family name, its parameters, and the field they live in."""

    __slots__ = ("family", "params", "field")

    def __init__(self, family, params, field):
        if family not in FAMILY_NAMES and family not in ("short-weierstrass", "long-weierstrass"):
            raise ValueError("unknown family %r" % (family,))
        self.family = family
        self.params = params
        self.field = field
        self.validate()

    def validate(self):
        F = self.field
        name = self.family
        if name in FAMILY_NAMES:
            get_family(name).validate(F, self.params)
        elif name == "short-weierstrass":
            A, B = self.params
            if not short_model(F, A, B).is_nonsingular():
                raise ValueError("singular short Weierstrass parameters")
        else:
            w = LongWeierstrass(F, *self.params)
            if not w.is_nonsingular():
                raise ValueError("singular long Weierstrass parameters")

    def model(self):
        name = self.family
        if name in FAMILY_NAMES:
            return get_family(name).model(self.field, self.params)
        if name == "short-weierstrass":
            return short_model(self.field, *self.params)
        return LongWeierstrass(self.field, *self.params)

    def __repr__(self):
        return "CurveDescriptor(%r, %r, %r)" % (self.family, self.params, self.field)


class _FamilyBase:
    name = None

    def supports(self, field):
        raise NotImplementedError

    def validate(self, field, param):
        if not self.supports(field):
            raise ValueError("%s curves need %s" % (self.name, self._support_note))
        if not self.is_valid(field, param):
            raise ValueError("invalid %s parameter %r over %r" % (self.name, param, field))

    def parameters(self, field):
        raise NotImplementedError

    def is_valid(self, field, param):
        raise NotImplementedError

    def model(self, field, param):
        raise NotImplementedError

    def j_from_model(self, field, param, w):
        """The curve's j, asserting closed forms against the model where they exist."""
        return w.j

    def j_invariant(self, field, param):
        self.validate(field, param)
        return self.j_from_model(field, param, self.model(field, param))

    def parameter_count(self, field):
        return sum(1 for _ in self.parameters(field))

    def __repr__(self):
        return "<family %s>" % self.name


class Legendre(_FamilyBase):
    name = "legendre"
    _support_note = "odd characteristic"

    def supports(self, field):
        return field.p >= 3

    def is_valid(self, field, u):
        return isinstance(u, int) and 0 <= u < field.q and u not in (0, 1)

    def parameters(self, field):
        return (u for u in field.elements() if u > 1)

    def model(self, field, u):
        # expand x(x-1)(x-u): a2 = -(u+1), a4 = u
        F = field
        w = LongWeierstrass(F, 0, F.neg(F.add(u, 1)), 0, u, 0)
        assert w.is_nonsingular()
        return w

    def closed_form_j(self, field, u):
        """2^8 (u^2-u+1)^3 / (u^2-u)^2; defined for p > 3."""
        F = field
        num = F.sub(F.add(F.mul(u, u), 1), u)
        den = F.sub(F.mul(u, u), u)
        return F.div(
            F.mul(F.of_int(256), F.mul(num, F.mul(num, num))),
            F.mul(den, den),
        )

    def j_from_model(self, field, param, w):
        j = w.j
        if field.p > 3:
            assert j == self.closed_form_j(field, param), \
                "closed-form j disagrees with the model"
        return j


class JacobiQuartic(_FamilyBase):
    name = "jacobi-quartic"
    _support_note = "odd characteristic"

    def supports(self, field):
        return field.p >= 3

    def is_valid(self, field, u):
        return (isinstance(u, int) and 0 <= u < field.q
                and u != 1 and u != field.neg(1))

    def parameters(self, field):
        minus_one = field.neg(1)
        return (u for u in field.elements() if u != 1 and u != minus_one)

    def model(self, field, u):
        # y^2 = x^3 - 4u x^2 + 4(u^2 - 1) x
        F = field
        four = F.of_int(4)
        a2 = F.neg(F.mul(four, u))
        a4 = F.mul(four, F.sub(F.mul(u, u), 1))
        w = LongWeierstrass(F, 0, a2, 0, a4, 0)
        assert w.is_nonsingular()
        return w

    def closed_form_j(self, field, u):
        """64 (u^2+3)^3 / (u^2-1)^2; defined for p > 3."""
        F = field
        num = F.add(F.mul(u, u), F.of_int(3))
        den = F.sub(F.mul(u, u), 1)
        return F.div(
            F.mul(F.of_int(64), F.mul(num, F.mul(num, num))),
            F.mul(den, den),
        )

    def j_from_model(self, field, param, w):
        j = w.j
        if field.p > 3:
            assert j == self.closed_form_j(field, param), \
                "closed-form j disagrees with the model"
        return j


class JacobiIntersection(_FamilyBase):
    name = "jacobi-intersection"
    _support_note = "odd characteristic"

    def supports(self, field):
        return field.p >= 3

    def is_valid(self, field, u):
        return isinstance(u, int) and 0 <= u < field.q and u not in (0, 1)

    def parameters(self, field):
        return (u for u in field.elements() if u > 1)

    def model(self, field, u):
        # the intersection form has the same cubic model as the Legendre curve
        F = field
        w = LongWeierstrass(F, 0, F.neg(F.add(u, 1)), 0, u, 0)
        assert w.is_nonsingular()
        return w

    def closed_form_j(self, field, u):
        return LEGENDRE.closed_form_j(field, u)

    def j_from_model(self, field, param, w):
        j = w.j
        if field.p > 3:
            assert j == self.closed_form_j(field, param), \
                "closed-form j disagrees with the model"
        return j


def hessian_short_AB(field, u):
    """(A_u, B_u) of the short model y^2 = x^3 + A_u x + B_u, for p > 3.

    A_u = -u(u^3 + 216)/3 and B_u = 2(u^6 - 540u^3 - 5832)/27; with this
    normalization 4A^3 + 27B^2 = -256(u^3 - 27)^3 and the model is
    isomorphic to the cubic over the ground field (scale 2u(u^3 - 27),
    checked directly at u = 0).
    """
    F = field
    assert F.p > 3
    u3 = F.mul(u, F.mul(u, u))
    A = F.neg(F.div(F.mul(u, F.add(u3, F.of_int(216))), F.of_int(3)))
    B = F.div(
        F.mul(F.of_int(2),
              F.sub(F.sub(F.mul(u3, u3), F.mul(F.of_int(540), u3)),
                    F.of_int(5832))),
        F.of_int(27),
    )
    return A, B


def hessian_binary_model(field, u):
    """(a, b) with y^2 + xy = x^3 + a x^2 + b the char-2 model: a = 1/u^3,
    b = ((1+u^3)/u^4)^3.  Needs p = 2 and u != 0."""
    F = field
    if F.p != 2:
        raise ValueError("binary Hessian model needs characteristic 2")
    if u == 0:
        raise ValueError("u = 0 is handled by the flex reduction")
    u3 = F.mul(u, F.mul(u, u))
    if u3 == 1:
        raise ValueError("u^3 = 1 is a singular parameter")
    a = F.inv(u3)
    t = F.div(F.add(1, u3), F.mul(u3, u))
    b = F.mul(t, F.mul(t, t))
    return a, b


class Hessian(_FamilyBase):
    name = "hessian"
    _support_note = "any characteristic"

    def supports(self, field):
        return True

    def is_valid(self, field, u):
        if not (isinstance(u, int) and 0 <= u < field.q):
            return False
        F = field
        return F.mul(u, F.mul(u, u)) != F.of_int(27)

    def parameters(self, field):
        F = field
        c27 = F.of_int(27)
        return (u for u in F.elements() if F.mul(u, F.mul(u, u)) != c27)

    def model(self, field, u):
        F = field
        if F.p > 3:
            A, B = hessian_short_AB(F, u)
            w = short_model(F, A, B)
        elif F.p == 2 and u != 0:
            a, b = hessian_binary_model(F, u)
            w = LongWeierstrass(F, 1, a, 0, 0, b)
        else:
            w = flex_cubic_model(F, u, 1)
        assert w.is_nonsingular()
        return w

    def closed_form_j(self, field, u):
        """F(u)^3 with F(U) = U(U^3+216)/(U^3-27); defined for p > 3."""
        f = hessian_rational_F(field, u)
        return field.mul(f, field.mul(f, f))

    def j_from_model(self, field, param, w):
        F = field
        j = w.j
        if F.p > 3:
            assert j == self.closed_form_j(F, param), \
                "closed-form j disagrees with the model"
        elif F.p == 2 and param != 0:
            # the binary model's j is 1/b; cross-check against the flex route
            assert j == F.inv(w.a6)
            assert j == flex_cubic_model(F, param, 1).j, \
                "binary model disagrees with the flex model"
        return j


class GeneralizedHessian(_FamilyBase):
    name = "generalized-hessian"
    _support_note = "any characteristic"

    def supports(self, field):
        return True

    def is_valid(self, field, param):
        try:
            u, v = param
        except (TypeError, ValueError):
            return False
        if not (isinstance(u, int) and isinstance(v, int)):
            return False
        F = field
        if not (0 <= u < F.q and 0 < v < F.q):
            return False
        return F.mul(u, F.mul(u, u)) != F.mul(F.of_int(27), v)

    def parameters(self, field):
        F = field
        c27 = F.of_int(27)
        for v in F.units():
            c = F.mul(c27, v)
            for u in F.elements():
                if F.mul(u, F.mul(u, u)) != c:
                    yield (u, v)

    def parameters_for_v(self, field, v):
        F = field
        c = F.mul(F.of_int(27), v)
        return (u for u in F.elements() if F.mul(u, F.mul(u, u)) != c)

    def model(self, field, param):
        u, v = param
        w = flex_cubic_model(field, u, v)
        assert w.is_nonsingular()
        return w

    def closed_form_j(self, field, param):
        """F_v(u)^3 / v with F_v(U) = U(U^3+216v)/(U^3-27v); defined for p > 3."""
        u, v = param
        f = gh_rational_F(field, v, u)
        return field.div(field.mul(f, field.mul(f, f)), v)

    def j_from_model(self, field, param, w):
        j = w.j
        if field.p > 3:
            assert j == self.closed_form_j(field, param), \
                "closed-form j disagrees with the model"
        return j


LEGENDRE = Legendre()
JACOBI_QUARTIC = JacobiQuartic()
JACOBI_INTERSECTION = JacobiIntersection()
HESSIAN = Hessian()
GENERALIZED_HESSIAN = GeneralizedHessian()

FAMILIES = {
    f.name: f
    for f in (LEGENDRE, JACOBI_QUARTIC, JACOBI_INTERSECTION, HESSIAN,
              GENERALIZED_HESSIAN)
}


def get_family(name):
    try:
        return FAMILIES[name]
    except KeyError:
        raise ValueError("unknown family %r" % (name,)) from None


def to_long_weierstrass(c):
    """Weierstrass model of a CurveDescriptor."""
    return c.model()


def j_invariant(c):
    """j of a CurveDescriptor, with closed-form cross-checks where available."""
    if c.family in FAMILY_NAMES:
        return get_family(c.family).j_invariant(c.field, c.params)
    return c.model().j


# ---------------------------------------------------------------------------
# the uncubed rational precursors of j and their difference factorizations


def legendre_rational_F(field, u):
    """2^8 (U^2-U+1)^3 / (U^2-U)^2 at u; poles at u in {0, 1}."""
    F = field
    den = F.sub(F.mul(u, u), u)
    if den == 0:
        raise ValueError("pole of the Legendre j-map at u=%d" % u)
    num = F.add(den, 1)
    return F.div(F.mul(F.of_int(256), F.mul(num, F.mul(num, num))),
                 F.mul(den, den))


def jacobi_quartic_rational_F(field, u):
    """64 (U^2+3)^3 / (U^2-1)^2 at u; poles at u = +-1."""
    F = field
    den = F.sub(F.mul(u, u), 1)
    if den == 0:
        raise ValueError("pole of the quartic j-map at u=%d" % u)
    num = F.add(F.mul(u, u), F.of_int(3))
    return F.div(F.mul(F.of_int(64), F.mul(num, F.mul(num, num))),
                 F.mul(den, den))


def hessian_rational_F(field, u):
    """U(U^3+216)/(U^3-27) at u; pole where u^3 = 27."""
    F = field
    u3 = F.mul(u, F.mul(u, u))
    den = F.sub(u3, F.of_int(27))
    if den == 0:
        raise ValueError("pole of the Hessian j-precursor at u=%d" % u)
    return F.div(F.mul(u, F.add(u3, F.of_int(216))), den)


def gh_rational_F(field, v, u):
    """U(U^3+216v)/(U^3-27v) at u; pole where u^3 = 27v."""
    F = field
    u3 = F.mul(u, F.mul(u, u))
    den = F.sub(u3, F.mul(F.of_int(27), v))
    if den == 0:
        raise ValueError("pole of the j-precursor at u=%d (v=%d)" % (u, v))
    return F.div(F.mul(u, F.add(u3, F.mul(F.of_int(216), v))), den)


def family_rational_F(family, field, u, v=None):
    """Dispatch to the family's uncubed j-precursor map."""
    if family == "legendre" or family == "jacobi-intersection":
        return legendre_rational_F(field, u)
    if family == "jacobi-quartic":
        return jacobi_quartic_rational_F(field, u)
    if family == "hessian":
        return hessian_rational_F(field, u)
    if family == "generalized-hessian":
        if v is None:
            raise ValueError("the generalized family needs the auxiliary v")
        return gh_rational_F(field, v, u)
    raise ValueError("no rational j-precursor for family %r" % (family,))


def difference_factorization_check(family, field, u, v):
    """Whether (F(u)-F(v)) times the denominator product equals the stated
    product of linear and quadratic factors; families legendre and hessian,
    p > 3 and no pole at u or v."""
    F = field
    if F.p <= 3:
        raise ValueError("difference factorization needs p > 3")
    sub, mul, add = F.sub, F.mul, F.add
    if family == "legendre":
        fu = legendre_rational_F(F, u)
        fv = legendre_rational_F(F, v)
        du = sub(mul(u, u), u)
        dv = sub(mul(v, v), v)
        lhs = mul(sub(fu, fv), mul(mul(du, du), mul(dv, dv)))
        uv = mul(u, v)
        rhs = mul(F.of_int(256), sub(u, v))
        rhs = mul(rhs, sub(add(u, v), 1))
        rhs = mul(rhs, sub(uv, 1))
        rhs = mul(rhs, add(sub(uv, v), 1))
        rhs = mul(rhs, add(sub(uv, u), 1))
        rhs = mul(rhs, sub(sub(uv, u), v))
        return lhs == rhs
    if family == "hessian":
        fu = hessian_rational_F(F, u)
        fv = hessian_rational_F(F, v)
        c27 = F.of_int(27)
        du = sub(mul(u, mul(u, u)), c27)
        dv = sub(mul(v, mul(v, v)), c27)
        lhs = mul(sub(fu, fv), mul(du, dv))
        u2 = mul(u, u)
        h = add(mul(add(add(u2, mul(F.of_int(3), u)), F.of_int(9)), mul(v, v)),
                add(mul(F.of_int(3),
                        mul(sub(add(u2, mul(F.of_int(12), u)), F.of_int(18)), v)),
                    mul(F.of_int(9),
                        add(sub(u2, mul(F.of_int(6), u)), F.of_int(36)))))
        mid = sub(sub(mul(u, v), mul(F.of_int(3), add(u, v))), F.of_int(18))
        rhs = mul(sub(u, v), mul(mid, h))
        return lhs == rhs
    raise ValueError("no difference factorization for family %r" % (family,))


def hessian_quartic_disc_check(field, u):
    """Whether the V-discriminant of the degree-4 difference polynomial g(u, V)
    equals -3^21 ((u^6 - 540u^3 - 5832)/27)^4; p > 3."""
    F = field
    if F.p <= 3:
        raise ValueError("needs p > 3")
    add, sub, mul = F.add, F.sub, F.mul
    u2 = mul(u, u)
    u3 = mul(u2, u)
    # g(u, V) expanded in V: (u - V)(uV - 3u - 3V - 18) h(u, V) with
    # h = (u^2+3u+9)V^2 + 3(u^2+12u-18)V + 9(u^2-6u+36)
    h2 = add(add(u2, mul(F.of_int(3), u)), F.of_int(9))
    h1 = mul(F.of_int(3), sub(add(u2, mul(F.of_int(12), u)), F.of_int(18)))
    h0 = mul(F.of_int(9), add(sub(u2, mul(F.of_int(6), u)), F.of_int(36)))
    # (u - V)(uV - 3u - 3V - 18) = (3 - u)V^2 + (u^2 + 18)V - 3u(u + 6)
    l2 = sub(F.of_int(3), u)
    l1 = add(u2, F.of_int(18))
    l0 = F.neg(mul(F.of_int(3), mul(u, add(u, F.of_int(6)))))
    # quartic = (l2 V^2 + l1 V + l0)(h2 V^2 + h1 V + h0)
    c4 = mul(l2, h2)
    c3 = add(mul(l2, h1), mul(l1, h2))
    c2 = add(add(mul(l2, h0), mul(l1, h1)), mul(l0, h2))
    c1 = add(mul(l1, h0), mul(l0, h1))
    c0 = mul(l0, h0)
    disc = _quartic_disc(F, c4, c3, c2, c1, c0)
    w = F.div(sub(sub(mul(u3, u3), mul(F.of_int(540), u3)), F.of_int(5832)),
              F.of_int(27))
    w2 = mul(w, w)
    rhs = F.neg(mul(F.of_int(3 ** 21), mul(w2, w2)))
    return disc == rhs


def _quartic_disc(F, a, b, c, d, e):
    """Discriminant of a x^4 + b x^3 + c x^2 + d x + e."""
    add, sub, mul = F.add, F.sub, F.mul
    n = F.of_int

    def term(k, *factors):
        t = n(abs(k))
        for f in factors:
            t = mul(t, f)
        return t if k >= 0 else F.neg(t)

    a2, b2, c2, d2, e2 = (mul(x, x) for x in (a, b, c, d, e))
    a3 = mul(a2, a)
    b3 = mul(b2, b)
    c3 = mul(c2, c)
    d3 = mul(d2, d)
    e3 = mul(e2, e)
    total = 0
    for t in (
        term(256, a3, e3),
        term(-192, a2, b, d, e2),
        term(-128, a2, c2, e2),
        term(144, a2, c, d2, e),
        term(-27, a2, mul(d2, d2)),
        term(144, a, b2, c, e2),
        term(-6, a, b2, d2, e),
        term(-80, a, b, c2, d, e),
        term(18, a, b, c, d3),
        term(16, a, mul(c2, c2), e),
        term(-4, a, c3, d2),
        term(-27, mul(b2, b2), e2),
        term(18, b3, c, d, e),
        term(-4, b3, d3),
        term(-4, b2, c3, e),
        term(1, b2, c2, d2),
    ):
        total = add(total, t)
    return total
