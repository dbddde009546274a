"""Exhaustive enumeration over small fields.

census builds, for one family and one field, the partition of valid
parameters into j-classes and into isomorphism classes, together with the
parameter-count histograms over class sizes.  The remaining operations are
smaller scans used as independent cross-checks: the quadratic-character
pair counts, a from-scratch census of all short Weierstrass curves, and
exact projective point counts.

Everything here enumerates; nothing consults the closed-form predictions.
"""

from .families import get_family, short_model
from .gf import field_of_order
from .iso import canonical_class_key

GUARDS = {
    "legendre": 1009,
    "jacobi-quartic": 1009,
    "jacobi-intersection": 1009,
    "hessian": 512,
    "generalized-hessian": 256,
    "generalized-hessian-iso": 128,
    "short-weierstrass": 199,
    "character-pairs": 1009,
    "points": 512,
}


def _size_hist(groups):
    """Histogram size -> number of parameters lying in classes of that size."""
    h = {}
    for g in groups:
        n = len(g)
        h[n] = h.get(n, 0) + n
    return {n: h[n] for n in sorted(h)}


class ClassPartition:
    """j-class and isomorphism-class partitions of one family's parameters."""

    __slots__ = ("family", "q", "j_classes", "iso_classes",
                 "param_to_j", "param_to_key", "n_hist", "m_hist")

    def __init__(self, family, q, j_classes, iso_classes,
                 param_to_j, param_to_key):
        self.family = family
        self.q = q
        self.j_classes = {j: sorted(ps) for j, ps in j_classes.items()}
        self.param_to_j = param_to_j
        self.n_hist = _size_hist(self.j_classes.values())
        if iso_classes is None:
            self.iso_classes = None
            self.param_to_key = None
            self.m_hist = None
        else:
            self.iso_classes = {k: sorted(ps) for k, ps in iso_classes.items()}
            self.param_to_key = param_to_key
            self.m_hist = _size_hist(self.iso_classes.values())

    @property
    def param_count(self):
        return len(self.param_to_j)

    @property
    def j_count(self):
        return len(self.j_classes)

    @property
    def iso_count(self):
        return None if self.iso_classes is None else len(self.iso_classes)

    def j_class_of(self, param):
        return self.j_classes[self.param_to_j[param]]

    def iso_class_of(self, param):
        if self.iso_classes is None:
            raise ValueError("census was run without isomorphism classes")
        return self.iso_classes[self.param_to_key[param]]

    def __repr__(self):
        return "ClassPartition(%s, q=%d, J=%d, I=%s)" % (
            self.family, self.q, self.j_count, self.iso_count)


def census(family, q, *, with_iso=None, unguarded=False):
    """Enumerate every valid parameter of the family over GF(q) and
    partition them by j and (unless disabled) by isomorphism class.

    For the two-parameter family, with_iso=False restricts the scan to one
    v per cube coset, which loses nothing for j-counting; the full scan
    carries an internal cross-check that the restriction is sound.
    """
    fam = get_family(family) if isinstance(family, str) else family
    F = field_of_order(q)
    if not fam.supports(F):
        raise ValueError("%s does not support characteristic %d" % (fam.name, F.p))
    two_param = fam.name == "generalized-hessian"
    if with_iso is None:
        with_iso = q <= GUARDS["generalized-hessian-iso"] if two_param else True
    guard = GUARDS["generalized-hessian-iso" if two_param and with_iso
                   else fam.name]
    if q > guard and not unguarded:
        raise ValueError(
            "census(%s, %d) exceeds the q <= %d guard; "
            "pass unguarded=True to override" % (fam.name, q, guard))

    if two_param:
        reps = set(F.cube_coset_reps())
        vs = sorted(reps) if not with_iso else list(F.units())
        params = ((u, v) for v in vs for u in fam.parameters_for_v(F, v))
    else:
        params = fam.parameters(F)

    j_classes = {}
    iso_classes = {} if with_iso else None
    param_to_j = {}
    param_to_key = {} if with_iso else None
    rep_js = set()
    for p in params:
        w = fam.model(F, p)
        j = fam.j_from_model(F, p, w)
        j_classes.setdefault(j, []).append(p)
        param_to_j[p] = j
        if two_param and p[1] in reps:
            rep_js.add(j)
        if with_iso:
            key = canonical_class_key(w)
            iso_classes.setdefault(key, []).append(p)
            param_to_key[p] = key
    if two_param:
        # one v per cube coset already realizes every j
        assert rep_js == set(j_classes), \
            "restricting v to cube-coset representatives lost a j value"
    if with_iso:
        for cls in iso_classes.values():
            assert len({param_to_j[p] for p in cls}) == 1, \
                "an isomorphism class straddles two j values"
    return ClassPartition(fam.name, q, j_classes, iso_classes,
                          param_to_j, param_to_key)


def s_ij_census(q, *, unguarded=False):
    """Counts of u outside {0, 1} by the signs (chi2(u), chi2(1-u));
    odd characteristic only."""
    F = field_of_order(q)
    if F.p == 2:
        raise ValueError("quadratic-character counts need odd characteristic")
    if q > GUARDS["character-pairs"] and not unguarded:
        raise ValueError("character-pair census guarded at q <= %d"
                         % GUARDS["character-pairs"])
    counts = {(1, 1): 0, (1, -1): 0, (-1, 1): 0, (-1, -1): 0}
    chi = F.chi2
    for u in range(2, q):
        counts[(chi(u), chi(F.sub(1, u)))] += 1
    return counts


def baseline_short_weierstrass_census(q, *, unguarded=False):
    """Number of isomorphism classes among all curves y^2 = x^3 + Ax + B
    over GF(q), for p > 3, counted from scratch."""
    F = field_of_order(q)
    if F.p <= 3:
        raise ValueError("short Weierstrass census needs characteristic > 3")
    if q > GUARDS["short-weierstrass"] and not unguarded:
        raise ValueError("short Weierstrass census guarded at q <= %d"
                         % GUARDS["short-weierstrass"])
    keys = set()
    mul, add = F.mul, F.add
    c4, c27 = F.of_int(4), F.of_int(27)
    for A in F.elements():
        dA = mul(c4, F.pow(A, 3))
        for B in F.elements():
            if add(dA, mul(c27, mul(B, B))) == 0:
                continue
            keys.add(canonical_class_key(short_model(F, A, B)))
    return len(keys)


def projective_point_count(c):
    """Exact number of projective points of a CurveDescriptor: on the plane
    cubic X^3 + Y^3 + vZ^3 = uXYZ for the Hessian families, or on the
    projective closure of a Weierstrass model."""
    F = c.field
    q = F.q
    if q > GUARDS["points"]:
        raise ValueError("point counting guarded at q <= %d" % GUARDS["points"])
    add, mul = F.add, F.mul
    if c.family in ("hessian", "generalized-hessian"):
        if c.family == "hessian":
            u, v = c.params, 1
        else:
            u, v = c.params
        cubes = [F.pow(x, 3) for x in range(q)]
        n = 0
        for x in range(q):
            cx = add(cubes[x], v)
            ux = mul(u, x)
            for y in range(q):
                if add(cx, cubes[y]) == mul(ux, y):
                    n += 1
        minus1 = F.neg(1)
        return n + sum(1 for x in range(1, q) if cubes[x] == minus1)
    if c.family not in ("short-weierstrass", "long-weierstrass"):
        raise ValueError("no point-count model for family %r" % (c.family,))
    w = c.model()
    a1, a2, a3, a4, a6 = w.coefficients()
    n = 1  # the single point at infinity
    if F.p == 2:
        for x in range(q):
            fx = add(mul(add(mul(add(x, a2), x), a4), x), a6)
            lin = add(mul(a1, x), a3)
            if lin == 0:
                n += 1
            elif F.trace(F.div(fx, mul(lin, lin))) == 0:
                n += 2
    else:
        inv4 = F.inv(F.of_int(4))
        chi = F.chi2
        for x in range(q):
            fx = add(mul(add(mul(add(x, a2), x), a4), x), a6)
            lin = add(mul(a1, x), a3)
            n += 1 + chi(add(fx, mul(inv4, mul(lin, lin))))
    return n
