"""Arithmetic in small finite fields GF(p^k).

Field elements are plain ints: the element with coefficient vector
(c0, c1, ..., c_{k-1}) over GF(p), meaning c0 + c1*X + ... modulo the
field's reduction polynomial, is encoded as the integer
c0 + c1*p + c2*p^2 + ... + c_{k-1}*p^(k-1).  Encodings 0 and 1 are the
additive and multiplicative identities, and iterating range(q) walks
every element in a canonical order.  All operations take and return
encodings; the thin Element wrapper layers operators on top for code
that prefers infix arithmetic.

The reduction polynomial is the monic irreducible of degree k whose
encoding (constant term least significant, leading coefficient dropped)
is smallest, so any two Field instances with the same (p, k) agree
element by element.
"""

from functools import lru_cache

MAX_ORDER = 1 << 20
MAX_DEGREE = 10

# Fields up to this order get multiplication via exp/log tables; larger
# ones fall back to per-call polynomial arithmetic.
_TABLE_LIMIT = 1 << 16


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n):
    """Prime factorization of n as {prime: exponent}, by trial division."""
    assert n >= 1
    out = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power_split(q):
    """Return (p, k) with q = p^k, or raise ValueError if q is not a prime power."""
    if not isinstance(q, int) or q < 2:
        raise ValueError("not a prime power: %r" % (q,))
    fac = factorize(q)
    if len(fac) != 1:
        raise ValueError("not a prime power: %d" % q)
    ((p, k),) = fac.items()
    return p, k


def is_prime_power(q):
    try:
        prime_power_split(q)
    except ValueError:
        return False
    return True


def prime_powers(limit, min_q=2):
    """All prime powers q with min_q <= q <= limit, ascending."""
    out = []
    for p in range(2, limit + 1):
        if not is_prime(p):
            continue
        q = p
        while q <= limit:
            if q >= min_q:
                out.append(q)
            q *= p
    out.sort()
    return out


# ---------------------------------------------------------------------------
# polynomial scaffolding over GF(p), used for modulus search and big fields.
# Polynomials are tuples of ints, index = degree, no trailing zeros.

def _ptrim(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _prem(a, m, p):
    """Remainder of a modulo the monic polynomial m."""
    a = list(a)
    dm = len(m) - 1
    while len(a) > dm:
        lead = a[-1]
        if lead:
            off = len(a) - 1 - dm
            for i in range(dm):
                a[off + i] = (a[off + i] - lead * m[i]) % p
        a.pop()
    return _ptrim(a)


def _digits(n, p, k):
    out = []
    for _ in range(k):
        out.append(n % p)
        n //= p
    return out


def _is_irreducible(f, p):
    """Trial division by every monic polynomial of degree 1..deg(f)//2."""
    k = len(f) - 1
    for d in range(1, k // 2 + 1):
        for n in range(p ** d):
            g = tuple(_digits(n, p, d)) + (1,)
            if not _prem(f, g, p):
                return False
    return True


def _smallest_irreducible(p, k):
    for n in range(p ** k):
        f = tuple(_digits(n, p, k)) + (1,)
        if _is_irreducible(f, p):
            return f
    raise AssertionError("no irreducible of degree %d over GF(%d)" % (k, p))


class Field:
    """GF(p^k) with int-encoded elements; see the module docstring."""

    __slots__ = (
        "p", "k", "q", "modulus",
        "add", "sub", "mul", "neg", "inv",
        "_coeffs", "_exp", "_log", "_gen",
        "_sqrt_map", "_cube_map", "_cube_reps",
    )

    def __init__(self, p, k=1):
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError("characteristic must be prime, got %r" % (p,))
        if not isinstance(k, int) or not 1 <= k <= MAX_DEGREE:
            raise ValueError("extension degree must be in 1..%d, got %r" % (MAX_DEGREE, k))
        q = p ** k
        if q > MAX_ORDER:
            raise ValueError("field order %d exceeds %d" % (q, MAX_ORDER))
        self.p = p
        self.k = k
        self.q = q
        self._gen = None
        self._sqrt_map = None
        self._cube_map = None
        self._cube_reps = None
        if k == 1:
            self.modulus = None
            self._coeffs = None
            self._exp = self._log = None
            self.add = lambda a, b: (a + b) % p
            self.sub = lambda a, b: (a - b) % p
            self.mul = lambda a, b: (a * b) % p
            self.neg = lambda a: (-a) % p
            def inv(a):
                if not a:
                    raise ZeroDivisionError("inverse of zero in GF(%d)" % q)
                return pow(a, p - 2, p)
            self.inv = inv
        else:
            self.modulus = _smallest_irreducible(p, k)
            if q <= _TABLE_LIMIT:
                self._init_tables()
            else:
                self._init_polyops()

    # -- construction helpers -------------------------------------------------

    def _encode(self, poly):
        e = 0
        for c in reversed(poly):
            e = e * self.p + c
        return e

    def _init_tables(self):
        p, k, q = self.p, self.k, self.q
        mod = self.modulus
        coeffs = [tuple(_digits(a, p, k)) for a in range(q)]
        self._coeffs = coeffs
        n = q - 1
        fac = list(factorize(n))

        def pmul(a, b):
            return _prem(_pmul(a, b, p), mod, p)

        def ppow(a, e):
            r = (1,)
            while e:
                if e & 1:
                    r = pmul(r, a)
                a = pmul(a, a)
                e >>= 1
            return r

        gen = None
        for g in range(2, q):
            gp = _ptrim(coeffs[g])
            if all(self._encode(ppow(gp, n // r)) != 1 for r in fac):
                gen = g
                break
        assert gen is not None
        self._gen = gen

        exp = [0] * n
        log = [0] * q
        cur = (1,)
        gp = _ptrim(coeffs[gen])
        for i in range(n):
            e = self._encode(cur)
            exp[i] = e
            log[e] = i
            cur = pmul(cur, gp)
        assert self._encode(cur) == 1, "generator order mismatch"
        self._exp, self._log = exp, log

        def mul(a, b):
            if a and b:
                return exp[(log[a] + log[b]) % n]
            return 0

        def inv(a):
            if not a:
                raise ZeroDivisionError("inverse of zero in GF(%d)" % q)
            return exp[(n - log[a]) % n]

        if p == 2:
            add = lambda a, b: a ^ b
            neg = lambda a: a
        else:
            pp = [p ** i for i in range(k)]
            negtab = [self._encode([(-c) % p for c in coeffs[a]]) for a in range(q)]

            def add(a, b):
                ca = coeffs[a]
                cb = coeffs[b]
                t = 0
                for i in range(k):
                    t += ((ca[i] + cb[i]) % p) * pp[i]
                return t

            neg = negtab.__getitem__

        self.add = add
        self.mul = mul
        self.neg = neg
        self.inv = inv
        self.sub = lambda a, b: add(a, neg(b))

    def _init_polyops(self):
        # big extension field: no tables, per-call polynomial arithmetic
        p, k, q = self.p, self.k, self.q
        mod = self.modulus
        self._coeffs = None
        self._exp = self._log = None
        enc = self._encode

        def mul(a, b):
            r = _pmul(_ptrim(_digits(a, p, k)), _ptrim(_digits(b, p, k)), p)
            return enc(_prem(r, mod, p))

        def add(a, b):
            ca = _digits(a, p, k)
            cb = _digits(b, p, k)
            return enc([(x + y) % p for x, y in zip(ca, cb)])

        def neg(a):
            return enc([(-c) % p for c in _digits(a, p, k)])

        def inv(a):
            if not a:
                raise ZeroDivisionError("inverse of zero in GF(%d)" % q)
            return self.pow(a, q - 2)

        self.add = add
        self.mul = mul
        self.neg = neg
        self.inv = inv
        self.sub = lambda a, b: add(a, neg(b))

    # -- basic API ------------------------------------------------------------

    def __repr__(self):
        if self.k == 1:
            return "GF(%d)" % self.q
        return "GF(%d^%d)" % (self.p, self.k)

    def elements(self):
        return range(self.q)

    def units(self):
        return range(1, self.q)

    def of_int(self, n):
        """Embed an ordinary integer via the prime subfield."""
        return n % self.p

    def element(self, enc):
        return Element(self, enc)

    def __call__(self, n):
        return Element(self, self.of_int(n))

    def coeffs(self, a):
        if not 0 <= a < self.q:
            raise ValueError("encoding %r out of range for %r" % (a, self))
        if self._coeffs is not None:
            return self._coeffs[a]
        return tuple(_digits(a, self.p, self.k))

    def from_coeffs(self, cs):
        cs = tuple(cs)
        if len(cs) != self.k:
            raise ValueError("expected %d coefficients, got %d" % (self.k, len(cs)))
        if any(not 0 <= c < self.p for c in cs):
            raise ValueError("coefficients must lie in [0, %d)" % self.p)
        return self._encode(cs)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        """a**e by square and multiply; e may be negative for units."""
        if not isinstance(e, int):
            raise ValueError("exponent must be an int")
        if e < 0:
            a = self.inv(a)
            e = -e
        if self.k == 1:
            return pow(a, e, self.p)
        if a == 0:
            return 0 if e else 1
        mul = self.mul
        r = 1
        while e:
            if e & 1:
                r = mul(r, a)
            a = mul(a, a)
            e >>= 1
        return r

    def modulus_str(self):
        if self.modulus is None:
            return "prime field"
        terms = []
        for d in range(self.k, -1, -1):
            c = self.modulus[d]
            if not c:
                continue
            if d == 0:
                terms.append(str(c))
            elif d == 1:
                terms.append("X" if c == 1 else "%dX" % c)
            else:
                terms.append("X^%d" % d if c == 1 else "%dX^%d" % (c, d))
        return " + ".join(terms)

    # -- characters, roots, traces -------------------------------------------

    def chi2(self, a):
        """Quadratic character: 0 at zero, +1 on squares, -1 otherwise."""
        if self.p == 2:
            raise ValueError("quadratic character needs odd characteristic")
        if not a:
            return 0
        if self._log is not None:
            return 1 if self._log[a] % 2 == 0 else -1
        if self._sqrt_map is None and self.q <= _TABLE_LIMIT:
            self._build_sqrt_map()
        if self._sqrt_map is not None:
            return 1 if a in self._sqrt_map else -1
        t = self.pow(a, (self.q - 1) // 2)
        if t == 1:
            return 1
        assert t == self.neg(1)
        return -1

    def _build_sqrt_map(self):
        mul = self.mul
        m = {}
        for x in self.units():
            m.setdefault(mul(x, x), x)
        self._sqrt_map = m

    def sqrt(self, a):
        """Both square roots of a, smaller encoding first, or None.

        Found by exhaustive search over the field (built once, then cached).
        """
        if self.p == 2:
            raise ValueError("square roots by search need odd characteristic")
        if not a:
            return (0, 0)
        if self._sqrt_map is None:
            self._build_sqrt_map()
        r = self._sqrt_map.get(a)
        if r is None:
            return None
        s = self.neg(r)
        return (r, s) if r <= s else (s, r)

    def trace(self, a):
        """Absolute trace down to GF(p), returned as an int in [0, p)."""
        t = a
        s = a
        for _ in range(self.k - 1):
            t = self.pow(t, self.p)
            s = self.add(s, t)
        assert s < self.p, "trace landed outside the prime subfield"
        return s

    def generator(self):
        """Smallest-encoded generator of the multiplicative group."""
        if self._gen is None:
            n = self.q - 1
            fac = list(factorize(n)) if n > 1 else []
            g = 1
            for g in self.units():
                if all(self.pow(g, n // r) != 1 for r in fac):
                    break
            self._gen = g
        return self._gen

    def third_roots_of_unity(self):
        """Solutions of x^3 = 1, ascending; three of them iff q = 1 mod 3."""
        q = self.q
        if (q - 1) % 3:
            return [1]
        z = self.pow(self.generator(), (q - 1) // 3)
        roots = sorted({1, z, self.mul(z, z)})
        assert len(roots) == 3
        return roots

    def is_cube(self, a):
        if a == 0 or (self.q - 1) % 3:
            return True
        return self.pow(a, (self.q - 1) // 3) == 1

    def cube_roots(self, a):
        """All y with y^3 = a, ascending encodings."""
        q = self.q
        if (q - 1) % 3 == 0:
            if self._cube_map is None:
                mul = self.mul
                m = {}
                for y in self.elements():
                    m.setdefault(mul(y, mul(y, y)), []).append(y)
                self._cube_map = m
            return list(self._cube_map.get(a, []))
        if a == 0:
            return [0]
        if self.p == 3:
            return [self.pow(a, 3 ** (self.k - 1))]
        e = pow(3, -1, q - 1)
        return [self.pow(a, e)]

    def cube_coset_reps(self):
        """Smallest-encoded representatives of the cube-class cosets of the units."""
        if self._cube_reps is None:
            if (self.q - 1) % 3:
                self._cube_reps = [1]
            else:
                c1 = next(x for x in self.units() if not self.is_cube(x))
                c2 = next(
                    x for x in self.units()
                    if not self.is_cube(x) and not self.is_cube(self.div(x, c1))
                )
                self._cube_reps = [1, c1, c2]
        return list(self._cube_reps)


class Element:
    """Operator wrapper around a Field and an int encoding."""

    __slots__ = ("field", "val")

    def __init__(self, field, val):
        if not 0 <= val < field.q:
            raise ValueError("encoding %r out of range for %r" % (val, field))
        self.field = field
        self.val = val

    def _coerce(self, other):
        if isinstance(other, Element):
            if other.field is not self.field:
                raise ValueError("elements of %r and %r cannot be mixed"
                                 % (self.field, other.field))
            return other.val
        if isinstance(other, int):
            return self.field.of_int(other)
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Element(self.field, self.field.add(self.val, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Element(self.field, self.field.sub(self.val, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Element(self.field, self.field.sub(v, self.val))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Element(self.field, self.field.mul(self.val, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Element(self.field, self.field.div(self.val, v))

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Element(self.field, self.field.div(v, self.val))

    def __pow__(self, e):
        return Element(self.field, self.field.pow(self.val, e))

    def __neg__(self):
        return Element(self.field, self.field.neg(self.val))

    def __eq__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return self.val == v

    def __hash__(self):
        return hash((id(self.field), self.val))

    def __int__(self):
        return self.val

    def __repr__(self):
        return "%r:%d" % (self.field, self.val)


@lru_cache(maxsize=None)
def make_field(p, k=1):
    """Shared Field instance for GF(p^k); repeated calls return the same object."""
    return Field(p, k)


def field_of_order(q):
    p, k = prime_power_split(q)
    return make_field(p, k)
