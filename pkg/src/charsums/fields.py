"""Two-level finite field tower F_p < F_q < F_{q^n} with exact arithmetic.

Conventions used everywhere downstream:

* An element of the middle field F_q = F_p[y]/(h) is an int in [0, q) whose
  base-p digits are the coefficients of the residue polynomial, constant
  digit first.  Encoded 0 is the zero element, encoded 1 is one.
* An element of the top field F_{q^n} = F_q[x]/(g) is a length-n tuple of
  such ints, coefficient of x^0 first, wrapped in `Element`.
* Polynomial coefficient sequences are always stored constant-term first
  with no trailing zeros (the zero polynomial is the empty tuple).

The same `Poly` class serves F_p, F_q and F_{q^n} coefficients: it only needs
the handful of ring ops that `BaseField` and `_ExtOps` both expose.
"""

from . import arith
from .util import CapExceeded, derive_rng

_TABLE_CAP = 1 << 20  # largest middle field we are willing to build log tables for
_DIGIT_CACHE_CAP = 1 << 16


class BaseField:
    """F_q = F_p[y]/(h) with elements encoded as ints in [0, q).

    For k = 1 arithmetic is plain mod-p.  For k > 1 multiplication and
    inversion go through discrete exp/log tables built once at construction,
    which keeps top-field arithmetic cheap inside enumeration loops.
    """

    def __init__(self, p, modulus):
        if not arith.is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        modulus = tuple(c % p for c in modulus)
        if len(modulus) < 2 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree >= 1")
        self.p = self.char = p
        self.k = len(modulus) - 1
        self.q = self.size = p**self.k
        self.modulus = modulus
        self.zero, self.one = 0, 1 % self.q
        if self.k > 1:
            if self.q > _TABLE_CAP:
                raise CapExceeded(f"middle field size {self.q} exceeds table cap {_TABLE_CAP}")
            # a reducible modulus would let the generator scan accept a unit
            # of the quotient ring and build silently wrong tables
            if not is_irreducible(Poly(BaseField(p, (0, 1)), modulus)):
                raise ValueError(f"modulus {list(modulus)} is reducible over F_{p}")
            self._digits_cache = (
                [self._decode(a) for a in range(self.q)] if self.q <= _DIGIT_CACHE_CAP else None
            )
            self._build_log_tables()

    # ---- digit codecs ----------------------------------------------------

    def _decode(self, a):
        p, k = self.p, self.k
        out = [0] * k
        for i in range(k):
            a, out[i] = divmod(a, p)
        return out

    def _encode(self, digits):
        out = 0
        for d in reversed(digits):
            out = out * self.p + d
        return out

    def digits(self, a):
        if self.k == 1:
            return [a]
        if self._digits_cache is not None:
            return self._digits_cache[a]
        return self._decode(a)

    # ---- raw polynomial arithmetic, used for table construction ----------

    def _raw_mul(self, a, b):
        p, k, m = self.p, self.k, self.modulus
        da, db = self.digits(a), self.digits(b)
        prod_digits = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod_digits[i + j] = (prod_digits[i + j] + x * y) % p
        for idx in range(2 * k - 2, k - 1, -1):
            c = prod_digits[idx]
            if c:
                prod_digits[idx] = 0
                for j in range(k):
                    prod_digits[idx - k + j] = (prod_digits[idx - k + j] - c * m[j]) % p
        return self._encode(prod_digits[:k])

    def _build_log_tables(self):
        q = self.q
        fac = arith.factorize(q - 1)

        def raw_pow(a, e):
            r = 1
            while e:
                if e & 1:
                    r = self._raw_mul(r, a)
                a = self._raw_mul(a, a)
                e >>= 1
            return r

        gen = None
        for cand in range(2, q):
            if all(raw_pow(cand, (q - 1) // r) != 1 for r in fac.prime_list()):
                gen = cand
                break
        if gen is None:  # q = 2 never reaches here; guard anyway
            raise RuntimeError("no generator found for middle field")
        exp = [1] * (q - 1)
        log = [0] * q
        acc = 1
        for i in range(1, q - 1):
            acc = self._raw_mul(acc, gen)
            exp[i] = acc
            log[acc] = i
        self._exp, self._log = exp, log

    # ---- field ops on encoded ints ---------------------------------------

    def add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        da, db = self.digits(a), self.digits(b)
        return self._encode([(x + y) % p for x, y in zip(da, db)])

    def sub(self, a, b):
        if self.k == 1:
            return (a - b) % self.p
        p = self.p
        da, db = self.digits(a), self.digits(b)
        return self._encode([(x - y) % p for x, y in zip(da, db)])

    def neg(self, a):
        if self.k == 1:
            return (-a) % self.p
        p = self.p
        return self._encode([(-x) % p for x in self.digits(a)])

    def mul(self, a, b):
        if self.k == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in middle field")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def pow(self, a, e):
        if a == 0:
            if e == 0:
                return self.one
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        e %= self.q - 1
        if self.k == 1:
            return pow(a, e, self.p)
        return self._exp[self._log[a] * e % (self.q - 1)]

    def from_int(self, m):
        """Image of the rational integer m, i.e. m mod p in the prime subfield."""
        return m % self.p

    def elements(self):
        return range(self.q)

    def __repr__(self):
        return f"BaseField(p={self.p}, k={self.k})"


class Poly:
    """Dense univariate polynomial over any object exposing the BaseField ops."""

    __slots__ = ("ops", "coeffs")

    def __init__(self, ops, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == ops.zero:
            coeffs.pop()
        self.ops = ops
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, ops):
        return cls(ops, ())

    @classmethod
    def one(cls, ops):
        return cls(ops, (ops.one,))

    @classmethod
    def x(cls, ops):
        return cls(ops, (ops.zero, ops.one))

    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self):
        return not self.is_zero() and self.coeffs[-1] == self.ops.one

    def coeff(self, i):
        return self.coeffs[i] if i < len(self.coeffs) else self.ops.zero

    def __eq__(self, other):
        return (
            isinstance(other, Poly) and self.ops is other.ops and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        ops = self.ops
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = ops.add(out[i], c)
        return Poly(ops, out)

    def __sub__(self, other):
        ops = self.ops
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(
            ops, [ops.sub(self.coeff(i), other.coeff(i)) for i in range(n)]
        )

    def __neg__(self):
        return Poly(self.ops, [self.ops.neg(c) for c in self.coeffs])

    def __mul__(self, other):
        ops = self.ops
        if self.is_zero() or other.is_zero():
            return Poly.zero(ops)
        out = [ops.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a != ops.zero:
                for j, b in enumerate(other.coeffs):
                    if b != ops.zero:
                        out[i + j] = ops.add(out[i + j], ops.mul(a, b))
        return Poly(ops, out)

    def scale(self, c):
        ops = self.ops
        if c == ops.zero:
            return Poly.zero(ops)
        return Poly(ops, [ops.mul(c, a) for a in self.coeffs])

    def __divmod__(self, other):
        ops = self.ops
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dv = other.coeffs
        dd = len(dv) - 1
        inv_lead = ops.inv(dv[-1])
        quo = [ops.zero] * max(0, len(rem) - dd)
        for i in range(len(rem) - dd - 1, -1, -1):
            c = ops.mul(rem[i + dd], inv_lead)
            if c != ops.zero:
                quo[i] = c
                for j, d in enumerate(dv):
                    rem[i + j] = ops.sub(rem[i + j], ops.mul(c, d))
        return Poly(ops, quo), Poly(ops, rem[:dd])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if self.is_zero() or self.is_monic():
            return self
        return self.scale(self.ops.inv(self.coeffs[-1]))

    def derivative(self):
        ops = self.ops
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(ops.mul(ops.from_int(i), self.coeffs[i]))
        return Poly(ops, out)

    def pth_root(self):
        """For f with f' = 0 (all exponents divisible by char): the unique g with g^p = f."""
        ops = self.ops
        p = ops.char
        root_exp = ops.size // p
        out = []
        for i in range(0, len(self.coeffs), p):
            if any(c != ops.zero for c in self.coeffs[i + 1 : i + p]):
                raise ValueError("pth_root called on a polynomial with nonzero derivative")
            out.append(ops.pow(self.coeffs[i], root_exp))
        return Poly(ops, out)

    def eval_at(self, x):
        ops = self.ops
        acc = ops.zero
        for c in reversed(self.coeffs):
            acc = ops.add(ops.mul(acc, x), c)
        return acc

    def pow_mod(self, e, modpoly):
        result = Poly.one(self.ops)
        base = self % modpoly
        while e:
            if e & 1:
                result = (result * base) % modpoly
            base = (base * base) % modpoly
            e >>= 1
        return result

    def text(self):
        """Comma-separated coefficients, constant term first (the CLI format)."""
        if self.is_zero():
            return "0"
        return ",".join(str(c) for c in self.coeffs)

    def __repr__(self):
        return f"Poly({self.text()})"


def poly_gcd(f, g):
    """Monic gcd; gcd(f, 0) = monic f."""
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def poly_from_text(ops, text):
    """Inverse of Poly.text for integer-encoded coefficient fields."""
    vals = []
    for piece in text.split(","):
        vals.append(int(piece.strip()))
    for v in vals:
        if not 0 <= v < ops.size:
            raise ValueError(f"coefficient {v} out of range [0, {ops.size})")
    return Poly(ops, vals)


def is_irreducible(f: Poly) -> bool:
    """Rabin's test: f (deg d >= 1) is irreducible over its field of size s iff
    x^(s^d) = x mod f and gcd(x^(s^(d/r)) - x, f) = 1 for every prime r | d."""
    d = f.degree()
    if d < 1:
        raise ValueError("irreducibility is only defined for degree >= 1")
    if d == 1:
        return True
    ops = f.ops
    s = ops.size
    f = f.monic()
    x = Poly.x(ops)
    frob = [x]  # frob[j] = x^(s^j) mod f
    for _ in range(d):
        frob.append(frob[-1].pow_mod(s, f))
    for r in arith.factorize(d).prime_list():
        if poly_gcd(frob[d // r] - x, f).degree() != 0:
            return False
    return frob[d] == x


def squarefree_decomposition(f: Poly):
    """Char-p squarefree decomposition of monic f: list of (S, m) with the S
    monic squarefree pairwise coprime, multiplicities m distinct, and
    f = prod S^m.  Handles vanishing derivatives via p-th roots."""
    if f.is_zero() or not f.is_monic():
        raise ValueError("squarefree decomposition needs a monic polynomial")
    p = f.ops.char
    out = []
    n = 1
    while True:
        d = f.derivative()
        if not d.is_zero():
            g = poly_gcd(f, d)
            h = f // g
            i = 1
            while h.degree() > 0:
                gg = poly_gcd(g, h)
                part = h // gg
                if part.degree() > 0:
                    out.append((part, i * n))
                g, h = g // gg, gg
                i += 1
            f = g
        if f.degree() == 0:
            break
        f = f.pth_root()
        n *= p
    return out


def distinct_root_count(f: Poly) -> int:
    """Number of distinct roots of f in a splitting field (degree of the radical)."""
    return sum(s.degree() for s, _ in squarefree_decomposition(f.monic()))


def random_irreducible(ops, degree, rng):
    """Seeded search for a monic irreducible of the given degree."""
    size = ops.size
    # density ~1/degree, so a bounded-try loop is fine; keep a hard stop anyway
    for _ in range(10000 * degree):
        cand = Poly(ops, [rng.randrange(size) for _ in range(degree)] + [ops.one])
        if is_irreducible(cand):
            return cand
    raise RuntimeError("irreducible search failed to terminate")


class Element:
    """An element of a FieldDescriptor's top field: a length-n coefficient tuple."""

    __slots__ = ("fd", "coeffs")

    def __init__(self, fd, coeffs):
        self.fd = fd
        self.coeffs = coeffs

    def _check(self, other):
        if not isinstance(other, Element) or other.fd is not self.fd:
            raise ValueError("elements belong to different field descriptors")

    def __add__(self, other):
        self._check(other)
        add = self.fd.base.add
        return Element(self.fd, tuple(add(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        sub = self.fd.base.sub
        return Element(self.fd, tuple(sub(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        neg = self.fd.base.neg
        return Element(self.fd, tuple(neg(a) for a in self.coeffs))

    def __mul__(self, other):
        self._check(other)
        return Element(self.fd, self.fd._mul(self.coeffs, other.coeffs))

    def __truediv__(self, other):
        self._check(other)
        return Element(self.fd, self.fd._mul(self.coeffs, self.fd._inv(other.coeffs)))

    def __pow__(self, e):
        return Element(self.fd, self.fd._pow(self.coeffs, e))

    def inverse(self):
        return Element(self.fd, self.fd._inv(self.coeffs))

    def scale(self, c):
        """Multiply by the middle-field scalar c (encoded int)."""
        mul = self.fd.base.mul
        return Element(self.fd, tuple(mul(c, a) for a in self.coeffs))

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def encode(self) -> int:
        """Canonical integer in [0, N): base-q digits are the coefficients."""
        out = 0
        for c in reversed(self.coeffs):
            out = out * self.fd.q + c
        return out

    def text(self):
        return ",".join(str(c) for c in self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, Element) and other.fd is self.fd and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"<{self.text()} in {self.fd.field_str}>"


class _ExtOps:
    """Adapter making the top field usable as a Poly coefficient ring."""

    def __init__(self, fd):
        self.fd = fd
        self.char = fd.p
        self.size = fd.N
        self.zero = fd.zero
        self.one = fd.one

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return a.inverse()

    def pow(self, a, e):
        return a**e

    def from_int(self, m):
        return self.fd.from_int(m)


class FieldDescriptor:
    """F_{q^n} = F_q[x]/(g) over F_q = F_p[y]/(h), plus cached machinery.

    Instances are identity-keyed: elements carry a reference to their
    descriptor and refuse to mix with elements of another instance, even one
    built from the same moduli.
    """

    def __init__(self, base: BaseField, ext_modulus: Poly):
        if ext_modulus.ops is not base:
            raise ValueError("extension modulus must be a polynomial over the base field")
        if not ext_modulus.is_monic() or ext_modulus.degree() < 1:
            raise ValueError("extension modulus must be monic of degree >= 1")
        if not is_irreducible(ext_modulus):
            raise ValueError("extension modulus is reducible")
        self.base = base
        self.p, self.k, self.q = base.p, base.k, base.q
        self.n = ext_modulus.degree()
        self.N = self.q**self.n
        if self.N - 1 > arith.INPUT_CAP:
            raise CapExceeded(f"field size {self.N} exceeds the 63-bit cap")
        self.g = ext_modulus
        self.h = base.modulus
        self.field_str = f"{self.p}^{self.k}^{self.n}"
        self.zero = Element(self, (0,) * self.n)
        one_t = (base.one,) + (0,) * (self.n - 1)
        self.one = Element(self, one_t)
        # x mod g; for n = 1 this reduces to the constant -g0
        if self.n > 1:
            self.x = Element(self, (0, base.one) + (0,) * (self.n - 2))
        else:
            self.x = Element(self, (base.neg(self.g.coeffs[0]),))
        self._red_rows = self._reduction_rows()
        self._frob_rows = None
        self._order_fac = None
        self._cache = {}

    # ---- constructors -----------------------------------------------------

    @classmethod
    def from_moduli(cls, p, h_coeffs, g_coeffs):
        """Build from explicit moduli: h over F_p (ints mod p), g over F_q (encoded ints)."""
        base = BaseField(p, h_coeffs)
        return cls(base, Poly(base, g_coeffs))

    # ---- internal coefficient-tuple arithmetic ----------------------------

    def _reduction_rows(self):
        # rows[i] = coefficients of x^(n+i) mod g, for i in 0 .. n-2
        base, n = self.base, self.n
        if n == 1:
            return []
        first = tuple(base.neg(c) for c in self.g.coeffs[:n])
        rows = [first]
        for _ in range(n - 2):
            prev = rows[-1]
            top = prev[n - 1]
            shifted = [0] + list(prev[: n - 1])
            if top:
                shifted = [base.add(shifted[j], base.mul(top, first[j])) for j in range(n)]
            rows.append(tuple(shifted))
        return rows

    def _mul(self, u, v):
        base, n = self.base, self.n
        if n == 1:
            return (base.mul(u[0], v[0]),)
        add, mul = base.add, base.mul
        out = [0] * (2 * n - 1)
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    if b:
                        out[i + j] = add(out[i + j], mul(a, b))
        for idx in range(2 * n - 2, n - 1, -1):
            c = out[idx]
            if c:
                row = self._red_rows[idx - n]
                for j, r in enumerate(row):
                    if r:
                        out[j] = add(out[j], mul(c, r))
        return tuple(out[:n])

    def _inv(self, u):
        if all(c == 0 for c in u):
            raise ZeroDivisionError("inverse of zero")
        base = self.base
        r0, r1 = self.g, Poly(base, u)
        t0, t1 = Poly.zero(base), Poly.one(base)
        while not r1.is_zero():
            quo, rem = divmod(r0, r1)
            r0, r1 = r1, rem
            t0, t1 = t1, t0 - quo * t1
        # r0 is a nonzero constant: g irreducible, u nonzero of smaller degree
        c_inv = base.inv(r0.coeffs[0])
        inv_coeffs = list(t0.scale(c_inv).coeffs)
        inv_coeffs += [0] * (self.n - len(inv_coeffs))
        return tuple(inv_coeffs)

    def _pow(self, u, e):
        if all(c == 0 for c in u):
            if e == 0:
                return self.one.coeffs
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return self.zero.coeffs
        e %= self.N - 1
        result = self.one.coeffs
        square = u
        while e:
            if e & 1:
                result = self._mul(result, square)
            square = self._mul(square, square)
            e >>= 1
        return result

    # ---- element constructors ---------------------------------------------

    def element(self, coeffs) -> Element:
        coeffs = tuple(coeffs)
        if len(coeffs) > self.n:
            raise ValueError(f"coefficient vector longer than n = {self.n}")
        coeffs = coeffs + (0,) * (self.n - len(coeffs))
        for c in coeffs:
            if not 0 <= c < self.q:
                raise ValueError(f"coefficient {c} not an encoded F_q value")
        return Element(self, coeffs)

    def from_encoding(self, idx: int) -> Element:
        if not 0 <= idx < self.N:
            raise ValueError("encoding out of range")
        q = self.q
        coeffs = []
        for _ in range(self.n):
            idx, c = divmod(idx, q)
            coeffs.append(c)
        return Element(self, tuple(coeffs))

    def scalar(self, c: int) -> Element:
        """Embed the middle-field element c (encoded int) as a constant."""
        if not 0 <= c < self.q:
            raise ValueError("not an encoded F_q value")
        return Element(self, (c,) + (0,) * (self.n - 1))

    def from_int(self, m: int) -> Element:
        return self.scalar(self.base.from_int(m))

    def elements(self):
        """All q^n elements in encoding order, generated lazily."""
        for idx in range(self.N):
            yield self.from_encoding(idx)

    # ---- cached structures -------------------------------------------------

    @property
    def ext_ops(self):
        ops = self._cache.get("ext_ops")
        if ops is None:
            ops = self._cache["ext_ops"] = _ExtOps(self)
        return ops

    @property
    def order_factorization(self):
        if self._order_fac is None:
            self._order_fac = arith.factorize(self.N - 1)
        return self._order_fac

    def _frobenius_rows(self):
        # images of the power basis under a -> a^q, as coefficient tuples
        if self._frob_rows is None:
            xq = self.x**self.q
            rows = [self.one.coeffs]
            acc = self.one
            for _ in range(self.n - 1):
                acc = acc * xq
                rows.append(acc.coeffs)
            self._frob_rows = rows
        return self._frob_rows

    def __repr__(self):
        return f"FieldDescriptor({self.field_str}, g={self.g.text()})"


def build_field(p: int, k: int = 1, n: int = 1, seed: int = 0) -> FieldDescriptor:
    """Construct F_{q^n} with q = p^k, choosing moduli by seeded search.

    Degree-1 moduli are pinned to y and x so the degenerate levels are
    canonical; higher degrees come from a deterministic per-seed stream, so
    equal (p, k, n, seed) always yields the identical tower.
    """
    if k < 1 or n < 1:
        raise ValueError("k and n must be >= 1")
    if not arith.is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p ** (k * n) - 1 > arith.INPUT_CAP:
        raise CapExceeded(f"p^(k*n) = {p}^{k * n} exceeds the 63-bit cap")
    if k == 1:
        base = BaseField(p, (0, 1))
    else:
        fp = BaseField(p, (0, 1))
        rng = derive_rng(seed, "modulus-h", p, k)
        h = random_irreducible(fp, k, rng)
        base = BaseField(p, h.coeffs)
    if n == 1:
        g = Poly(base, (0, base.one))
    else:
        rng = derive_rng(seed, "modulus-g", p, k, n)
        g = random_irreducible(base, n, rng)
    return FieldDescriptor(base, g)


# ---- top-field element functions -------------------------------------------


def frobenius(a: Element, j: int = 1) -> Element:
    """a^(q^j), computed F_q-linearly from precomputed basis images."""
    fd = a.fd
    j %= fd.n
    coeffs = a.coeffs
    base = fd.base
    rows = fd._frobenius_rows()
    for _ in range(j):
        acc = [0] * fd.n
        for i, c in enumerate(coeffs):
            if c:
                row = rows[i]
                for t in range(fd.n):
                    if row[t]:
                        acc[t] = base.add(acc[t], base.mul(c, row[t]))
        coeffs = tuple(acc)
    return Element(fd, coeffs)


def degree_over_base(a: Element) -> int:
    """Least d with a in F_{q^d}; always a divisor of n."""
    for d in arith.divisors(a.fd.n):
        if frobenius(a, d) == a:
            return d
    raise AssertionError("frobenius orbit must close within n steps")


def in_subfield(a: Element, d: int) -> bool:
    return frobenius(a, d) == a


def subfield_elements(fd: FieldDescriptor, d: int):
    """The q^d elements of the degree-d intermediate field, encoding order."""
    if fd.n % d:
        raise ValueError(f"{d} does not divide n = {fd.n}")
    key = ("subfield", d)
    got = fd._cache.get(key)
    if got is None:
        got = [a for a in fd.elements() if frobenius(a, d) == a]
        fd._cache[key] = got
    return got


def multiplicative_order(a: Element, fac: arith.Factorization = None) -> int:
    if a.is_zero():
        raise ValueError("zero has no multiplicative order")
    fd = a.fd
    if fac is None:
        fac = fd.order_factorization
    order = fd.N - 1
    for p, e in fac.factors:
        for _ in range(e):
            cand = order // p
            if a**cand == fd.one:
                order = cand
            else:
                break
    return order


def is_primitive(a: Element) -> bool:
    if a.is_zero():
        return False
    fd = a.fd
    for r in fd.order_factorization.prime_list():
        if a ** ((fd.N - 1) // r) == fd.one:
            return False
    return True


def find_generator(fd: FieldDescriptor, seed: int = 0) -> Element:
    """Seeded random search for a generator of the multiplicative group."""
    rng = derive_rng(seed, "generator", fd.field_str, fd.g.coeffs)
    while True:
        a = fd.from_encoding(rng.randrange(1, fd.N))
        if is_primitive(a):
            return a


def apply_linearized(gpoly: Poly, a: Element) -> Element:
    """g o a = sum g_i a^(q^i) for g over F_q: the q-linearized action."""
    fd = a.fd
    if gpoly.ops is not fd.base:
        raise ValueError("linearized operator must have F_q coefficients")
    acc = fd.zero
    b = a
    for c in gpoly.coeffs:
        if c:
            acc = acc + b.scale(c)
        b = frobenius(b, 1)
    return acc


def minimal_polynomial(a: Element) -> Poly:
    """Monic minimal polynomial of a over F_q (degree = degree_over_base(a))."""
    fd = a.fd
    ops = fd.ext_ops
    conjugates = [a]
    b = frobenius(a, 1)
    while b != a:
        conjugates.append(b)
        b = frobenius(b, 1)
    out = Poly.one(ops)
    for c in conjugates:
        out = out * Poly(ops, (-c, fd.one))
    base_coeffs = []
    for e in out.coeffs:
        if any(e.coeffs[1:]):
            raise AssertionError("minimal polynomial coefficient escaped F_q")
        base_coeffs.append(e.coeffs[0])
    return Poly(fd.base, base_coeffs)


def degree_census(fd: FieldDescriptor) -> dict:
    """Counts of elements by degree over F_q: d -> sum_{e|d} mu(d/e) q^e."""
    out = {}
    for d in arith.divisors(fd.n):
        out[d] = sum(arith.moebius(d // e) * fd.q**e for e in arith.divisors(d))
    return out
