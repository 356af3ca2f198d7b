"""q-order structure of F_{q^n}: factoring x^n - 1, k-normal censuses, searches.

The Frobenius a -> a^q turns F_{q^n} into an F_q[x]-module; the q-order of a
is the minimal monic divisor g of x^n - 1 with sum g_i a^(q^i) = 0, and a is
k-normal exactly when deg(q-order) = n - k.  Everything here is exact.
"""

from dataclasses import dataclass
from itertools import product

from . import arith
from .affine import AffineSpace, nullspace, rref_rows
from .fields import (
    Element,
    FieldDescriptor,
    Poly,
    apply_linearized,
    build_field,
    is_primitive,
    poly_gcd,
)
from .util import CapExceeded, derive_rng

_AS_CAP = 13  # largest characteristic for which p^p stays desk-scale
CENSUS_CAP = 100_000


class NoDivisorError(ValueError):
    """The candidate set of a search is empty: no binomial-free divisor exists
    at the requested degree.  This already rules out a primitive hit, but it
    is reported apart from a search that ran and exhausted real candidates."""


def _xn_minus_1(fd: FieldDescriptor) -> Poly:
    base = fd.base
    return Poly(base, (base.neg(base.one),) + (0,) * (fd.n - 1) + (base.one,))


# ---- factoring x^n - 1 over F_q ---------------------------------------------


def _distinct_degree_split(f: Poly):
    """[(d, product of the degree-d irreducible factors)] for squarefree monic f."""
    base = f.ops
    s = base.size
    out = []
    rest = f
    frob = Poly.x(base)  # x^(s^d) mod rest
    d = 0
    while rest.degree() > 0:
        d += 1
        if 2 * d > rest.degree():
            out.append((rest.degree(), rest))
            break
        frob = frob.pow_mod(s, rest)
        g = poly_gcd(frob - Poly.x(base), rest)
        if g.degree() > 0:
            out.append((d, g))
            rest = rest // g
            frob = frob % rest
    return out


def _equal_degree_split(f: Poly, d: int, rng):
    """Split a monic product of distinct degree-d irreducibles into its factors."""
    if f.degree() == d:
        return [f]
    base = f.ops
    s = base.size
    while True:
        r = Poly(base, tuple(rng.randrange(s) for _ in range(f.degree())))
        if r.degree() < 1:
            continue
        g = poly_gcd(r, f)
        if not 0 < g.degree() < f.degree():
            if base.char == 2:
                # trace to F_2: sum of r^(2^i) over i < log2(s) * d
                t = Poly.zero(base)
                acc = r % f
                for _ in range(d * (s.bit_length() - 1)):
                    t = t + acc
                    acc = acc.pow_mod(2, f)
                h = t
            else:
                h = r.pow_mod((s**d - 1) // 2, f) - Poly.one(base)
            g = poly_gcd(h, f)
            if not 0 < g.degree() < f.degree():
                continue
        return _equal_degree_split(g, d, rng) + _equal_degree_split(f // g, d, rng)


def factor_xn_minus_1(fd: FieldDescriptor):
    """Irreducible factorization of x^n - 1 over F_q, as a sorted tuple
    of (monic factor, multiplicity).

    With n = p^v * m and p the characteristic, x^n - 1 = (x^m - 1)^(p^v)
    and x^m - 1 is squarefree, so every multiplicity is p^v.
    """
    got = fd._cache.get("xn1-factors")
    if got is not None:
        return got
    base, n, p = fd.base, fd.n, fd.p
    v, m = 0, n
    while m % p == 0:
        m //= p
        v += 1
    f = Poly(base, (base.neg(base.one),) + (0,) * (m - 1) + (base.one,))
    rng = derive_rng(0, "xn1-split", fd.field_str)
    parts = []
    for d, block in _distinct_degree_split(f):
        parts.extend(_equal_degree_split(block, d, rng))
    parts.sort(key=lambda h: (h.degree(), h.coeffs))
    fac = tuple((P, p**v) for P in parts)
    check = Poly.one(base)
    for P, e in fac:
        for _ in range(e):
            check = check * P
    assert check == _xn_minus_1(fd), "factor recombination failed"
    fd._cache["xn1-factors"] = fac
    return fac


def xn1_divisors(fd: FieldDescriptor):
    """All monic divisors of x^n - 1, sorted by (degree, coefficients)."""
    got = fd._cache.get("xn1-divisors")
    if got is None:
        fac = factor_xn_minus_1(fd)
        divs = []
        for exps in product(*[range(e + 1) for _, e in fac]):
            g = Poly.one(fd.base)
            for (P, _), j in zip(fac, exps):
                for _ in range(j):
                    g = g * P
            divs.append(g)
        divs.sort(key=lambda f: (f.degree(), f.coeffs))
        got = fd._cache["xn1-divisors"] = tuple(divs)
    return got


# ---- q-orders and k-normality ------------------------------------------------


def fq_order(a: Element) -> Poly:
    """Minimal monic divisor of x^n - 1 whose linearized action kills a.

    The divisor list is degree-sorted and every annihilator is a multiple of
    the order, so the first hit is the order itself.
    """
    for g in xn1_divisors(a.fd):
        if apply_linearized(g, a).is_zero():
            return g
    raise AssertionError("x^n - 1 annihilates every element")


def knormal_index(a: Element) -> int:
    """The k with a k-normal: n minus the degree of the q-order."""
    return a.fd.n - fq_order(a).degree()


def is_knormal(a: Element, k: int) -> bool:
    if not 0 <= k <= a.fd.n:
        raise ValueError(f"k-normality is defined for 0 <= k <= {a.fd.n}")
    return knormal_index(a) == k


def phi_q(fd: FieldDescriptor, g: Poly) -> int:
    """Count of elements whose q-order is exactly g.

    Multiplicative over the factorization of g: a power P^e contributes
    q^((e-1) deg P) * (q^(deg P) - 1).  The constant divisor counts only zero.
    """
    # degree-stripping alone would accept P^e with e past its multiplicity,
    # e.g. (x + 2)^2 over F_3, so test divisibility directly first
    if g.is_zero() or not g.is_monic() or not (_xn_minus_1(fd) % g).is_zero():
        raise ValueError(f"{g.text() if not g.is_zero() else '0'} is not a monic divisor of x^{fd.n} - 1")
    total = 1
    rest = g
    for P, _ in factor_xn_minus_1(fd):
        e = 0
        while rest.degree() >= P.degree() and (rest % P).is_zero():
            rest = rest // P
            e += 1
        if e:
            qd = fd.q ** P.degree()
            total *= qd ** (e - 1) * (qd - 1)
    assert rest.degree() == 0
    return total


def kernel_space(fd: FieldDescriptor, g: Poly) -> AffineSpace:
    """The F_q-subspace killed by the linearized action of g; dim = deg g.

    Requires a monic divisor of x^n - 1.  The constant divisor gives the
    degenerate zero-dimensional space {0}.
    """
    if g.ops is not fd.base:
        raise ValueError("operator must have F_q coefficients")
    if g.is_zero() or not g.is_monic() or not (_xn_minus_1(fd) % g).is_zero():
        raise ValueError("operator must be a monic divisor of x^n - 1")
    cols = []
    for i in range(fd.n):
        e = fd.element((0,) * i + (fd.base.one,))
        cols.append(apply_linearized(g, e).coeffs)
    eq_rows = [tuple(col[t] for col in cols) for t in range(fd.n)]
    vecs = nullspace(eq_rows, fd.base)
    assert len(vecs) == g.degree(), "kernel dimension must equal the divisor degree"
    if not vecs:
        return AffineSpace(fd, fd.zero, [], ())
    rows, pivots = rref_rows(vecs, fd.base)
    return AffineSpace(fd, fd.zero, [fd.element(r) for r in rows], pivots)


def divides_proper_binomial(fd: FieldDescriptor, g: Poly) -> bool:
    """Does g divide x^t - delta for some 1 <= t < n and delta in F_q^*?

    Such a g cannot be the q-order of a primitive element: a^(q^t) = delta a
    caps the multiplicative order at (q^t - 1)(q - 1) < q^n - 1.
    """
    base, n = fd.base, fd.n
    if g.degree() == 0:
        return True
    for t in range(g.degree(), n):
        for delta in range(1, fd.q):
            binom = Poly(base, (base.neg(delta),) + (0,) * (t - 1) + (base.one,))
            if (binom % g).is_zero():
                return True
    return False


# ---- censuses -----------------------------------------------------------------


@dataclass
class CensusRow:
    divisor: str
    degree: int
    phi_q: int
    count: int
    free_of_binomials: bool
    primitive_witness: str

    def to_json_dict(self) -> dict:
        return {
            "divisor": self.divisor,
            "degree": self.degree,
            "phi_q": self.phi_q,
            "count": self.count,
            "free_of_binomials": self.free_of_binomials,
            "primitive_witness": self.primitive_witness,
        }


def census_rows(fd: FieldDescriptor, cap: int = CENSUS_CAP):
    """One row per divisor of x^n - 1: predicted size phi_q, enumerated count,
    binomial-freeness, and the first primitive element of that exact order.

    The count column re-derives every class size by brute force so the phi_q
    column has an independent check; that is why the field size is capped.
    """
    if fd.N > cap:
        raise CapExceeded(f"census enumerates all {fd.N} elements; cap is {cap}")
    divs = xn1_divisors(fd)
    tally = {g: [0, ""] for g in divs}
    for a in fd.elements():
        slot = tally[fq_order(a)]
        slot[0] += 1
        if not slot[1] and not a.is_zero() and is_primitive(a):
            slot[1] = a.text()
    return [
        CensusRow(
            divisor=g.text(),
            degree=g.degree(),
            phi_q=phi_q(fd, g),
            count=tally[g][0],
            free_of_binomials=not divides_proper_binomial(fd, g),
            primitive_witness=tally[g][1],
        )
        for g in divs
    ]


# ---- primitive k-normal search --------------------------------------------------


@dataclass
class KNormalSearchResult:
    """Outcome of hunting a primitive k-normal element.

    found=False with exhaustive=True is a certificate of absence: every
    element whose q-order is a binomial-free degree-(n-k) divisor was tested,
    and orders that divide a proper binomial never admit primitives.
    divisor_bound is the coarse a priori cap 2^(n-k) on the number of
    degree-(n-k) divisors; the exact counts sit next to it as data.
    """

    field: str
    k: int
    order_degree: int
    found: bool
    witness: str
    order: str
    scanned: int
    divisor_count: int
    candidate_count: int
    divisor_bound: int
    candidates: tuple
    element: Element = None

    @property
    def exhaustive(self) -> bool:
        return not self.found

    def to_json_dict(self) -> dict:
        return {
            "field": self.field,
            "k": self.k,
            "order_degree": self.order_degree,
            "found": self.found,
            "witness": self.witness,
            "order": self.order,
            "scanned": self.scanned,
            "divisor_count": self.divisor_count,
            "candidate_count": self.candidate_count,
            "divisor_bound": self.divisor_bound,
            "candidates": list(self.candidates),
        }


def _order_is_exactly(a: Element, g: Poly) -> bool:
    # a is assumed killed by g; exactness fails iff some g/P already kills a
    for P, _ in factor_xn_minus_1(a.fd):
        if (g % P).is_zero() and apply_linearized(g // P, a).is_zero():
            return False
    return True


def primitive_knormal_search(fd: FieldDescriptor, k: int) -> KNormalSearchResult:
    """First primitive k-normal element, or a certified absence report.

    Candidates are the binomial-free degree-(n-k) divisors of x^n - 1; their
    kernels are scanned in canonical order for a primitive element of that
    exact q-order.  Raises NoDivisorError when the candidate set is empty.
    """
    n = fd.n
    if not 0 <= k <= n - 2:
        raise ValueError(
            f"k must lie in [0, {n - 2}]: degree-1 orders always divide x - delta"
        )
    target = n - k
    divs = [g for g in xn1_divisors(fd) if g.degree() == target]
    cands = [g for g in divs if not divides_proper_binomial(fd, g)]
    common = dict(
        field=fd.field_str,
        k=k,
        order_degree=target,
        divisor_count=len(divs),
        candidate_count=len(cands),
        divisor_bound=2**target,
        candidates=tuple(g.text() for g in cands),
    )
    if not cands:
        raise NoDivisorError(
            f"no binomial-free divisor of x^{n} - 1 has degree {target}, "
            f"so no primitive element is {k}-normal in {fd.field_str}"
        )
    scanned = 0
    for g in cands:
        for a in kernel_space(fd, g).elements():
            if a.is_zero():
                continue
            scanned += 1
            if is_primitive(a) and _order_is_exactly(a, g):
                return KNormalSearchResult(
                    found=True,
                    witness=a.text(),
                    order=g.text(),
                    scanned=scanned,
                    element=a,
                    **common,
                )
    return KNormalSearchResult(
        found=False, witness="", order="", scanned=scanned, **common
    )


# ---- prime-degree towers ---------------------------------------------------------


def smallest_primitive_root(p: int) -> int:
    if p == 2:
        return 1
    fac = arith.factorize(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r in fac.prime_list()):
            return g
    raise AssertionError("every prime has a primitive root")


@dataclass
class ArtinSchreierReport:
    p: int
    a: int
    field: str
    modulus: str
    theta_order: str
    theta_knormal: int
    theta_primitive: bool
    knormal_count: int
    search: KNormalSearchResult

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "a": self.a,
            "field": self.field,
            "modulus": self.modulus,
            "theta_order": self.theta_order,
            "theta_knormal": self.theta_knormal,
            "theta_primitive": self.theta_primitive,
            "knormal_count": self.knormal_count,
            "search": self.search.to_json_dict(),
        }


def artin_schreier_check(p: int, a: int = None) -> ArtinSchreierReport:
    """Census and primitive search at k = p - 2 in F_p[x]/(x^p - x - a).

    Here x^p - 1 = (x - 1)^p, the q-order lattice is a chain, and the
    (p-2)-normal count falls out of two kernel dimensions as q^2 - q with no
    enumeration.  The root theta of the modulus satisfies theta^p = theta + a,
    which pins its q-order to (x - 1)^2; whether theta is also primitive is
    recorded as a verdict, never asserted.  a defaults to the smallest
    primitive root mod p; any nonzero a keeps the modulus irreducible.
    """
    if not arith.is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p > _AS_CAP:
        raise CapExceeded(f"p = {p} puts the field size p^p past the desk-scale cap")
    if a is None:
        a = smallest_primitive_root(p)
    a %= p
    if a == 0:
        raise ValueError("a must be nonzero mod p: x^p - x splits completely")
    g_coeffs = ((-a) % p, p - 1) + (0,) * (p - 2) + (1,)
    fd = FieldDescriptor.from_moduli(p, (0, 1), g_coeffs)
    base = fd.base
    lin = Poly(base, (base.neg(base.one), base.one))  # x - 1
    k1 = kernel_space(fd, lin).dim
    k2 = kernel_space(fd, lin * lin).dim
    count = fd.q**k2 - fd.q**k1
    theta = fd.x
    theta_order = fq_order(theta)
    return ArtinSchreierReport(
        p=p,
        a=a,
        field=fd.field_str,
        modulus=fd.g.text(),
        theta_order=theta_order.text(),
        theta_knormal=fd.n - theta_order.degree(),
        theta_primitive=is_primitive(theta),
        knormal_count=count,
        search=primitive_knormal_search(fd, p - 2),
    )


@dataclass
class FqpScanReport:
    q: int
    p: int
    field: str
    results: list

    def to_json_dict(self) -> dict:
        return {
            "q": self.q,
            "p": self.p,
            "field": self.field,
            "results": [r.to_json_dict() for r in self.results],
        }


def fqp_knormal_scan(q: int, p: int, seed: int = 0) -> FqpScanReport:
    """Primitive k-normal search in F_{q^p} for every k in [0, p-2].

    Requires q to be a power of the prime p, so the extension degree equals
    the characteristic and each k has exactly one candidate order (x-1)^(p-k).
    """
    if not arith.is_prime(p):
        raise ValueError(f"{p} is not prime")
    j, m = 0, q
    while m > 1 and m % p == 0:
        m //= p
        j += 1
    if m != 1 or j < 1:
        raise ValueError(f"q = {q} is not a power of p = {p}")
    fd = build_field(p, j, p, seed=seed)
    results = [primitive_knormal_search(fd, k) for k in range(p - 1)]
    return FqpScanReport(q=q, p=p, field=fd.field_str, results=results)
