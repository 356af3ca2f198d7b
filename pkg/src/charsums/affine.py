"""F_q-affine subspaces u + V of F_{q^n}, with exact linear algebra.

Since top-field elements are coefficient vectors over F_q, subspaces are
handled by row reduction of those vectors.  Every AffineSpace keeps a reduced
row-echelon basis and the canonical coset representative (zeros in all pivot
coordinates), so equal spaces compare equal and every enumeration order is
reproducible.
"""

from dataclasses import dataclass
from itertools import combinations, product

from . import arith
from .fields import Element, FieldDescriptor, degree_over_base, frobenius
from .util import CapExceeded, derive_rng

# ---- row reduction over F_q on coefficient lists ----------------------------


def rref_rows(rows, base):
    """Reduced row echelon form. Returns (rows, pivot_columns); zero rows dropped."""
    rows = [list(r) for r in rows]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(rows)):
            if rows[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = base.inv(rows[rank][col])
        rows[rank] = [base.mul(inv, v) for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                c = rows[i][col]
                rows[i] = [base.sub(a, base.mul(c, b)) for a, b in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return [tuple(r) for r in rows[:rank]], tuple(pivots)


def reduce_vector(vec, rows, pivots, base):
    """Remainder of vec modulo the row space: zeros in every pivot coordinate."""
    vec = list(vec)
    for row, col in zip(rows, pivots):
        c = vec[col]
        if c:
            vec = [base.sub(a, base.mul(c, b)) for a, b in zip(vec, row)]
    return tuple(vec)


def nullspace(matrix, base):
    """Basis of {v : M v = 0} for a list of equation rows over F_q."""
    rows, pivots = rref_rows(matrix, base)
    ncols = len(matrix[0])
    free_cols = [c for c in range(ncols) if c not in pivots]
    out = []
    for fc in free_cols:
        v = [0] * ncols
        v[fc] = base.one
        for row, pc in zip(rows, pivots):
            v[pc] = base.neg(row[fc])
        out.append(tuple(v))
    return out


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (k - i) - 1
    return num // den


# ---- the affine space type ---------------------------------------------------


class AffineSpace:
    """u + span(basis) with a canonical (RREF, reduced-u) representation.

    `basis` may be empty only for the degenerate single-point space {u},
    which shows up as the kernel of the identity operator; make_affine itself
    insists on dimension >= 1.
    """

    __slots__ = ("fd", "u", "basis", "pivots", "_cache")

    def __init__(self, fd, u, basis, pivots):
        self.fd = fd
        self.basis = tuple(basis)
        self.pivots = tuple(pivots)
        rows = [b.coeffs for b in self.basis]
        self.u = Element(fd, reduce_vector(u.coeffs, rows, self.pivots, fd.base))
        self._cache = {}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def span_elements(self):
        """All q^dim elements of V, lexicographic in combination coefficients."""
        fd = self.fd
        for lams in product(range(fd.q), repeat=self.dim):
            acc = fd.zero
            for lam, b in zip(lams, self.basis):
                if lam:
                    acc = acc + b.scale(lam)
            yield acc

    def elements(self):
        """All q^dim elements of u + V, same order as span_elements."""
        for v in self.span_elements():
            yield self.u + v

    def contains(self, a: Element) -> bool:
        rows = [b.coeffs for b in self.basis]
        rem = reduce_vector((a - self.u).coeffs, rows, self.pivots, self.fd.base)
        return not any(rem)

    def degree_profile(self) -> dict:
        """Map d -> #{a in A : degree_over_base(a) = d}, keyed by all divisors of n."""
        prof = self._cache.get("profile")
        if prof is None:
            prof = {d: 0 for d in arith.divisors(self.fd.n)}
            for a in self.elements():
                prof[degree_over_base(a)] += 1
            self._cache["profile"] = prof
        return prof

    def space_text(self) -> str:
        vpart = "|".join(b.text() for b in self.basis)
        return f"u={self.u.text()};V={vpart}"

    def __eq__(self, other):
        return (
            isinstance(other, AffineSpace)
            and other.fd is self.fd
            and other.u == self.u
            and other.basis == self.basis
        )

    def __hash__(self):
        return hash((self.u.coeffs, tuple(b.coeffs for b in self.basis)))

    def __repr__(self):
        return f"AffineSpace({self.space_text()} in {self.fd.field_str})"


def make_affine(u: Element, vectors) -> AffineSpace:
    """Affine space u + span(vectors); the vectors need not be independent."""
    vectors = list(vectors)
    if not vectors:
        raise ValueError("need at least one spanning vector")
    fd = u.fd
    if fd.n < 2:
        raise ValueError("affine spaces live in a proper extension (n >= 2)")
    for v in vectors:
        if v.fd is not fd:
            raise ValueError("spanning vectors from a different field")
    rows, pivots = rref_rows([v.coeffs for v in vectors], fd.base)
    if not rows:
        raise ValueError("all spanning vectors are zero")
    basis = [Element(fd, r) for r in rows]
    return AffineSpace(fd, u, basis, pivots)


# ---- structure of a space relative to subfields -------------------------------


def maximal_proper_divisors(n: int):
    return sorted({n // r for r in arith.factorize(n).prime_list()})


def coset_subfield_divisor(A: AffineSpace, y: Element):
    """Largest-step test for A <= y*F_{q^d}: returns such a maximal proper
    divisor d of n, or None.  Containment in any proper subfield coset implies
    containment for one of the maximal d, so testing those suffices."""
    yinv = y.inverse()
    scaled = [A.u * yinv] + [b * yinv for b in A.basis]
    for d in maximal_proper_divisors(A.fd.n):
        if all(frobenius(w, d) == w for w in scaled):
            return d
    return None


@dataclass
class DichotomyResult:
    """Outcome of the coset-or-witness split for (A, y).

    case "i":  A sits inside y * F_{q^d} for the reported proper divisor d.
    case "ii": some nonzero z in V has y/z of full degree n (z reported).
    case "neither": possible only when n > q, where the split is not
    guaranteed; `guaranteed` records whether n <= q held.
    """

    case: str
    d: int = None
    z: Element = None
    guaranteed: bool = True


def dichotomy(A: AffineSpace, y: Element) -> DichotomyResult:
    """Split for a nonzero y in A: subfield-coset containment or a degree witness."""
    fd = A.fd
    if y.is_zero():
        raise ValueError("y must be nonzero")
    if not A.contains(y):
        raise ValueError("y is not an element of the space")
    guaranteed = fd.n <= fd.q
    d = coset_subfield_divisor(A, y)
    if d is not None:
        return DichotomyResult("i", d=d, guaranteed=guaranteed)
    for z in A.span_elements():
        if z.is_zero():
            continue
        if degree_over_base(y * z.inverse()) == fd.n:
            return DichotomyResult("ii", z=z, guaranteed=guaranteed)
    return DichotomyResult("neither", guaranteed=guaranteed)


def degree_ratio_witness(A: AffineSpace):
    """First (a, v) with a in A, v in V, both nonzero, deg(a/v) = n; else None.

    This is the shared hypothesis of the sharpened affine bound and of the
    primitive-existence conditions, so the scan result is cached on A.
    """
    if "ratio_witness" in A._cache:
        return A._cache["ratio_witness"]
    fd = A.fd
    found = None
    for v in A.span_elements():
        if v.is_zero():
            continue
        vinv = v.inverse()
        for a in A.elements():
            if a.is_zero():
                continue
            if degree_over_base(a * vinv) == fd.n:
                found = (a, v)
                break
        if found:
            break
    A._cache["ratio_witness"] = found
    return found


# ---- enumeration of subspaces and affine spaces -------------------------------


def subspaces(fd: FieldDescriptor, dim: int):
    """All dim-dimensional F_q-subspaces, one canonical RREF basis each.

    Pivot columns run over combinations; free entries run over F_q.  The
    count is the Gaussian binomial [n choose dim]_q.
    """
    if fd.n < 2:
        raise ValueError("subspace enumeration requires n >= 2")
    if not 1 <= dim <= fd.n:
        raise ValueError(f"dim must be in [1, {fd.n}]")
    n, q = fd.n, fd.q
    one = fd.base.one
    for pivots in combinations(range(n), dim):
        free = [
            (i, c)
            for i in range(dim)
            for c in range(pivots[i] + 1, n)
            if c not in pivots
        ]
        for vals in product(range(q), repeat=len(free)):
            rows = [[0] * n for _ in range(dim)]
            for i, pc in enumerate(pivots):
                rows[i][pc] = one
            for (i, c), v in zip(free, vals):
                rows[i][c] = v
            basis = [Element(fd, tuple(r)) for r in rows]
            yield AffineSpace(fd, fd.zero, basis, pivots)


def space_count(fd: FieldDescriptor, dims) -> int:
    return sum(gaussian_binomial(fd.n, t, fd.q) * fd.q ** (fd.n - t) for t in dims)


def affine_spaces(fd: FieldDescriptor, dims, budget: int = None):
    """Every affine space with dim in dims, each exactly once.

    Distinct translates of each subspace come from the canonical coset
    representatives: vectors supported off the pivot columns.
    """
    dims = sorted(set(dims))
    if budget is not None:
        total = space_count(fd, dims)
        if total > budget:
            raise CapExceeded(f"{total} affine spaces exceed the budget {budget}")
    for t in dims:
        for V in subspaces(fd, t):
            nonpivot = [c for c in range(fd.n) if c not in V.pivots]
            for vals in product(range(fd.q), repeat=len(nonpivot)):
                coeffs = [0] * fd.n
                for c, v in zip(nonpivot, vals):
                    coeffs[c] = v
                u = Element(fd, tuple(coeffs))
                yield AffineSpace(fd, u, V.basis, V.pivots)


def random_affine(fd: FieldDescriptor, t: int, seed: int = 0) -> AffineSpace:
    """Seeded random space of exact dimension t (coordinates uniform, then reduced)."""
    if fd.n < 2:
        raise ValueError("affine spaces live in a proper extension (n >= 2)")
    if not 1 <= t <= fd.n:
        raise ValueError(f"dimension must be in [1, {fd.n}]")
    rng = derive_rng(seed, "affine", fd.field_str, t)
    while True:
        vectors = [fd.from_encoding(rng.randrange(fd.N)) for _ in range(t)]
        rows, pivots = rref_rows([v.coeffs for v in vectors], fd.base)
        if len(rows) == t:
            u = fd.from_encoding(rng.randrange(fd.N))
            return AffineSpace(fd, u, [Element(fd, r) for r in rows], pivots)


# ---- text format ---------------------------------------------------------------


def parse_space_text(fd: FieldDescriptor, text: str) -> AffineSpace:
    """Parse "u=<coeffs>;V=<coeffs>|<coeffs>|..." with offsets in error messages.

    Coefficients are comma-separated encoded F_q ints, constant term first;
    short vectors are zero-padded to length n.
    """

    def fail(msg, offset):
        raise ValueError(f"bad space text at offset {offset}: {msg}")

    if not text.startswith("u="):
        fail("expected 'u='", 0)
    semi = text.find(";")
    if semi < 0:
        fail("missing ';' between u and V parts", len(text))
    vmark = text.find("V=", semi + 1)
    if vmark != semi + 1:
        fail("expected 'V=' after ';'", semi + 1)

    def parse_vector(chunk, base_offset):
        vals = []
        pos = 0
        for piece in chunk.split(","):
            stripped = piece.strip()
            if not stripped or not all(ch.isdigit() for ch in stripped):
                fail(f"expected an integer, got {piece!r}", base_offset + pos)
            v = int(stripped)
            if v >= fd.q:
                fail(f"coefficient {v} is not an encoded F_q value (q={fd.q})", base_offset + pos)
            vals.append(v)
            pos += len(piece) + 1
        if len(vals) > fd.n:
            fail(f"vector has more than n={fd.n} coefficients", base_offset)
        return tuple(vals) + (0,) * (fd.n - len(vals))

    u = Element(fd, parse_vector(text[2:semi], 2))
    vchunks = text[vmark + 2 :]
    vectors = []
    pos = vmark + 2
    for chunk in vchunks.split("|"):
        vectors.append(Element(fd, parse_vector(chunk, pos)))
        pos += len(chunk) + 1
    return make_affine(u, vectors)
