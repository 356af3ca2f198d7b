"""Primitive-element scans: exact counts, structural conditions, thresholds.

Counting is always done by the order test (is_primitive), never by rounding
the character-sum indicator; the indicator exists so the two can be compared.
"""

from dataclasses import dataclass, field
from math import sqrt

from . import arith
from .affine import (
    AffineSpace,
    affine_spaces,
    coset_subfield_divisor,
    degree_ratio_witness,
    make_affine,
    random_affine,
    rref_rows,
    subspaces,
)
from .characters import CharacterTable, characters_of_order
from .fields import Element, FieldDescriptor, degree_over_base, is_primitive
from .util import CapExceeded, derive_int, derive_rng


def primitive_weight(a: Element, table: CharacterTable) -> float:
    """Raw value of the character-sum indicator at a (1 near primitives, 0 else).

    (phi(N-1)/(N-1)) * sum over d | N-1 of mu(d)/phi(d) * sum of the order-d
    characters at a.  The imaginary part cancels; the real part is returned
    unrounded so callers can measure how far from {0, 1} it lands.
    """
    m = table.fd.N - 1
    total = 0j
    for d in arith.divisors(m):
        mu = arith.moebius(d)
        if mu == 0:
            continue
        inner = 0j
        for chi in characters_of_order(table, d):
            inner += chi(a)
        total += (mu / arith.euler_phi(d)) * inner
    return (arith.euler_phi(m) / m) * total.real


def primitive_indicator(a: Element, table: CharacterTable) -> int:
    """primitive_weight rounded to the nearest integer (0 or 1)."""
    return round(primitive_weight(a, table))


@dataclass
class PrimitiveScanResult:
    """Exact primitive census of one affine space plus the structural conditions."""

    field: str
    space: str
    dim: int
    count: int
    density_bound: float  # q^t * (phi(N-1)/(N-1)) * (1 - n*W(N-1)/sqrt(q))
    condition_i: bool
    condition_i_d: int
    condition_i_y: str
    condition_ii: bool
    condition_ii_y: str
    condition_ii_z: str

    @property
    def contains_primitive(self) -> bool:
        return self.count > 0

    @property
    def bound_hypothesis(self) -> bool:
        # the density bound is claimed exactly when condition (ii) holds
        return self.condition_ii

    def to_json_dict(self) -> dict:
        return {
            "field": self.field,
            "space": self.space,
            "dim": self.dim,
            "count": self.count,
            "density_bound": self.density_bound,
            "condition_i": self.condition_i,
            "condition_i_d": self.condition_i_d,
            "condition_i_y": self.condition_i_y,
            "condition_ii": self.condition_ii,
            "condition_ii_y": self.condition_ii_y,
            "condition_ii_z": self.condition_ii_z,
            "contains_primitive": self.contains_primitive,
        }


def _condition_i_witness(A: AffineSpace):
    # a primitive y in A with A inside y * F_{q^d} for a proper divisor d
    for y in A.elements():
        if y.is_zero() or not is_primitive(y):
            continue
        d = coset_subfield_divisor(A, y)
        if d is not None:
            return d, y
    return None


def count_primitive(A: AffineSpace) -> PrimitiveScanResult:
    """Exact order-test census of A, with the density bound and both conditions."""
    fd = A.fd
    count = sum(1 for a in A.elements() if is_primitive(a))
    m = fd.N - 1
    bound = (
        fd.q**A.dim
        * (arith.euler_phi(m) / m)
        * (1 - fd.n * arith.squarefree_divisor_count(m) / sqrt(fd.q))
    )
    ci = _condition_i_witness(A)
    cii = degree_ratio_witness(A)
    return PrimitiveScanResult(
        field=fd.field_str,
        space=A.space_text(),
        dim=A.dim,
        count=count,
        density_bound=bound,
        condition_i=ci is not None,
        condition_i_d=ci[0] if ci else 0,
        condition_i_y=ci[1].text() if ci else "",
        condition_ii=cii is not None,
        condition_ii_y=cii[0].text() if cii else "",
        condition_ii_z=cii[1].text() if cii else "",
    )


@dataclass
class SpaceScanReport:
    field: str
    mode: str
    dims: tuple
    results: list
    necessity_violations: list = field(default_factory=list)
    sufficiency_violations: list = field(default_factory=list)

    @property
    def guaranteed(self) -> bool:
        """Necessity of the two conditions is only a theorem when n <= q."""
        return self._n_le_q

    _n_le_q: bool = True


def primitive_space_scan(
    fd: FieldDescriptor,
    dims=None,
    mode: str = "exhaustive",
    seed: int = 0,
    samples: int = 200,
    budget: int = 200_000,
) -> SpaceScanReport:
    """Census every space (or a seeded sample) and classify against the conditions.

    A necessity violation is a space containing a primitive element while
    satisfying neither condition; that contradicts the characterization
    whenever n <= q.  A sufficiency violation (condition met, no primitive)
    is possible for small q and is recorded as data, not failure.
    """
    dims = sorted(set(dims)) if dims else list(range(1, fd.n + 1))
    if mode == "exhaustive":
        spaces = affine_spaces(fd, dims, budget=budget)
    elif mode == "sampled":
        spaces = (
            random_affine(
                fd,
                dims[derive_rng(seed, "scan-dim", i).randrange(len(dims))],
                seed=derive_int(seed, "scan-space", i),
            )
            for i in range(samples)
        )
    else:
        raise ValueError(f"unknown mode {mode!r}")
    results = [count_primitive(A) for A in spaces]
    report = SpaceScanReport(
        field=fd.field_str,
        mode=mode,
        dims=tuple(dims),
        results=results,
        _n_le_q=fd.n <= fd.q,
    )
    for r in results:
        satisfied = r.condition_i or r.condition_ii
        if r.contains_primitive and not satisfied:
            report.necessity_violations.append(r)
        if satisfied and not r.contains_primitive:
            report.sufficiency_violations.append(r)
    return report


@dataclass
class TranslateReport:
    field: str
    tested: int
    exhaustive: bool
    failures: list  # texts of full-degree theta whose line theta + F_q misses primitives


def translate_check(
    fd: FieldDescriptor, seed: int = 0, samples: int = 500, cap: int = 100_000
) -> TranslateReport:
    """Does theta + F_q contain a primitive element for every full-degree theta?

    Exhaustive when the field fits under the cap, otherwise a seeded sample.
    """
    failures = []
    tested = 0
    exhaustive = fd.N <= cap

    def check(theta):
        line = make_affine(theta, [fd.one])
        return any(is_primitive(a) for a in line.elements())

    if exhaustive:
        for theta in fd.elements():
            if degree_over_base(theta) != fd.n:
                continue
            tested += 1
            if not check(theta):
                failures.append(theta.text())
    else:
        rng = derive_rng(seed, "translate", fd.field_str)
        while tested < samples:
            theta = fd.from_encoding(rng.randrange(fd.N))
            if degree_over_base(theta) != fd.n:
                continue
            tested += 1
            if not check(theta):
                failures.append(theta.text())
    return TranslateReport(fd.field_str, tested, exhaustive, failures)


@dataclass
class GrassmannReport:
    """Largest dimension of a primitive-free subspace, or brackets if budget-cut.

    The subfield F_{q^(n/p)} (p = least prime factor of n) is always a
    primitive-free witness, so lower >= n/p unconditionally.
    """

    field: str
    lower: int
    upper: int
    complete: bool
    witness: str
    subfield_dim: int
    scanned: int

    @property
    def value(self) -> int:
        if not self.complete:
            raise ValueError("scan was cut by the budget; only brackets are available")
        return self.lower


def grassmann_threshold(fd: FieldDescriptor, budget: int = 100_000) -> GrassmannReport:
    """Exhaustive descending scan for the threshold dimension.

    Scans dimensions n-1 down to 1; the first level holding a primitive-free
    subspace is the answer (the full space always contains primitives).  If
    the budget runs out at level t the result brackets the value in
    [n/p_least, t].
    """
    n = fd.n
    subfield_dim = n // arith.factorize(n).prime_list()[0]
    scanned = 0
    for t in range(n - 1, 0, -1):
        for V in subspaces(fd, t):
            scanned += 1
            if scanned > budget:
                return GrassmannReport(
                    field=fd.field_str,
                    lower=subfield_dim,
                    upper=t,
                    complete=False,
                    witness="",
                    subfield_dim=subfield_dim,
                    scanned=scanned - 1,
                )
            if not any(is_primitive(a) for a in V.elements()):
                return GrassmannReport(
                    field=fd.field_str,
                    lower=t,
                    upper=t,
                    complete=True,
                    witness=V.space_text(),
                    subfield_dim=subfield_dim,
                    scanned=scanned,
                )
    raise AssertionError("subfield witness guarantees termination before dim 0")


def digit_search(fd: FieldDescriptor, basis, prescription: dict):
    """Search for a primitive element with prescribed digits over a basis.

    basis: n independent Elements.  prescription: {position: encoded F_q
    value} with 0-based positions.  Unprescribed digits range freely; the
    residual affine space is scanned in enumeration order.  Prescribing all
    n digits pins one element, which is simply tested.  Returns the first
    primitive hit or None (absence is data).
    """
    basis = list(basis)
    if len(basis) != fd.n:
        raise ValueError(f"need exactly n = {fd.n} basis elements")
    rows, _ = rref_rows([b.coeffs for b in basis], fd.base)
    if len(rows) != fd.n:
        raise ValueError("basis elements are not independent")
    for pos, val in prescription.items():
        if not 0 <= pos < fd.n:
            raise ValueError(f"prescribed position {pos} out of range [0, {fd.n})")
        if not 0 <= val < fd.q:
            raise ValueError(f"prescribed value {val} is not an encoded F_q value")
    u = fd.zero
    for pos, val in prescription.items():
        if val:
            u = u + basis[pos].scale(val)
    free = [basis[i] for i in range(fd.n) if i not in prescription]
    if not free:
        return u if is_primitive(u) else None
    A = make_affine(u, free)
    for a in A.elements():
        if is_primitive(a):
            return a
    return None
