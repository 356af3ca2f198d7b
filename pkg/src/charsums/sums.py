"""Exact character sums and the bound checks built on them.

Each check returns a BoundReport rather than asserting: the point is to
measure slack and hunt for counterexamples, so a failed bound is data.  A
report only counts as a violation when its hypothesis actually held.  All
magnitude comparisons use an additive tolerance of 1e-6 per summand, which
towers over accumulated double rounding at every size this package permits.
"""

from dataclasses import dataclass
from math import sqrt

from .affine import AffineSpace, affine_spaces, degree_ratio_witness, random_affine
from .characters import Character, CharacterTable, trivial_on_subfield
from .fields import (
    Poly,
    degree_over_base,
    squarefree_decomposition,
    subfield_elements,
)
from .util import derive_int, derive_rng

TOL_PER_TERM = 1e-6


@dataclass
class BoundReport:
    theorem: str
    field: str
    chi_index: int
    set_desc: str
    magnitude: float
    bound: float
    hypothesis_met: bool
    terms: int

    @property
    def tolerance(self) -> float:
        return TOL_PER_TERM * self.terms

    @property
    def holds(self) -> bool:
        return self.magnitude <= self.bound + self.tolerance

    @property
    def slack(self) -> float:
        return self.bound - self.magnitude

    def is_violation(self) -> bool:
        return self.hypothesis_met and not self.holds

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "field": self.field,
            "chi_index": self.chi_index,
            "set": self.set_desc,
            "lhs": self.magnitude,
            "rhs": self.bound,
            "slack": self.slack,
            "hypothesis_met": self.hypothesis_met,
            "holds": self.holds,
        }


def char_sum(chi: Character, elements) -> complex:
    """Kahan-compensated sum of chi over an iterable of Elements."""
    total = 0j
    comp = 0j
    for a in elements:
        y = chi(a) - comp
        t = total + y
        comp = (t - total) - y
        total = t
    return total


def _require_nontrivial(chi):
    if chi.is_trivial():
        raise ValueError("check requires a nontrivial character")


def poly_set_desc(F: Poly) -> str:
    return "F=" + "|".join(e.text() for e in F.coeffs)


def weil_check(chi: Character, F: Poly) -> BoundReport:
    """Full-field polynomial sum against (z - 1) * q^(n/2).

    z counts distinct roots in a splitting field, read off the squarefree
    decomposition (which also yields the r-th-power-shape hypothesis: the
    bound is claimed only when F is not a constant times an r-th power,
    r = order of chi).
    """
    _require_nontrivial(chi)
    fd = chi.table.fd
    if F.ops is not fd.ext_ops:
        raise ValueError("polynomial must have top-field coefficients")
    if F.degree() < 1:
        raise ValueError("polynomial must have positive degree")
    r = chi.order
    monic = F.monic()
    decomp = squarefree_decomposition(monic)
    z = sum(s.degree() for s, _ in decomp)
    power_shape = all(mult % r == 0 for _, mult in decomp)
    magnitude = abs(char_sum(chi, (F.eval_at(c) for c in fd.elements())))
    return BoundReport(
        theorem="weil",
        field=fd.field_str,
        chi_index=chi.index,
        set_desc=poly_set_desc(F),
        magnitude=magnitude,
        bound=(z - 1) * sqrt(fd.N),
        hypothesis_met=not power_shape,
        terms=fd.N,
    )


def trivial_affine_check(chi: Character, A: AffineSpace) -> BoundReport:
    """|sum over A| against q^(n/2): holds for every affine space, any dim."""
    _require_nontrivial(chi)
    fd = A.fd
    magnitude = abs(char_sum(chi, A.elements()))
    return BoundReport(
        theorem="affine_trivial",
        field=fd.field_str,
        chi_index=chi.index,
        set_desc=A.space_text(),
        magnitude=magnitude,
        bound=sqrt(fd.N),
        hypothesis_met=True,
        terms=fd.q**A.dim,
    )


def katz_check(chi: Character, theta) -> BoundReport:
    """|sum of chi(theta + a) over a in F_q| against (n - 1) * sqrt(q).

    Hypothesis: theta has full degree n over F_q.
    """
    _require_nontrivial(chi)
    fd = chi.table.fd
    line = (theta + c for c in subfield_elements(fd, 1))
    magnitude = abs(char_sum(chi, line))
    return BoundReport(
        theorem="katz",
        field=fd.field_str,
        chi_index=chi.index,
        set_desc=f"theta={theta.text()}",
        magnitude=magnitude,
        bound=(fd.n - 1) * sqrt(fd.q),
        hypothesis_met=degree_over_base(theta) == fd.n,
        terms=fd.q,
    )


def _delta(chi, d, q):
    # per-degree weight: q when chi dies on F_{q^d}; else the translate bound,
    # capped by the trivial count q.  At d = 1 the nontrivial branch is 0:
    # the inner sum is a full coset sum over F_q and vanishes exactly.
    if trivial_on_subfield(chi, d):
        return q
    return min(q, (d - 1) * sqrt(q))


def translate_double_check(chi: Character, A: AffineSpace):
    """The double sum over b in F_q, a in A, tested two ways.

    Returns (profile_report, coarse_report): the first weighs the degree
    profile of A with per-degree deltas; the second is the n * q^(t + 1/2)
    form whose hypothesis is that A contains a full-degree element.
    """
    _require_nontrivial(chi)
    fd = A.fd
    elements = list(A.elements())
    total = 0j
    for b in subfield_elements(fd, 1):
        total += char_sum(chi, (a + b for a in elements))
    magnitude = abs(total)
    prof = A.degree_profile()
    profile_bound = sum(prof[d] * _delta(chi, d, fd.q) for d in prof)
    terms = fd.q ** (A.dim + 1)
    common = dict(
        field=fd.field_str,
        chi_index=chi.index,
        set_desc=A.space_text(),
        magnitude=magnitude,
        terms=terms,
    )
    profile_report = BoundReport(
        theorem="translate_profile", bound=profile_bound, hypothesis_met=True, **common
    )
    coarse_report = BoundReport(
        theorem="translate_coarse",
        bound=fd.n * fd.q ** (A.dim + 0.5),
        hypothesis_met=prof[fd.n] > 0,
        **common,
    )
    return profile_report, coarse_report


def affine_main_check(chi: Character, A: AffineSpace) -> BoundReport:
    """|sum over A| against n * q^(t - 1/2).

    Hypothesis: some nonzero v in V makes A/v contain a full-degree element;
    decided by the cached ratio-witness scan.
    """
    _require_nontrivial(chi)
    fd = A.fd
    magnitude = abs(char_sum(chi, A.elements()))
    return BoundReport(
        theorem="affine_main",
        field=fd.field_str,
        chi_index=chi.index,
        set_desc=A.space_text(),
        magnitude=magnitude,
        bound=fd.n * fd.q ** (A.dim - 0.5),
        hypothesis_met=degree_ratio_witness(A) is not None,
        terms=fd.q**A.dim,
    )


# ---- suite driver -------------------------------------------------------------


def _random_poly(fd, rng, max_degree=4):
    deg = rng.randrange(1, max_degree + 1)
    coeffs = [fd.from_encoding(rng.randrange(fd.N)) for _ in range(deg)]
    coeffs.append(fd.from_encoding(rng.randrange(1, fd.N)))  # nonzero leading
    return Poly(fd.ext_ops, coeffs)


def _full_degree_rep(A):
    rep = A._cache.get("full_degree_rep")
    if rep is None:
        rep = A.u
        for a in A.elements():
            if degree_over_base(a) == A.fd.n:
                rep = a
                break
        A._cache["full_degree_rep"] = rep
    return rep


def pair_reports(table: CharacterTable, chi: Character, A: AffineSpace, weil_seed: int):
    """All checks for one (character, space) pair.

    The katz instance uses the first full-degree element of A (falling back
    to u, leaving the hypothesis unmet); the weil instance draws a seeded
    random polynomial of degree 1..4 so every pair also exercises the
    polynomial bound.
    """
    fd = A.fd
    r1, r2 = translate_double_check(chi, A)
    reports = [
        trivial_affine_check(chi, A),
        r1,
        r2,
        affine_main_check(chi, A),
        katz_check(chi, _full_degree_rep(A)),
        weil_check(chi, _random_poly(fd, derive_rng(weil_seed, "weil-poly"))),
    ]
    return reports


def run_suite(
    table: CharacterTable,
    mode: str = "exhaustive",
    dims=None,
    samples: int = 500,
    seed: int = 0,
    budget: int = 200_000,
):
    """Bound reports over a population of (chi, A) pairs.

    exhaustive: every nontrivial character against every affine space with
    dim in dims.  sampled: `samples` seeded pairs, character index and space
    drawn per-pair from split streams.
    """
    fd = table.fd
    dims = sorted(set(dims)) if dims else list(range(1, fd.n + 1))
    reports = []
    if mode == "exhaustive":
        spaces = list(affine_spaces(fd, dims, budget=budget))
        for chi in table.nontrivial_characters():
            for j, A in enumerate(spaces):
                reports.extend(
                    pair_reports(table, chi, A, derive_int(seed, "pair", chi.index, j))
                )
    elif mode == "sampled":
        for i in range(samples):
            rng = derive_rng(seed, "pair-draw", fd.field_str, i)
            chi = table.character(rng.randrange(1, fd.N - 1))
            t = dims[rng.randrange(len(dims))]
            A = random_affine(fd, t, seed=derive_int(seed, "pair-space", fd.field_str, i))
            reports.extend(pair_reports(table, chi, A, derive_int(seed, "pair", i)))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return reports


def violations(reports):
    return [r for r in reports if r.is_violation()]
