"""Affine spaces: canonical forms, enumeration, degree profiles, the dichotomy."""

import pytest

from charsums import (
    AffineSpace,
    affine_spaces,
    dichotomy,
    degree_ratio_witness,
    make_affine,
    parse_space_text,
    random_affine,
    subspaces,
)
from charsums.affine import (
    coset_subfield_divisor,
    gaussian_binomial,
    nullspace,
    rref_rows,
    space_count,
)
from charsums.fields import degree_over_base
from charsums.util import CapExceeded, derive_rng


def test_gaussian_binomial_values():
    assert gaussian_binomial(2, 1, 3) == 4
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(4, 1, 2) == 15
    assert gaussian_binomial(3, 0, 5) == 1
    assert gaussian_binomial(3, 4, 5) == 0


def test_subspace_enumeration_counts(f9, f16):
    assert len(list(subspaces(f9, 1))) == 4
    assert len(list(subspaces(f16, 2))) == 35
    assert len(list(subspaces(f16, 3))) == 15
    # all distinct as canonical objects
    seen = set(subspaces(f16, 2))
    assert len(seen) == 35


def test_affine_space_counts(f9):
    spaces = list(affine_spaces(f9, [1, 2]))
    assert len(spaces) == space_count(f9, [1, 2]) == 4 * 3 + 1
    assert len(set(spaces)) == len(spaces)
    with pytest.raises(CapExceeded):
        list(affine_spaces(f9, [1], budget=5))


def test_rref_canonical_and_membership(f9):
    # two generating sets of the same plane give the identical object
    x = f9.x
    a = make_affine(f9.one, [x, x + f9.one])
    b = make_affine(f9.one + x, [x + x, f9.one])
    assert a == b and hash(a) == hash(b)
    assert a.space_text() == b.space_text()
    members = set(a.elements())
    assert len(members) == 9
    for c in f9.elements():
        assert (c in members) == a.contains(c)


def test_coset_representative_is_reduced(f9):
    A = make_affine(f9.x + f9.one, [f9.one])
    for col in A.pivots:
        assert A.u.coeffs[col] == 0


def test_make_affine_rejects_rank_zero(f9):
    with pytest.raises(ValueError):
        make_affine(f9.one, [f9.zero])


def test_nullspace_solves(f9):
    base = f9.base
    rng = derive_rng(5, "nullspace")
    for _ in range(40):
        rows = [
            tuple(rng.randrange(3) for _ in range(4))
            for _ in range(rng.randrange(1, 4))
        ]
        kernel = nullspace(rows, base)
        rank = len(rref_rows(rows, base)[0])
        assert len(kernel) == 4 - rank
        for v in kernel:
            for row in rows:
                s = 0
                for c, m in zip(v, row):
                    s = base.add(s, base.mul(c, m))
                assert s == 0


def test_degree_profile_full_space(f9):
    A = make_affine(f9.zero, [f9.one, f9.x])
    assert A.degree_profile() == {1: 3, 2: 6}
    line = make_affine(f9.x, [f9.one])
    assert line.degree_profile() == {1: 0, 2: 3}


def test_profile_sums_to_size(f16):
    for A in affine_spaces(f16, [1, 2, 3]):
        prof = A.degree_profile()
        assert sum(prof.values()) == f16.q**A.dim


def test_subfield_slices_have_power_of_q_size(f9, f16):
    # A intersected with any subfield is affine over F_q or empty
    for fd in (f9, f16):
        for A in affine_spaces(fd, list(range(1, fd.n + 1))):
            prof = A.degree_profile()
            for d in prof:
                in_subfield_count = sum(prof[e] for e in prof if d % e == 0)
                assert in_subfield_count == 0 or _is_power(in_subfield_count, fd.q)


def _is_power(m, q):
    while m % q == 0:
        m //= q
    return m == 1


def test_dichotomy_exhaustive_when_n_le_q(f9, f16q4):
    # n <= q: every nonzero y in A falls in case (i) or case (ii)
    for fd in (f9, f16q4):
        assert fd.n <= fd.q
        for A in affine_spaces(fd, [1, 2]):
            for y in A.elements():
                if y.is_zero():
                    continue
                res = dichotomy(A, y)
                assert res.guaranteed
                assert res.case in ("i", "ii")
                if res.case == "i":
                    assert res.d is not None and fd.n % res.d == 0 and res.d < fd.n
                    yinv = y.inverse()
                    for a in A.elements():
                        assert degree_over_base(yinv * a) <= res.d or a.is_zero()
                else:
                    assert degree_over_base(y / res.z) == fd.n


def test_dichotomy_cases_are_certified_even_past_guarantee(f16):
    # n > q: the trichotomy may emit "neither", flagged as unguaranteed
    cases = set()
    for A in affine_spaces(f16, [1, 2]):
        for y in A.elements():
            if y.is_zero():
                continue
            res = dichotomy(A, y)
            assert not res.guaranteed
            cases.add(res.case)
    assert "neither" in cases or cases <= {"i", "ii"}


def test_dichotomy_validates_membership(f9):
    A = make_affine(f9.x, [f9.one])
    outside = f9.x + f9.x
    with pytest.raises(ValueError):
        dichotomy(A, outside)
    Z = make_affine(f9.zero, [f9.one])
    with pytest.raises(ValueError):
        dichotomy(Z, f9.zero)


def test_coset_subfield_divisor_on_scaled_subfield(f16):
    # A = y + F_2 * (y*omega - y) sits inside y * F_4 for full-degree y
    from charsums.fields import subfield_elements

    y = next(a for a in f16.elements() if degree_over_base(a) == 4)
    omega = next(a for a in subfield_elements(f16, 2) if degree_over_base(a) == 2)
    A = make_affine(y, [y * omega - y])
    assert coset_subfield_divisor(A, y) == 2


def test_degree_ratio_witness(f9):
    full = make_affine(f9.zero, [f9.one, f9.x])
    w = degree_ratio_witness(full)
    assert w is not None
    a, v = w
    assert degree_over_base(a / v) == 2
    inside = make_affine(f9.zero, [f9.one])  # F_3 itself: all ratios degree 1
    assert degree_ratio_witness(inside) is None


def test_random_affine_deterministic(f16):
    a = random_affine(f16, 2, seed=11)
    b = random_affine(f16, 2, seed=11)
    assert a == b and a.dim == 2
    c = random_affine(f16, 2, seed=12)
    assert a != c or a is c  # overwhelmingly different draws


def test_space_text_roundtrip(f9, f16):
    for fd in (f9, f16):
        for A in affine_spaces(fd, list(range(1, fd.n + 1))):
            assert parse_space_text(fd, A.space_text()) == A


def test_parse_space_text_errors(f9):
    for bad in (
        "V=1,0",  # missing u=
        "u=0,0",  # missing V section
        "u=0,0;V=",  # empty basis
        "u=0,0;V=9,0",  # coefficient out of range
        "u=0,0;V=1,0,0",  # vector too long
        "u=a,0;V=1,0",  # not an integer
    ):
        with pytest.raises(ValueError) as exc:
            parse_space_text(f9, bad)
        assert "offset" in str(exc.value)
    with pytest.raises(ValueError):
        parse_space_text(f9, "u=0,0;V=0,0")  # parses fine, rank zero rejected
