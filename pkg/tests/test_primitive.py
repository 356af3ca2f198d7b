"""Primitive-element scans: indicator, censuses, thresholds, digit prescriptions."""

import pytest

from charsums import (
    build_field,
    count_primitive,
    digit_search,
    grassmann_threshold,
    is_primitive,
    make_affine,
    primitive_indicator,
    primitive_space_scan,
    primitive_weight,
    translate_check,
)
from charsums.affine import rref_rows as _rref
from charsums.arith import euler_phi
from charsums.fields import degree_over_base, multiplicative_order, subfield_elements


def test_indicator_matches_order_test(t9, t16):
    for table in (t9, t16):
        for a in table.fd.elements():
            w = primitive_weight(a, table)
            assert abs(w - round(w)) < 1e-9
            assert primitive_indicator(a, table) == int(is_primitive(a))


def test_count_primitive_full_space(f9):
    A = make_affine(f9.zero, [f9.one, f9.x])
    res = count_primitive(A)
    assert res.count == 4 == euler_phi(f9.N - 1)
    assert res.contains_primitive
    assert res.condition_ii  # the full space always has a full-degree ratio
    # the density bound is negative here: n * W(8) / sqrt(3) > 1
    assert res.density_bound < 0
    assert res.count > res.density_bound


def test_count_primitive_subfield_line(f9):
    A = make_affine(f9.zero, [f9.one])  # F_3 itself
    res = count_primitive(A)
    assert res.count == 0 and not res.contains_primitive
    assert not res.condition_ii


def test_condition_i_on_scaled_subfield(f9):
    # y * F_3 for primitive y: y is primitive, in A, and A = y F_3
    y = next(a for a in f9.elements() if is_primitive(a))
    A = make_affine(y, [y + y])  # y + span{2y} = y * F_3^* plus 0... rank 1
    res = count_primitive(A)
    assert res.contains_primitive
    assert res.condition_i
    assert res.condition_i_d == 1


def test_scan_results_json_shape(f9):
    res = count_primitive(make_affine(f9.x, [f9.one]))
    d = res.to_json_dict()
    assert set(d) == {
        "field",
        "space",
        "dim",
        "count",
        "density_bound",
        "condition_i",
        "condition_i_d",
        "condition_i_y",
        "condition_ii",
        "condition_ii_y",
        "condition_ii_z",
        "contains_primitive",
    }


def test_exhaustive_scan_f9_no_necessity_violations(f9):
    report = primitive_space_scan(f9)
    assert report.guaranteed  # n = 2 <= q = 3
    assert len(report.results) == 13
    assert report.necessity_violations == []
    # every result with a primitive satisfies a condition
    for r in report.results:
        if r.contains_primitive:
            assert r.condition_i or r.condition_ii


def test_exhaustive_scan_f25_no_necessity_violations():
    fd = build_field(5, 1, 2, seed=0)
    report = primitive_space_scan(fd)
    assert report.guaranteed
    assert report.necessity_violations == []


def test_scan_guaranteed_flag_off_when_n_exceeds_q(f16):
    report = primitive_space_scan(f16, dims=[1, 2])
    assert not report.guaranteed  # n = 4 > q = 2: violations would be data


def test_sampled_scan_deterministic(f16):
    a = primitive_space_scan(f16, mode="sampled", samples=20, seed=5)
    b = primitive_space_scan(f16, mode="sampled", samples=20, seed=5)
    assert [r.to_json_dict() for r in a.results] == [
        r.to_json_dict() for r in b.results
    ]
    with pytest.raises(ValueError):
        primitive_space_scan(f16, mode="typo")


def test_translate_exhaustive_small_fields(f9, f16q4):
    # every full-degree theta keeps a primitive element in theta + F_q
    for fd in (f9, f16q4):
        rep = translate_check(fd)
        assert rep.exhaustive
        assert rep.tested == sum(
            1 for a in fd.elements() if degree_over_base(a) == fd.n
        )
        assert rep.failures == []


def test_translate_sampled_mode(f16):
    rep = translate_check(f16, seed=1, samples=10, cap=10)  # force sampling
    assert not rep.exhaustive
    assert rep.tested == 10
    assert rep.failures == []


def test_grassmann_threshold_f9(f9):
    rep = grassmann_threshold(f9)
    assert rep.complete and rep.value == 1
    assert rep.lower == rep.upper == 1
    assert rep.subfield_dim == 1
    # the witness really is primitive-free
    from charsums import parse_space_text

    W = parse_space_text(f9, rep.witness)
    assert not any(is_primitive(a) for a in W.elements())


def test_grassmann_threshold_f16(f16):
    rep = grassmann_threshold(f16)
    assert rep.complete and rep.value == 2
    assert rep.subfield_dim == 2  # n / p_least = 4 / 2
    from charsums import parse_space_text

    W = parse_space_text(f16, rep.witness)
    assert W.dim == 2
    assert not any(is_primitive(a) for a in W.elements())


def test_grassmann_budget_brackets(f16):
    rep = grassmann_threshold(f16, budget=3)
    assert not rep.complete
    assert rep.lower == 2 and rep.upper == 3
    with pytest.raises(ValueError):
        rep.value


def test_digit_search_matches_brute_force(f9):
    basis = [f9.one, f9.x]
    for pos in (0, 1):
        for val in range(3):
            hit = digit_search(f9, basis, {pos: val})
            brute = [
                a
                for a in f9.elements()
                if a.coeffs[pos] == val and is_primitive(a)
            ]
            if brute:
                assert hit is not None
                assert is_primitive(hit) and hit.coeffs[pos] == val
            else:
                assert hit is None


def test_digit_search_all_positions_pins_one_element(f9):
    prim = next(a for a in f9.elements() if is_primitive(a))
    basis = [f9.one, f9.x]
    assert digit_search(f9, basis, {0: prim.coeffs[0], 1: prim.coeffs[1]}) == prim
    nonprim = f9.one
    assert digit_search(f9, basis, {0: 1, 1: 0}) is None


def test_digit_search_residual_subfield_is_sharp(f16):
    # basis {1, omega, alpha, alpha^2} with omega of order 3: prescribing the
    # last two digits to zero leaves span{1, omega} = F_4, which is
    # primitive-free, so the search honestly returns nothing
    omega = next(
        a
        for a in f16.elements()
        if not a.is_zero() and multiplicative_order(a) == 3
    )
    basis = [f16.one, omega]
    for cand in (f16.x, f16.x ** 2, f16.x ** 3):  # greedy completion
        rows, _ = _rref([b.coeffs for b in basis + [cand]], f16.base)
        if len(rows) == len(basis) + 1:
            basis.append(cand)
        if len(basis) == 4:
            break
    assert digit_search(f16, basis, {2: 0, 3: 0}) is None
    # freeing one more digit exposes a primitive element again
    assert digit_search(f16, basis, {3: 0}) is not None
    # sanity: span{1, omega} is the subfield F_4
    f4 = set(subfield_elements(f16, 2))
    spanned = {
        f16.one.scale(c) + omega.scale(d) for c in range(2) for d in range(2)
    }
    assert spanned == f4


def test_digit_search_validation(f9):
    basis = [f9.one, f9.x]
    with pytest.raises(ValueError):
        digit_search(f9, [f9.one], {})  # wrong basis size
    with pytest.raises(ValueError):
        digit_search(f9, [f9.one, f9.one + f9.one], {})  # dependent
    with pytest.raises(ValueError):
        digit_search(f9, basis, {2: 0})  # position out of range
    with pytest.raises(ValueError):
        digit_search(f9, basis, {0: 5})  # value out of range
