"""Multiplicative characters: table construction, orthogonality, order classes."""

import pytest

from charsums import (
    CapExceeded,
    build_field,
    build_table,
    characters_of_order,
)
from charsums.arith import divisors, euler_phi
from charsums.characters import trivial_on_subfield
from charsums.fields import subfield_elements

TIGHT = 1e-12


def test_table_log_inverts_generator_powers(t9):
    fd = t9.fd
    for a in fd.elements():
        if a.is_zero():
            with pytest.raises(ValueError):
                t9.log(a)
        else:
            assert t9.theta ** t9.log(a) == a


def test_character_at_zero_and_one(t9):
    for chi in t9.all_characters():
        assert chi(t9.fd.zero) == 0j
        assert abs(chi(t9.fd.one) - 1) < TIGHT


def test_orthogonality_over_group(t9, t16):
    for table in (t9, t16):
        nz = [a for a in table.fd.elements() if not a.is_zero()]
        for chi in table.all_characters():
            s = sum(chi(a) for a in nz)
            if chi.is_trivial():
                assert abs(s - (table.fd.N - 1)) < 1e-9
            else:
                assert abs(s) < 1e-9


def test_orthogonality_over_characters(t9):
    fd = t9.fd
    chars = list(t9.all_characters())
    for a in fd.elements():
        if a.is_zero():
            continue
        s = sum(chi(a) for chi in chars)
        expect = fd.N - 1 if a == fd.one else 0
        assert abs(s - expect) < 1e-9


def test_multiplicativity_exhaustive(t9):
    fd = t9.fd
    nz = [a for a in fd.elements() if not a.is_zero()]
    for chi in t9.all_characters():
        for a in nz:
            for b in nz:
                assert abs(chi(a * b) - chi(a) * chi(b)) < TIGHT


def test_values_lie_on_unit_circle(t16):
    for chi in t16.all_characters():
        for a in t16.fd.elements():
            if not a.is_zero():
                assert abs(abs(chi(a)) - 1) < TIGHT


def test_order_classes_partition_the_group(t9, t16):
    for table in (t9, t16):
        m = table.fd.N - 1
        seen = set()
        for d in divisors(m):
            block = characters_of_order(table, d)
            assert len(block) == euler_phi(d)
            for chi in block:
                assert chi.order == d
                # chi(theta) is a primitive d-th root of unity
                val = chi(table.theta)
                assert abs(val**d - 1) < 1e-9
                if d > 1:
                    assert abs(val - 1) > 1e-9
                seen.add(chi.index)
        assert len(seen) == m


def test_characters_of_order_validates(t9):
    with pytest.raises(ValueError):
        characters_of_order(t9, 3)  # 3 does not divide 8


def test_trivial_on_subfield_matches_evaluation(t16):
    fd = t16.fd
    for d in divisors(fd.n):
        sub = [a for a in subfield_elements(fd, d) if not a.is_zero()]
        for chi in t16.all_characters():
            flag = trivial_on_subfield(chi, d)
            evaluated = all(abs(chi(a) - 1) < 1e-9 for a in sub)
            assert flag == evaluated


def test_trivial_on_subfield_validates(t16):
    with pytest.raises(ValueError):
        trivial_on_subfield(t16.trivial_character(), 3)  # 3 does not divide 4


def test_character_index_wraps(t9):
    m = t9.fd.N - 1
    assert t9.character(m).is_trivial()
    assert t9.character(m + 1) == t9.character(1)


def test_build_table_guards():
    line = build_field(5, 1, 1)
    with pytest.raises(ValueError):
        build_table(line)  # needs a genuine extension
    fd = build_field(3, 1, 2)
    with pytest.raises(CapExceeded):
        build_table(fd, cap=4)


def test_build_table_deterministic(f9):
    a = build_table(f9, seed=9)
    b = build_table(f9, seed=9)
    assert a.theta == b.theta and a.dlog == b.dlog
