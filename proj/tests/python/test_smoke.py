"""Smoke tests for the Python bindings (run with PYTHONPATH=<build>/python)."""

from fractions import Fraction

import pytest

import jmexpand as jm


def test_partition_enumeration():
    assert jm.enumerate_partitions(3) == [(3,), (2, 1), (1, 1, 1)]
    assert len(jm.enumerate_partitions(9)) == 30


def test_coefficients():
    assert jm.a_coeff(3, [4]) == 5
    assert jm.a_coeff(2, [2, 1]) == 0
    assert jm.b_coeff(2, [3]) == 2
    assert jm.c_coeff(3, [2, 1]) == 4
    assert jm.a_power_coeff(2, [3]) == 1
    assert jm.b_power_coeff(1, [2]) == 1
    assert jm.d_coeff(2, [1, 1]) == 2
    assert jm.a_from_c(3, [2, 1, 1]) == 10
    assert jm.c_from_a(3, [2, 1]) == 4
    assert jm.lassalle_identity_check(4, [3, 1])


def test_oracles():
    assert jm.oracle_class_expansion("h", 2, 3) == {
        (3,): 2,
        (2, 1): 0,
        (1, 1, 1): 3,
    }
    assert jm.hecke_expansion("e", 1, 2) == {(2,): 1, (1, 1): 0}
    partial = jm.partial_expansion("h", 3, 6)
    assert partial[(4,)] == 5
    assert jm.jucys_ek_check(2, 4)
    assert jm.hecke_ek_check(1, 3)
    assert jm.coset_type([4, 0, 7, 5, 3, 2, 6, 1]) == (3, 1)
    with pytest.raises(jm.ResourceGuardError):
        jm.oracle_class_expansion("h", 2, 30)


def test_dyck_and_series():
    assert jm.catalan(5) == 42
    assert jm.dyck_area(2) == 6 == jm.dyck_area_bruteforce(2)
    assert jm.composition_area([1, 1]) == 2
    assert jm.lemma_area_check(9)
    assert jm.leading_b([3, 2]) == 2
    assert jm.subleading_b([3, 1]) == 6
    assert jm.cycle_series(4, 5) == [0, 0, 0, 5, 0, 70]
    assert jm.hook_series(3, 3) == [0, 1, 0, 5]
    assert jm.solved_F_series("F22", 4, 4)[2] == 1
    assert jm.polynomial_in_t(3, [2]) == [1, Fraction(7, 2), Fraction(1, 2)]


def test_deformation():
    assert jm.alpha_contents([2], Fraction(1, 2)) == [0, Fraction(1, 2)]
    jack = jm.jack_in_power_basis([2], Fraction(3, 2))
    assert jack[(1, 1)] == 1
    assert jack[(2,)] == Fraction(3, 2)
    table = jm.a_alpha(2, 2, Fraction(1, 2))
    assert table[(2,)] == Fraction(-1, 2)
    instances = jm.conjecture_check(2, 3, [Fraction(1, 2), 2])
    assert instances and all(row["pass"] for row in instances)
    with pytest.raises(jm.DegenerateGramError):
        jm.jack_in_power_basis([2], -1)
