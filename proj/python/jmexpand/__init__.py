"""Exact class expansions of symmetric functions in Jucys-Murphy elements.

Thin wrapper over the C++ extension module. All values are exact: integers
come back as Python ints, rationals as fractions.Fraction, partitions as
tuples of parts in decreasing order.
"""

from ._jmexpand import (
    DegenerateGramError,
    IndexOutOfRangeError,
    InvalidInputError,
    NoSuchPartError,
    NotBiInvariantError,
    NotCentralError,
    ResourceGuardError,
    SingularThetaError,
    a_alpha,
    a_coeff,
    a_from_c,
    a_power_coeff,
    alpha_contents,
    b_coeff,
    b_power_coeff,
    c_coeff,
    c_from_a,
    catalan,
    composition_area,
    conjecture_check,
    coset_type,
    cycle_series,
    d_coeff,
    dyck_area,
    dyck_area_bruteforce,
    enumerate_partitions,
    hecke_ek_check,
    hecke_expansion,
    hook_series,
    jack_in_power_basis,
    jucys_ek_check,
    lassalle_identity_check,
    leading_b,
    lemma_area_check,
    oracle_class_expansion,
    partial_expansion,
    polynomial_in_t,
    solved_F_series,
    subleading_b,
)

__all__ = [
    "DegenerateGramError",
    "IndexOutOfRangeError",
    "InvalidInputError",
    "NoSuchPartError",
    "NotBiInvariantError",
    "NotCentralError",
    "ResourceGuardError",
    "SingularThetaError",
    "a_alpha",
    "a_coeff",
    "a_from_c",
    "a_power_coeff",
    "alpha_contents",
    "b_coeff",
    "b_power_coeff",
    "c_coeff",
    "c_from_a",
    "catalan",
    "composition_area",
    "conjecture_check",
    "coset_type",
    "cycle_series",
    "d_coeff",
    "dyck_area",
    "dyck_area_bruteforce",
    "enumerate_partitions",
    "hecke_ek_check",
    "hecke_expansion",
    "hook_series",
    "jack_in_power_basis",
    "jucys_ek_check",
    "lassalle_identity_check",
    "leading_b",
    "lemma_area_check",
    "oracle_class_expansion",
    "partial_expansion",
    "polynomial_in_t",
    "solved_F_series",
    "subleading_b",
]
