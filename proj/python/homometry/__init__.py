"""Difference multisets, dihedral classification, and homometry checks on Z_N.

Thin re-export of the compiled core. Partitions are lists of index lists,
multisets are multiplicity vectors indexed by cyclic distance from 0, and
reports come back as plain dicts matching the CLI's JSON schemas.
"""

from ._core import (
    autocorr_form,
    autocorrelation,
    canonical_subset,
    classify_pair,
    complement,
    cross_difference,
    cyclic_distance,
    enumerate_partitions,
    equivalent_witness,
    form_evaluate,
    forms_equal,
    forms_equal_sparse,
    homometric_partitions,
    homometric_sets,
    power_spectrum,
    profile_for_n,
    pseudo_equivalent_witness,
    run_table1,
    sample_partitions,
    self_difference,
    verify,
)

__all__ = [
    "autocorr_form",
    "autocorrelation",
    "canonical_subset",
    "classify_pair",
    "complement",
    "cross_difference",
    "cyclic_distance",
    "enumerate_partitions",
    "equivalent_witness",
    "form_evaluate",
    "forms_equal",
    "forms_equal_sparse",
    "homometric_partitions",
    "homometric_sets",
    "power_spectrum",
    "profile_for_n",
    "pseudo_equivalent_witness",
    "run_table1",
    "sample_partitions",
    "self_difference",
    "verify",
]
