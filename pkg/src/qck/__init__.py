"""Seminormal quasi-crystals, free quasi-crystal monoids, plactic and hypoplactic congruences."""
from .core import (INF, QuasiCrystal, ValidationReport, check_isomorphism_pair, is_crystal, load_json,
                   standard_crystal_A, standard_crystal_C, trivial_crystal, validate_seminormal)
from .products import Mode, iterated_product, quasi_tensor, tensor
from .words import (parse_word, format_word, sgn_qtensor, sgn_tensor, word_e, word_f, word_stats,
                    word_weight)
from .graphs import ComponentGraph, component, export_dot, export_json, iso_from
from .congruence import (enumerate_classes, hypo_equiv, plactic_equiv, verify_quotient_inclusion,
                         weights_linearly_independent)
from .transform import derive_qtensor_structure, find_blocking_decomposition, transform_graph

__all__ = [
    "INF", "QuasiCrystal", "ValidationReport", "check_isomorphism_pair", "is_crystal", "load_json",
    "standard_crystal_A", "standard_crystal_C", "trivial_crystal", "validate_seminormal",
    "Mode", "iterated_product", "quasi_tensor", "tensor",
    "parse_word", "format_word", "sgn_qtensor", "sgn_tensor", "word_e", "word_f", "word_stats", "word_weight",
    "ComponentGraph", "component", "export_dot", "export_json", "iso_from",
    "enumerate_classes", "hypo_equiv", "plactic_equiv", "verify_quotient_inclusion",
    "weights_linearly_independent",
    "derive_qtensor_structure", "find_blocking_decomposition", "transform_graph",
]
