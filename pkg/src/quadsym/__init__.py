"""Quadratic symbols of finite groups, their discriminants, and exact
character tables."""
from __future__ import annotations

from .groups import (
    ClassSet,
    ConjugacyClass,
    GroupTable,
    OrderCapExceeded,
    class_power_map,
    conjugacy_classes,
    direct_product,
    make_group,
    permutation_parity,
    verify_axioms,
)
from .groupspec import GroupSpecError, format_group_spec, parse_group_spec
from .ntheory import (
    FactoredInt,
    FundamentalDiscriminant,
    factorize,
    fundamental_discriminant,
    is_discriminant,
    is_perfect_square,
    jacobi,
    kronecker,
    n_star,
)
from .reciprocity import (
    Discriminant,
    RealComplexSplit,
    SymbolCharacter,
    VerificationReport,
    discriminant,
    quadratic_symbol,
    real_complex_split,
    sl2_formula_check,
    symbol_character,
    verify_group,
)
from .chartab import (
    CharacterTable,
    CycInt,
    character_table,
    cyclotomic_polynomial,
    det_identities,
    export_table,
    galois_apply,
    verify_orthogonality,
)

__all__ = [
    "ClassSet",
    "ConjugacyClass",
    "GroupTable",
    "OrderCapExceeded",
    "class_power_map",
    "conjugacy_classes",
    "direct_product",
    "make_group",
    "permutation_parity",
    "verify_axioms",
    "GroupSpecError",
    "format_group_spec",
    "parse_group_spec",
    "FactoredInt",
    "FundamentalDiscriminant",
    "factorize",
    "fundamental_discriminant",
    "is_discriminant",
    "is_perfect_square",
    "jacobi",
    "kronecker",
    "n_star",
    "Discriminant",
    "RealComplexSplit",
    "SymbolCharacter",
    "VerificationReport",
    "discriminant",
    "quadratic_symbol",
    "real_complex_split",
    "sl2_formula_check",
    "symbol_character",
    "verify_group",
    "CharacterTable",
    "CycInt",
    "character_table",
    "cyclotomic_polynomial",
    "det_identities",
    "export_table",
    "galois_apply",
    "verify_orthogonality",
]
