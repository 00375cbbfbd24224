"""Exact arithmetic for Heegaard gluings, symplectic shadows of mapping
classes, the Boolean-algebra sigma calculus and mod-p filtrations of free
groups."""

from torelli._core import (
    DomainError,
    ParseError,
    abel,
    admissible_moduli,
    apply_endo,
    bar_class,
    block_factor,
    bool_mul,
    chi,
    classify,
    cokernel_factors,
    contraction_C,
    det,
    form_d,
    form_value,
    h1_order,
    ia_degree,
    inverse_mod,
    lens_gluing,
    lens_gluing_mod_d,
    magnus_expand,
    map_u,
    mod_d_splitting_exists,
    mu,
    omega,
    pairing_omega,
    phi_invariant,
    pi_in_bracket_span,
    pi_is_zero,
    poincare_sigma,
    reduce_mod,
    sigma_bp,
    sigma_sep,
    smith_normal_form,
    sp2_act,
    splitting_homology,
    tau_k,
    trace_abel,
    transvection,
    trefoil_word,
    trivialize,
    word_image,
    z_degree,
)

__all__ = [
    "DomainError",
    "ParseError",
    "abel",
    "admissible_moduli",
    "apply_endo",
    "bar_class",
    "block_factor",
    "bool_mul",
    "chi",
    "classify",
    "cokernel_factors",
    "contraction_C",
    "det",
    "form_d",
    "form_value",
    "h1_order",
    "ia_degree",
    "inverse_mod",
    "lens_gluing",
    "lens_gluing_mod_d",
    "magnus_expand",
    "map_u",
    "mod_d_splitting_exists",
    "mu",
    "omega",
    "pairing_omega",
    "phi_invariant",
    "pi_in_bracket_span",
    "pi_is_zero",
    "poincare_sigma",
    "reduce_mod",
    "sigma_bp",
    "sigma_sep",
    "smith_normal_form",
    "sp2_act",
    "splitting_homology",
    "tau_k",
    "trace_abel",
    "transvection",
    "trefoil_word",
    "trivialize",
    "word_image",
    "z_degree",
]
