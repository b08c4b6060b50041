"""Exact tools for coloured quiver mutation, polygon angulations and the
braid presentations they carry."""

from angulate.braid import (
    BraidNormalForm,
    BraidWord,
    BudgetExceeded,
    braid_word,
    concat_words,
    equal,
    format_braid_word,
    inverse_word,
    normal_form,
    parse_braid_word,
    permutation_image,
)
from angulate.coset import (
    coset_enumerate,
    involutory_relators,
)
from angulate.correspondence import (
    BijectionReport,
    CellColourSums,
    angulation_quiver,
    bijection_csv,
    check_bijection,
    check_commutation,
    colour_sums,
    commutation_sweep,
    cyclic_colour_sums,
    star_angulation,
)
from angulate.presentation import (
    GroupHom,
    HomReport,
    Presentation,
    Relator,
    apply_hom,
    as_braid_word,
    compose_chain,
    compose_homs,
    fan_translation,
    free_reduce,
    identity_hom,
    inverse_chain,
    inverse_mutation_hom,
    invert_word,
    kcycle_relation_check,
    mutation_hom,
    presentation_json,
    presentation_of,
    presentation_text,
    verify_hom,
)
from angulate.polygon import (
    Angulation,
    Cell,
    RotationBurst,
    UnionPolygon,
    angulation_from_json,
    angulation_to_json,
    angulation_to_svg,
    cells,
    distance,
    distance_table,
    enumerate_angulations,
    fan_angulation,
    intersects,
    is_fan,
    is_m_diagonal,
    make_angulation,
    random_angulation,
    reduce_to_fan,
    replay_rotations,
    rotate,
    rotation_order_sweep,
    rotated_diagonal,
    undo_reduction,
    union_polygon,
)
from angulate.quiver import (
    ColouredQuiver,
    canonical_key,
    from_arrows,
    linear_quiver,
    mutate_algorithm,
    mutate_clockwise,
    mutate_formula,
    mutate_path,
    mutation_reachable,
    quiver_from_json,
    quiver_to_dot,
    quiver_to_json,
    reverse_arrows,
    validate,
)

__all__ = [
    "Angulation",
    "BijectionReport",
    "BraidNormalForm",
    "BraidWord",
    "BudgetExceeded",
    "Cell",
    "CellColourSums",
    "ColouredQuiver",
    "GroupHom",
    "HomReport",
    "Presentation",
    "Relator",
    "RotationBurst",
    "UnionPolygon",
    "angulation_from_json",
    "angulation_quiver",
    "angulation_to_json",
    "angulation_to_svg",
    "apply_hom",
    "as_braid_word",
    "bijection_csv",
    "braid_word",
    "canonical_key",
    "cells",
    "check_bijection",
    "check_commutation",
    "colour_sums",
    "commutation_sweep",
    "compose_chain",
    "compose_homs",
    "concat_words",
    "coset_enumerate",
    "cyclic_colour_sums",
    "distance",
    "distance_table",
    "enumerate_angulations",
    "equal",
    "fan_angulation",
    "fan_translation",
    "format_braid_word",
    "free_reduce",
    "from_arrows",
    "identity_hom",
    "intersects",
    "inverse_chain",
    "inverse_mutation_hom",
    "inverse_word",
    "invert_word",
    "involutory_relators",
    "is_fan",
    "is_m_diagonal",
    "kcycle_relation_check",
    "linear_quiver",
    "make_angulation",
    "mutate_algorithm",
    "mutate_clockwise",
    "mutate_formula",
    "mutate_path",
    "mutation_hom",
    "mutation_reachable",
    "normal_form",
    "parse_braid_word",
    "permutation_image",
    "presentation_json",
    "presentation_of",
    "presentation_text",
    "quiver_from_json",
    "quiver_to_dot",
    "quiver_to_json",
    "random_angulation",
    "reduce_to_fan",
    "replay_rotations",
    "reverse_arrows",
    "rotate",
    "rotated_diagonal",
    "rotation_order_sweep",
    "star_angulation",
    "undo_reduction",
    "union_polygon",
    "validate",
    "verify_hom",
]
