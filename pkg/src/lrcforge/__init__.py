"""Good polynomials over finite fields and the locally recoverable codes
they carry: field arithmetic, split-place counting, monodromy statistics,
and Tamo-Barg style code construction."""

from .errors import *  # noqa: F401,F403
from .field import (  # noqa: F401
    FieldCtx,
    FieldElement,
    default_modulus,
    enumerate_elements,
    make_field,
    parse_field_spec,
    prime_power_split,
)
from .poly import (  # noqa: F401
    FactorShape,
    Poly,
    count_distinct_roots,
    discriminant_pencil,
    factor_shape,
    format_poly,
    is_separable,
    is_square_polynomial,
    parse_element,
    parse_poly,
    poly_gcd,
    powmod,
    roots_of,
    splits_completely,
)
from .goodpoly import (  # noqa: F401
    GROUP_ORDERS,
    GroupInfo,
    classify_generic_group,
    construct_witness,
    count_split_places,
    genus_upper,
    is_good_at,
    split_bounds,
    witness_bounds,
)
from .monodromy import (  # noqa: F401
    CANDIDATES_BY_DEGREE,
    CensusResult,
    Identification,
    census,
    even_subgroup_test,
    group_order,
    identify_group,
    reference_distribution,
    total_variation,
)
from .lrc import (  # noqa: F401
    LrcCode,
    build_code,
    designed_distance,
    encode,
    generator_matrix,
    min_distance_bruteforce,
    repair,
)

__version__ = "0.1.0"
