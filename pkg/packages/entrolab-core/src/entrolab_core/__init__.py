"""
Paquete central de entrolab: entropia topologica certificada de mapas del intervalo.
"""

from .errors import (
    BudgetExceededError,
    DomainError,
    EntroLabError,
    FormatError,
    NotAdmissibleError,
    PartitionError,
    PrecisionError,
    PrefixTooShortError,
    ResourceLimitError,
    UnresolvedError,
)
from .structures import EntropyBound, Provenance
from .numkit import (
    IterMapExpr,
    RatInterval,
    derivative_enclosure,
    format_decimal,
    format_rational,
    interval_eval,
    log2_enclosure,
    parse_rational,
    root_isolate,
    to_nats,
)
from .interval_maps import (
    PWLMap,
    QuadMap,
    compose_iterate,
    constant_slope_map,
    entropy_via_variation,
    map_from_json,
    realize_computable,
    realize_sigma1,
    realize_slope,
    staircase,
    variation,
)
from .horseshoe import (
    HorseshoeCert,
    LowerBoundRecord,
    SearchBudget,
    check_certificate,
    horseshoe_bound,
    search_lower_bounds,
)
from .symbolic import (
    SFT,
    IdentityPrefixMap,
    Mixing,
    ShiftConjugate,
    check_mixing,
    count_itineraries,
    glue_maps,
    kappa_decode,
    kappa_encode,
    mixing_gap,
    parse_word,
    format_word,
    phi_modulus,
    sft_entropy,
)
from .logistic import (
    BracketSample,
    Center,
    CenterScan,
    SandwichBudget,
    SandwichResult,
    Side,
    attracting_cycle_at,
    center_entropy,
    collect_brackets,
    entropy_at,
    enumerate_centers,
    markov_partition,
    sandwich,
)

__all__ = [
    "BudgetExceededError",
    "DomainError",
    "EntroLabError",
    "FormatError",
    "NotAdmissibleError",
    "PartitionError",
    "PrecisionError",
    "PrefixTooShortError",
    "ResourceLimitError",
    "UnresolvedError",
    "EntropyBound",
    "Provenance",
    "IterMapExpr",
    "RatInterval",
    "derivative_enclosure",
    "format_decimal",
    "format_rational",
    "interval_eval",
    "log2_enclosure",
    "parse_rational",
    "root_isolate",
    "to_nats",
    "PWLMap",
    "QuadMap",
    "compose_iterate",
    "constant_slope_map",
    "entropy_via_variation",
    "map_from_json",
    "realize_computable",
    "realize_sigma1",
    "realize_slope",
    "staircase",
    "variation",
    "HorseshoeCert",
    "LowerBoundRecord",
    "SearchBudget",
    "check_certificate",
    "horseshoe_bound",
    "search_lower_bounds",
    "SFT",
    "IdentityPrefixMap",
    "Mixing",
    "ShiftConjugate",
    "check_mixing",
    "count_itineraries",
    "glue_maps",
    "kappa_decode",
    "kappa_encode",
    "mixing_gap",
    "parse_word",
    "format_word",
    "phi_modulus",
    "sft_entropy",
    "BracketSample",
    "Center",
    "CenterScan",
    "SandwichBudget",
    "SandwichResult",
    "Side",
    "attracting_cycle_at",
    "center_entropy",
    "collect_brackets",
    "entropy_at",
    "enumerate_centers",
    "markov_partition",
    "sandwich",
]
