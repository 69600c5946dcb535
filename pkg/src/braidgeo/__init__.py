"""Exact tools for braid closures: certified rewriting moves between band
presentations, Levine-Tristram invariants at low-order roots of unity, and
the resulting constraints on fillings of cyclic branched covers."""

from .braids import (
    BraidWord,
    GarsideNormalForm,
    closure_components,
    closure_stats,
    conjugate_by,
    format_normal_form,
    left_normal_form,
    parse_word,
    torus_braid,
    words_equal,
)
from .catalog import (
    CatalogEntry,
    Expectation,
    audit_catalog,
    entry_by_name,
    load_catalog,
)
from .cyclotomic import (
    Cyclo,
    hermitian_signature_nullity,
    rational,
    root_of_unity,
    zeta,
)
from .geography import (
    CapBounds,
    FillingPrediction,
    GateError,
    GateReport,
    betti_resolution,
    cap_bounds,
    euler_characteristic,
    gates,
    predict,
    reproduce_table,
    rows_to_csv,
    rows_to_text,
)
from .moves import (
    ChainStep,
    CobordismChain,
    VerificationReport,
    format_chain,
    infer_hats,
    load_chain,
    parse_chain,
    reachable_torus_links,
    verify_chain,
    verify_step,
)
from .seifert import SeifertData, bennequin_seifert, format_seifert, parse_seifert
from .signatures import (
    LTValue,
    branched_cover_invariants,
    lt_sums,
    lt_value,
    lt_value_float,
    satellite_signature,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
