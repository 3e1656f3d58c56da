"""Schatten norms, angle-sup numerical radii with certified enclosures,
deformed polar transforms, and a registry of checkable norm inequalities."""

from ._version import __version__
from .campaign import (
    CampaignConfig,
    default_config,
    has_theorem_violation,
    replay,
    run_campaign,
    summarize_text,
)
from .ensembles import KINDS, EnsembleSpec, derive_seed, sample
from .inequalities import (
    REGISTRY,
    CheckDef,
    HypothesisError,
    InequalityRecord,
    Interval,
    UnknownCheckError,
    check,
    list_registry,
    witness_matrix,
)
from .linalg import (
    DomainError,
    HermitianEigen,
    Svd,
    as_matrix,
    cartesian,
    herm_apply,
    herm_eigen,
    modulus,
    svd,
    trace,
)
from .matio import (
    CSV_COLUMNS,
    load_config,
    load_matrix,
    load_report,
    report_schema,
    save_config,
    save_matrix,
    write_report_csv,
    write_report_json,
)
from .schatten import (
    RadiusEstimate,
    combine_p,
    off_diag_radius,
    p_num_radius,
    p_token,
    parse_p,
    schatten_norm,
    two_power,
    w2_exact,
)
from .transforms import (
    FunctionPair,
    PolarFactors,
    aluthge_fg,
    aluthge_t,
    modulus_powers,
    off_diag_block,
    polar,
    power_pair,
    scaled_power_pair,
)

__all__ = [
    "CSV_COLUMNS",
    "CampaignConfig",
    "CheckDef",
    "DomainError",
    "EnsembleSpec",
    "FunctionPair",
    "HermitianEigen",
    "HypothesisError",
    "InequalityRecord",
    "Interval",
    "KINDS",
    "PolarFactors",
    "REGISTRY",
    "RadiusEstimate",
    "Svd",
    "UnknownCheckError",
    "__version__",
    "aluthge_fg",
    "aluthge_t",
    "as_matrix",
    "cartesian",
    "check",
    "combine_p",
    "default_config",
    "derive_seed",
    "has_theorem_violation",
    "herm_apply",
    "herm_eigen",
    "list_registry",
    "load_config",
    "load_matrix",
    "load_report",
    "modulus",
    "modulus_powers",
    "off_diag_block",
    "off_diag_radius",
    "p_num_radius",
    "p_token",
    "parse_p",
    "polar",
    "power_pair",
    "replay",
    "report_schema",
    "run_campaign",
    "sample",
    "save_config",
    "save_matrix",
    "scaled_power_pair",
    "schatten_norm",
    "summarize_text",
    "svd",
    "trace",
    "two_power",
    "w2_exact",
    "witness_matrix",
    "write_report_csv",
    "write_report_json",
]
