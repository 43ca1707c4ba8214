from ._core import (
    FlagflowError,
    GroupSpec,
    builtin_spec,
    builtin_spec_names,
    check_report,
    contact_test,
    is_admissible,
    jordan_projection,
    load_spec,
    log_zeta,
    m_alpha,
    parse_spec,
    period_spectrum,
    run_suite,
    suite_names,
)
from ._core import __version__

__all__ = [
    "FlagflowError",
    "GroupSpec",
    "builtin_spec",
    "builtin_spec_names",
    "check_report",
    "contact_test",
    "is_admissible",
    "jordan_projection",
    "load_spec",
    "log_zeta",
    "m_alpha",
    "parse_spec",
    "period_spectrum",
    "run_suite",
    "suite_names",
    "__version__",
]
