"""Truncated q-series arithmetic and congruence verification for
k-tuple l-regular partition counts.

The package is organized around one carrier type, TruncatedSeries: a
dense coefficient vector over Z or Z/mZ.  On top of it sit Pochhammer
and eta-quotient expansions (etaq), the tuple-count series and its
enumeration oracle (tuples), congruence families with an exhaustive
verifier (congruence), and a discovery scanner (search).  The cli
module exposes everything as the `tuplereg` command.
"""

from .congruence import (
    FAIL,
    PASS,
    PASS_WITH_EXCEPTIONS,
    CongruenceFamily,
    NFilter,
    VerificationReport,
    check_family,
    family_conj11,
    family_cor14,
    family_eq28,
    family_gen_thm29,
    family_nss_13,
    family_nss_16,
    family_thm12,
    family_thm13,
    ramanujan_families,
)
from .etaq import (
    EtaQuotientSpec,
    eta_quotient,
    identity_suite,
    neg_q_pochhammer,
    pochhammer,
    pochhammer_product,
    theta_cube,
    theta_sextic,
    theta_square,
)
from .numtheory import (
    Form,
    FormRepresentation,
    factorize,
    inv_mod,
    is_prime,
    is_triangular,
    legendre,
    nu_p,
    represent,
    residue_of_family_offset,
)
from .search import ScanJob, audit_exceptions, scan, scan_thm13_alpha0
from .series import Ring, TruncatedSeries, make_series
from .tuples import ORACLE_LIMIT, TuplePartitionSpec, t2_parity, t_oracle, t_series

__version__ = "0.1.0"

__all__ = [
    "CongruenceFamily",
    "EtaQuotientSpec",
    "FAIL",
    "Form",
    "FormRepresentation",
    "NFilter",
    "ORACLE_LIMIT",
    "PASS",
    "PASS_WITH_EXCEPTIONS",
    "Ring",
    "ScanJob",
    "TruncatedSeries",
    "TuplePartitionSpec",
    "VerificationReport",
    "audit_exceptions",
    "check_family",
    "eta_quotient",
    "factorize",
    "family_conj11",
    "family_cor14",
    "family_eq28",
    "family_gen_thm29",
    "family_nss_13",
    "family_nss_16",
    "family_thm12",
    "family_thm13",
    "identity_suite",
    "inv_mod",
    "is_prime",
    "is_triangular",
    "legendre",
    "make_series",
    "neg_q_pochhammer",
    "nu_p",
    "pochhammer",
    "pochhammer_product",
    "ramanujan_families",
    "represent",
    "residue_of_family_offset",
    "scan",
    "scan_thm13_alpha0",
    "t2_parity",
    "t_oracle",
    "t_series",
    "theta_cube",
    "theta_sextic",
    "theta_square",
    "__version__",
]
