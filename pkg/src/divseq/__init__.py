"""Exact running-lcm sequences over gcd domains.

The library computes lcm-sequences c_n = lcm(a_1..a_n) / lcm(a_1..a_(n-1))
exactly, over the integers and over integer polynomial rings in any
number of variables, and uses them to test strong divisibility, invert
divisor products, and derive cyclotomic polynomials.
"""

from .errors import (
    DivseqError,
    DomainError,
    InexactDivision,
    InternalError,
    UsageError,
)

__version__ = "0.1.0"

from .catalog import (
    CATALOG,
    CatalogEntry,
    builtin,
    catalog_names,
    cyclotomic_phi,
    cyclotomic_phi_at,
    psi,
)
from .numtheory import Factorization, divisors, euler_phi, factorize, mobius
from .ring import (
    INT,
    Ring,
    RingElement,
    evaluate,
    exact_div,
    gcd,
    gcd_many,
    is_associate,
    lcm,
    lcm_many,
    normalize,
)
from .sequences import (
    EquivalenceReport,
    InversionResult,
    LcmSequenceResult,
    SequenceSpec,
    VerificationReport,
    Witness,
    check_special_coprime_criterion,
    check_strong_divisibility,
    divisor_product,
    explicit_spec,
    lcm_sequence,
    lcm_sequence_of_terms,
    materialize,
    mobius_invert,
    read_terms_file,
    verify_equivalence,
    wnbei_quotient,
)

__all__ = [
    "__version__",
    "DivseqError",
    "UsageError",
    "DomainError",
    "InexactDivision",
    "InternalError",
    "Ring",
    "RingElement",
    "INT",
    "gcd",
    "lcm",
    "gcd_many",
    "lcm_many",
    "exact_div",
    "normalize",
    "is_associate",
    "evaluate",
    "Factorization",
    "factorize",
    "divisors",
    "mobius",
    "euler_phi",
    "SequenceSpec",
    "LcmSequenceResult",
    "InversionResult",
    "VerificationReport",
    "EquivalenceReport",
    "Witness",
    "explicit_spec",
    "read_terms_file",
    "materialize",
    "lcm_sequence",
    "lcm_sequence_of_terms",
    "mobius_invert",
    "divisor_product",
    "check_strong_divisibility",
    "check_special_coprime_criterion",
    "verify_equivalence",
    "wnbei_quotient",
    "CATALOG",
    "CatalogEntry",
    "builtin",
    "catalog_names",
    "cyclotomic_phi",
    "cyclotomic_phi_at",
    "psi",
]
