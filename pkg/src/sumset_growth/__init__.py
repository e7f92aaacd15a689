"""Optimal Macaulay-type bounds on iterated sumset growth, and semigroups
that attain them exactly."""

from .groebner import (
    BinomialBasis,
    DiffBinomial,
    buchberger_check,
    buchberger_complete,
    certify,
    deform,
    normal_form,
    phi,
    phi_chain,
)
from .lexideal import LexIdeal, build_lexideal, ek_factorize, hilbert_function, membership
from .macaulay import (
    BinomialRep,
    BoundSequence,
    binom,
    h_binomial_rep,
    macaulay_lower_inverse,
    macaulay_upper,
    plunnecke_lower,
    plunnecke_upper,
    rep_value,
    validate_sequence,
)
from .monomial import Lexsegment, Monomial, enumerate_degree, grlex_compare
from .semigroup import (
    PowerSeries,
    additive_macaulay_check,
    binomial_quotient_powers,
    bound_report,
    monomial_quotient_powers,
    naive_sumset_powers,
)

__version__ = "0.1.0"
