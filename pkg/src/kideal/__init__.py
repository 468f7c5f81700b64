"""k-ideals of finite commutative semirings."""

from .errors import (
    ConsistencyError,
    InvalidParameter,
    InvalidSemiring,
    KIdealError,
    ParseError,
    PreconditionError,
    StructureError,
)
from .semiring import (
    FiniteSemiring,
    Homomorphism,
    are_isomorphic,
    build_standard,
    canonical_form,
    corpus,
    direct_product,
    enumerate_homomorphisms,
    enumerate_semirings,
    is_homomorphism,
    make_semiring,
    relabel,
    validate,
    validate_semiring,
)
from .ideals import (
    IdealSet,
    KIdealLattice,
    annihilator,
    enumerate_ideals,
    ideal_generated,
    ideal_product,
    ideal_quotient,
    is_ideal,
    is_k_ideal,
    k_closure,
    k_product,
    lattice_check,
    sum_ideals,
)
from .classify import (
    class_tags,
    is_k_irreducible,
    is_k_maximal,
    is_k_prime,
    is_k_semiprime,
    k_irreducible_decomposition,
    k_radical,
    spectrum,
)
from .extcontract import cep_verify, contraction, extension
from .nat import (
    EventuallyPeriodicSet,
    nat_combine,
    nat_ideal_generated,
    nat_is_k_ideal,
    nat_k_closure,
)
from .formats import load_semiring, parse_semiring, serialize_semiring
from .report import CheckRecord, emit_report

__version__ = "0.1.0"
