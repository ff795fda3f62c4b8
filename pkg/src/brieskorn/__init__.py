"""Exact-arithmetic topological and contact invariants of Brieskorn manifolds.

A Brieskorn manifold enters as its exponent tuple; everything else (the
sphere criterion, homology rank, equivariant and mean Euler characteristics,
Reeb period strata, Robbin-Salamon indices, and non-Brieskorn certificates
for connected sums on S^5) is computed from it in exact integer and rational
arithmetic.
"""

from .certify import (
    CONCLUSION,
    DistinctnessClass,
    DistinctnessPartition,
    NonBrieskornCertificate,
    certify_non_brieskorn_pairs,
    distinctness_classes,
    enumerate_sphere_tuples,
    read_certificates,
    write_certificates,
)
from .errors import (
    BrieskornError,
    CapacityError,
    CertificateFormatError,
    InvalidInputError,
    PreconditionError,
    UnsupportedLengthError,
)
from .exactarith import (
    IntPolynomial,
    count_multiples_avoiding,
    dominance_check,
    dominance_margin,
    gcd,
    lcm,
    lcm_all,
)
from .families import (
    FamilyRow,
    FermatAsymptoticsReport,
    FermatRow,
    SigmaFamilyReport,
    derivative_combination,
    fermat_asymptotics_report,
    fermat_number,
    fermat_tuple,
    sigma_family_report,
    sigma_family_rows,
    sigma_m_closed_form,
    sigma_m_tuple,
)
from .limits import DEFAULT_LIMITS, Limits, limits_from_env
from .reeb import (
    MeanEulerReport,
    Stratum,
    connected_sum_chi,
    frequencies,
    has_isolated_exponent,
    mean_euler,
    mean_euler_coprime,
    reeb_periods,
    stratum,
    total_rs_index,
)
from .topology import (
    DivisorGraph,
    ExponentTuple,
    SphereKind,
    SphereVerdict,
    SubtuplePositivityReport,
    build_graph,
    check_subtuple_positivity,
    chi_s1,
    evaluate_criterion,
    invariant_subtuples,
    kappa,
    make_tuple,
    noncoprime_pair,
    pairwise_coprime,
)
from .verify import CheckResult, SuiteResult, run_reproduction_suite

__version__ = "0.1.0"
