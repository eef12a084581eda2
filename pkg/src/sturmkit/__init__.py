"""sturm-kit: exact-arithmetic number theory and algebra toolkit."""

from .arith import (
    FactoredInt,
    divisors,
    euler_phi,
    factorize,
    format_rational,
    gcd_ext,
    is_prime,
    parse_rational,
    solve_linear_diophantine,
    valuation,
)
from .combi import (
    GroupAction,
    IntersectionSums,
    bonferroni,
    bracelets_odd,
    burnside_orbits,
    circular_nonadjacent,
    complement_size,
    cube_face_rotations,
    cyclic_group,
    derangements,
    dihedral_group,
    exactly_r,
    generate_closure,
    necklaces,
    surjections,
    union_size,
)
from .construct import (
    ConstructibilityVerdict,
    ResolventSet,
    epsilon_compose,
    gauss_constructible,
    is_fermat_prime,
    lagrange_resolvents,
)
from .gaussint import (
    GaussianFactorization,
    GaussianInt,
    canonical_associate,
    g_divmod,
    g_factor,
    g_gcd,
    is_g_prime,
    parse_gaussian,
    two_squares,
)
from .modular import (
    OrderCertificate,
    Residue,
    count_primitive_roots,
    decimal_period,
    discrete_log,
    find_primitive_root,
    is_cyclic_order,
    is_primitive_root,
    lte_valuation,
    mod_inverse,
    mod_pow,
    multiplicative_order,
    order_certificate,
)
from .perm import (
    Permutation,
    are_conjugate,
    compose,
    conjugate_by,
    count_of_type,
    cycle_decomposition,
    cycle_type,
    format_cycles,
    inverse,
    order,
    parity,
    parse_cycles,
)
from .polyq import (
    Poly,
    cubic_real_root_count,
    depress,
    derivative,
    descartes_bound,
    eisenstein,
    format_poly,
    parse_poly,
    poly_divmod,
    poly_gcd,
    shift_poly,
)
from .quadres import count_residues, legendre, legendre_reciprocity, sqrt_mod
from .radical import RootSet, resolvent_cubic, solve_cubic, solve_quartic
from .seqcalc import (
    PolynomialFit,
    delta,
    detect_polynomial,
    kth_difference,
    sigma_poly,
)

__version__ = "0.1.0"
