"""MDS codes with Galois hulls of prescribed dimension over GF(p^h)."""
from .bounds import (
    bezout_twist,
    bound_comparison,
    comparison_threshold,
    dimension_bound,
    galois_gcd,
    hermitian_bound,
    mersenne_feasible,
)
from .codes import (
    HullReport,
    LinearCode,
    galois_dual,
    galois_inner,
    hull,
    hull_dim_bruteforce,
    is_mds,
    is_self_orthogonal,
    min_distance_bruteforce,
)
from .constructions import (
    CosetPointSet,
    TwistPlan,
    theorem_a_construct,
    theorem_b_construct,
    theorem_c_code,
    theorem_c_points,
)
from .exceptions import FieldError, HypothesisError, InstanceTooLarge, NoRootError, NotSelfOrthogonal
from .gf import GF, FieldElement, field_create, find_alpha, frobenius, in_subfield, nth_root
from .grs import (
    GrsSpec,
    SelfOrthogonalWitness,
    check_self_orthogonal,
    compute_u,
    dual_membership_witness,
    encode,
    find_extended_seed,
    find_self_orthogonal_seed,
    generator_matrix,
    hermitian_family_seed,
    recover_h,
)

__all__ = [name for name in dir() if not name.startswith("_")]
