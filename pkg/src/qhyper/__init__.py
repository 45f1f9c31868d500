"""Quaternionic hyperbolic geometry: invariants, moduli of boundary quadruples and congruence."""

from .errors import (
    CoincidentPointsError,
    DimensionError,
    GeometryError,
    NonUnitError,
    NotInModuliSpaceError,
    PositiveVectorError,
    ZeroDivisorError,
)
from .quaternion import Quaternion, conjugator, nu, sigma, similar, unit_polar
from .hermitian import (
    Point,
    apply,
    bergman_distance,
    classify,
    inner,
    is_isometry,
    project,
    standard_lift,
)
from .invariants import cartan, cross_ratio, cross_ratio_lifts, eta, three_cross_ratios, triple_product
from .metric import (
    Geodesic,
    dist_point_geodesic,
    dist_point_geodesic_mixed,
    dist_point_qline,
    dist_point_qline_mixed,
    distance_to_geodesic,
    distance_to_qline,
    geodesic_point,
    project_to_geodesic,
    rho_via_crossratio,
)
from .moduli import (
    ModuliPoint,
    d_of_g,
    is_in_moduli_space,
    normalize,
    reconstruct,
    semi_normalize,
    tau,
)
from .congruence import (
    congruent_quadruple_gram,
    congruent_quadruple_invariants,
    congruent_triple,
    map_o_infty,
    triple_verdict,
    triple_witness,
)

__version__ = "0.1.0"
