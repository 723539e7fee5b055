"""Trigonometry of two-dimensional normed (Minkowski) planes.

The core object is a norm spec — Euclidean, an l_p norm, or a symmetric
convex polygon — together with the generalized sine
s(x, y) = inf_t ||x + t y|| for unit x, y, its antinorm formula, the
orthogonality relations it encodes (Birkhoff, isosceles, Roberts), angular
bisectors, conjugate diameters, and the plane constants c_E, c_R, D.
"""
from .config import (ConfigError, RunConfig, build_config, parse_config,
                     serialize_config)
from .constants import ConstantReport, c_e, c_e_pair, c_r, d_constant
from .orthogonality import (BirkhoffDefect, ConjugatePair, benitez_alpha,
                            birkhoff_defect, conjugate_pairs,
                            find_orthogonal_diagonals, is_birkhoff,
                            is_isosceles, is_roberts)
from .plane import (AntinormValue, EuclideanNorm, LpNorm, NormSpec,
                    PolygonNorm, RadonReport, Vec2, as_vec, euclidean, lp,
                    polygon, regular_polygon, symplectic)
from .reproduce import CriterionResult, roster, run_all, run_criterion
from .sine import (METHOD_DIRECT, METHOD_FORMULA, PolarCoords, SineValue,
                   conjugate_range, find_pair_with_sine, polar_coords, sine,
                   sine_antinorm, sine_direct)
from .trig import (LawOfSinesReport, LinearMap2, Triangle, busemann_bisector,
                   equal_sines_equal_sides, glogovskii_bisector,
                   is_sine_conformal, isosceles_sine_characterization,
                   law_of_sines, parallelogram_area_check,
                   point_to_ray_distance, reflection_roberts_check)

__version__ = "0.1.0"

__all__ = [
    "AntinormValue", "BirkhoffDefect", "ConfigError", "ConjugatePair",
    "ConstantReport", "CriterionResult", "EuclideanNorm", "LawOfSinesReport",
    "LinearMap2", "LpNorm", "METHOD_DIRECT", "METHOD_FORMULA", "NormSpec",
    "PolarCoords", "PolygonNorm", "RadonReport", "RunConfig", "SineValue",
    "Triangle", "Vec2", "as_vec", "benitez_alpha", "birkhoff_defect",
    "build_config", "busemann_bisector", "c_e", "c_e_pair", "c_r",
    "conjugate_pairs", "conjugate_range", "d_constant",
    "equal_sines_equal_sides", "euclidean", "find_orthogonal_diagonals",
    "find_pair_with_sine", "glogovskii_bisector", "is_birkhoff",
    "is_isosceles", "is_roberts", "is_sine_conformal",
    "isosceles_sine_characterization", "law_of_sines", "lp",
    "parallelogram_area_check", "parse_config", "point_to_ray_distance",
    "polar_coords", "polygon", "reflection_roberts_check", "regular_polygon",
    "roster", "run_all", "run_criterion", "serialize_config", "sine",
    "sine_antinorm", "sine_direct", "symplectic",
]
