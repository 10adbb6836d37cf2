"""Noether-Lefschetz numbers for low-degree K3 families, computed two ways.

The package carries out an exact-arithmetic reproduction of the count of
singular members in two explicit families of K3 surfaces (a net of conics
and the unigonal family) and independently recovers the same numbers from
the Fourier coefficients of a fitted weight-10 genus-2 Siegel modular form.
The lattice layer underneath (even lattices, discriminant forms, orbit
enumeration for special divisors) is exposed on its own.

Everything runs over exact integers and rationals; no floats anywhere.
"""

from nlk3.chern import (
    P2Class,
    SurfaceChernData,
    UnigonalTable,
    default_unigonal_table,
    dumps_unigonal,
    loads_unigonal,
    net_counts,
    net_invariants,
    unigonal_a2,
    unigonal_counts,
    unigonal_double_point,
)
from nlk3.lattice import (
    DiscElement,
    DiscriminantGroup,
    IntegralLattice,
    LatticeVector,
    STANDARD_NAMES,
    build_standard,
    det,
    direct_sum,
    disc_quadratic,
    discriminant_group,
    divisibility,
    dual_class,
    from_text,
    is_primitive,
    orthogonal_complement,
    rescale,
    smith_normal_form,
    to_text,
)
from nlk3.nldiv import (
    NLKey,
    NLVectorData,
    VARIANTS,
    delta,
    mu_coefficient,
    nl_vector_data,
    prim_equiv,
    triangular_decomposition,
)
from nlk3.orbits import (
    Component,
    LOCI,
    OrbitCandidate,
    eichler_candidates,
    find_witness,
    locus_lattice,
    nl_component_count,
)
from nlk3.siegel import (
    GenusTwoSeries,
    HYPERELLIPTIC_NL,
    HalfIntegralTable,
    PREDICTIONS,
    Weight10Fit,
    binomial_pow,
    chi10,
    default_chi10_exponents,
    default_trunc_l,
    dumps_coeff_table,
    dumps_half_integral,
    e4_series,
    e4e6,
    e6_series,
    fit_weight10,
    independence_check,
    loads_coeff_table,
    loads_half_integral,
    predict_nl,
    series_add,
    series_mul,
    series_one,
    series_scale,
    series_truncate,
)

__all__ = [
    "P2Class",
    "SurfaceChernData",
    "UnigonalTable",
    "default_unigonal_table",
    "dumps_unigonal",
    "loads_unigonal",
    "net_counts",
    "net_invariants",
    "unigonal_a2",
    "unigonal_counts",
    "unigonal_double_point",
    "DiscElement",
    "DiscriminantGroup",
    "IntegralLattice",
    "LatticeVector",
    "STANDARD_NAMES",
    "build_standard",
    "det",
    "direct_sum",
    "disc_quadratic",
    "discriminant_group",
    "divisibility",
    "dual_class",
    "from_text",
    "is_primitive",
    "orthogonal_complement",
    "rescale",
    "smith_normal_form",
    "to_text",
    "NLKey",
    "NLVectorData",
    "VARIANTS",
    "delta",
    "mu_coefficient",
    "nl_vector_data",
    "prim_equiv",
    "triangular_decomposition",
    "Component",
    "LOCI",
    "OrbitCandidate",
    "eichler_candidates",
    "find_witness",
    "locus_lattice",
    "nl_component_count",
    "GenusTwoSeries",
    "HYPERELLIPTIC_NL",
    "HalfIntegralTable",
    "PREDICTIONS",
    "Weight10Fit",
    "binomial_pow",
    "chi10",
    "default_chi10_exponents",
    "default_trunc_l",
    "dumps_coeff_table",
    "dumps_half_integral",
    "e4_series",
    "e4e6",
    "e6_series",
    "fit_weight10",
    "independence_check",
    "loads_coeff_table",
    "loads_half_integral",
    "predict_nl",
    "series_add",
    "series_mul",
    "series_one",
    "series_scale",
    "series_truncate",
    "__version__",
]

__version__ = "1.0.0"
