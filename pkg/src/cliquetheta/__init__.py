"""Chromatic polynomials of clique-theta graphs and the scaling of their roots."""

from .closed_forms import (
    clique_path_poly,
    clique_theta_poly,
    clique_theta_poly_recursive,
    formula_poly,
    interesting_factor_ring,
    interesting_factor_theta,
    ring_general_poly,
    ring_reduced_poly,
)
from .graphs import (
    CliquePath,
    CliqueTheta,
    GeneralizedTheta,
    RingOfCliques,
    SimpleGraph,
    blow_up_vertex,
    build,
    join_complete,
    theta_as_clique_theta,
)
from .nalpha import (
    ApproxResult,
    Budget,
    approximate_root,
    nalpha_witness,
    scale_spec,
    shifted_poly_by_join,
    verify_scaling_exact,
)
from .oracle import chromatic_poly_oracle, chromatic_poly_via_addition, count_colourings
from .poly import IntPoly, RatPoly, binomial_poly, falling_factorial
from .roots import RootSet, deflate_integer_roots, find_roots

__version__ = "0.1.0"
