"""Herzog-Takayama resolutions of monomial ideals with regular linear quotients,
the regular cell complexes supporting them, and an independent homology oracle."""
from .monomials import Monomial, MonomialIdeal, divides, lcm, minimalize, parse_ideal, restrict_below
from .quotients import (AdmissibleOrder, colon_variable_set, decompose, find_admissible_order,
                        g_multi, is_admissible, is_regular)
from .resolution import FreeComplex, alpha, betti_table, build_resolution, verify_complex, verify_minimal
from .homology import is_acyclic, reduced_homology_ranks, supports_resolution, taylor_betti
from .cells import (CellComplex, SimplicialComplex, build_lambda, build_X, check_regular_cw, closure,
                    convex_geometry_report, find_shelling, lambda_u, restrict_cells)
from .families import gen_graphic, gen_matroidal, gen_stable, gen_uniform

__version__ = "0.1.0"
