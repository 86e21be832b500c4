"""Triangulated surfaces: validation, topology, edge contraction, irreducible
triangulations, exhaustive enumeration, and vertex-bound auditing."""

from .audit import (AuditReport, BoundTable, MatchingCertificate, audit, bound_table,
                    build_matching_certificate, check_4connectivity_bounds, max_matching_exact)
from .complex import (Triangulation, build, canonical_form, classify_edges, from_canonical,
                      validate)
from .contraction import (contract, contractible_edges, is_contractible, is_irreducible,
                          link_condition, reduce_to_irreducible)
from .enumeration import SURFACES, Catalog, EnumSpec, enumerate_triangulations
from .errors import *  # noqa: F401,F403
from .generators import canonical_surface, figure1, refine
from .persistence import read_catalog, read_tri, write_catalog, write_report, write_tri
from .topology import (SurfaceClass, classify_surface, cut_along_cycle, cycle_sidedness,
                       disjoint_cycles_homotopic, is_null_homotopic)

__version__ = "0.1.0"
