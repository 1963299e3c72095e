"""Exact integer spectral analysis of trees.

Everything is computed over the integers and rationals: characteristic
polynomials by the pendant recurrence, root counting by Sturm chains,
integrality verdicts by exact division, and tree enumeration by canonical
level sequences.
"""

from .catalog import CatalogRecord
from .enumeration import EnumerationCursor, FreeTreeEnumerator, enumerate_free_trees
from .polys import (DivisibilityError, IntPoly, IsolatingInterval,
                    PrecisionExhausted, RootCount, SpectrumSummary,
                    SymmetryError, count_roots_open, even_part, integer_roots,
                    isolate_kth_largest, poly_gcd, rational_root_multiplicity,
                    root_bound, square_free_decomposition, taylor_shift)
from .reduction import (PendantReport, pendant_growth_holds, pendant_report,
                        reduce_core, reduce_with_trace, reduced_census,
                        strip_monotonicity_holds, strip_pendant_p2)
from .search import CursorError, SearchConfig, run_search
from .spectra import (TreeSpectrum, char_poly, char_poly_adjacency,
                      char_poly_forest, char_poly_ring_with_pendants,
                      courant_weyl_check, forest_multiplicity, is_integral,
                      join_formula, m_value, max_matching_size, multiplicity,
                      nullity_matching, nullity_poly, squared_shift_check)
from .trees import (Tree, TreeFormatError, attach_pendants, bipartition,
                    c_tree, delete_vertex, format_tree_text, hub_vertices,
                    join_trees, parse_tree_text, path, s_tree, star)
from .verifier import (SUITES, VerdictRecord, eigencat_check,
                       nullity3_case_polynomials, nullity_classification,
                       nullity_one_class_check, parter_sweep, parter_witness,
                       pendant_bundle_shape_check, random_tree, rhocat_check,
                       ring_subdivision_check, run_suite, s_nonintegral_scan)

__version__ = "0.1.0"
