"""Graded commutative-algebra engine over prime fields with a geometry layer
for rational normal scrolls, point projections, and the invariant theory of
varieties whose degree is one more than minimal."""

from .polyring import Ring, TermOrder, Polynomial, LinearForm, DEFAULT_PRIME
from .groebner import (GradedIdeal, GradedSubmodule, FreeModule,
                       groebner_basis, normal_form, syzygies, saturate,
                       ideal_quotient, intersect, eliminate,
                       minimal_generators)
from .resolve import (FreeComplex, free_resolution, minimalize, BettiTable,
                      hilbert_series, HilbertData, ext_deficiency,
                      GradedModuleData)
from .varieties import (ScrollSpec, ScrollMatrix, ProjectionPoint,
                        scroll_ideal, veronese_ideal, pfaffian_fixture,
                        project_from_point, random_point_off_variety,
                        containing_scroll, scroll_normal_form,
                        one_generic_test)
from .amdcheck import (AnalysisReport, analyze, depth_estimate,
                       hyperplane_section, check_hilbert_formula,
                       check_quadric_count, check_betti_bounds,
                       check_deficiency_shapes, check_gorenstein,
                       expected_amd_numerator)
from .fixtures import FIXTURES, fixture_names, verify_fixture

__version__ = "1.0.0"
