import pytest

from amdeg.polyring import Ring, LinearForm, parse_polynomial
from amdeg.groebner import GradedIdeal
from amdeg.varieties import (ScrollSpec, ProjectionPoint, scroll_ideal,
                             project_from_point)
from amdeg.amdcheck import (analyze, expected_amd_numerator,
                            check_hilbert_formula, check_quadric_count,
                            check_betti_bounds, check_gorenstein,
                            depth_of, depth_estimate, hyperplane_section,
                            saturate_last_variable)
from amdeg.resolve import hilbert_series


def _del_pezzo_surface():
    mat, I = scroll_ideal(ScrollSpec.parse("S(2,3)"))
    return project_from_point(I, ProjectionPoint.unit(1, 7))


def test_analyze_del_pezzo_surface():
    rep = analyze(_del_pezzo_surface(), non_normal=True)
    assert (rep.r, rep.d, rep.degree, rep.t) == (5, 2, 5, 3)
    assert rep.is_AMD and rep.is_ACM and rep.is_Gorenstein
    assert rep.quadric_count == 5
    assert rep.delta_genus == 1 and rep.sectional_genus == 1
    assert rep.secant_cone_dim == 2
    assert all(rep.formula_checks.values())
    assert "quadric_count" in rep.render_text() or rep.to_json()


def test_analyze_minimal_degree_scroll():
    _, I = scroll_ideal(ScrollSpec.parse("S(2,3)"))
    rep = analyze(I)
    assert rep.is_minimal_degree and not rep.is_AMD
    assert rep.is_ACM and not rep.is_Gorenstein
    assert rep.t == rep.d + 1


def test_analyze_rejects_degenerate_input():
    R = Ring(("x", "y"), 32003)
    with pytest.raises(ValueError):
        analyze(GradedIdeal(R, []))


def test_expected_numerator_matches_engine():
    rep = analyze(_del_pezzo_surface())
    num = expected_amd_numerator(rep.r, rep.d, rep.t)
    assert list(rep.hilbert.numerator) == num
    ok, residual = check_hilbert_formula(rep)
    assert ok and not residual


def test_check_quadric_count():
    rep = analyze(_del_pezzo_surface())
    ok, expected = check_quadric_count(rep)
    assert ok and expected == 5


def test_checks_require_amd():
    _, I = scroll_ideal(ScrollSpec.parse("S(2,3)"))
    rep = analyze(I)
    with pytest.raises(ValueError):
        check_hilbert_formula(rep)
    with pytest.raises(ValueError):
        check_betti_bounds(rep)


def test_check_gorenstein_negative():
    _, I = scroll_ideal(ScrollSpec.parse("S(2,2)"))
    rep = analyze(I)
    ok, details = check_gorenstein(rep)
    assert not ok and details["final_betti"] > 1


def test_depth_estimate_matches_resolution():
    cases = [_del_pezzo_surface()]
    _, scroll = scroll_ideal(ScrollSpec.parse("S(1,1,2)"))
    cases.append(scroll)
    _, quartic = scroll_ideal(ScrollSpec.parse("S(4)"))
    cases.append(quartic)
    for ideal in cases:
        assert depth_estimate(ideal, seed=0) == depth_of(ideal)
        # seed-independence (genericity holds w.h.p. for every seed)
        assert depth_estimate(ideal, seed=1) == depth_estimate(ideal, seed=2)


def test_saturate_last_variable():
    R = Ring(("x", "y", "z"), 32003)
    I = GradedIdeal(R, [parse_polynomial("x*z^2", R),
                        parse_polynomial("y*z", R)])
    S = saturate_last_variable(I)
    gb = {str(g) for g in S.groebner_basis()}
    assert gb == {"x", "y"}


def test_hyperplane_section_errors():
    ideal = _del_pezzo_surface()
    nv = ideal.ring.nvars
    with pytest.raises(ValueError):
        hyperplane_section(ideal, lform=LinearForm([0] * nv))
    # a form inside the ideal is rejected (use a generator's linear factor
    # situation: no linear forms lie in this prime ideal, so craft one in a
    # reducible toy ideal instead)
    R = Ring(("x", "y", "z"), 32003)
    J = GradedIdeal(R, [parse_polynomial("x", R)])
    with pytest.raises(ValueError):
        hyperplane_section(J, lform=LinearForm([1, 0, 0]))


def test_hyperplane_section_depth_drop():
    ideal = _del_pezzo_surface()   # ACM: t = 3 = d + 1
    section, delta = hyperplane_section(ideal, seed=0)
    assert delta == 1              # ACM quotients stay ACM: 3 -> 2
    h = hilbert_series(section)
    assert h.dim == 1 and h.degree == 5
