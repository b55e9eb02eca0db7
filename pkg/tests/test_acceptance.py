"""Top-level acceptance checks.  One test per criterion; each line of the
verbose pytest report is one pass/fail verdict."""

import time

from amdeg.varieties import (ScrollSpec, ProjectionPoint, scroll_ideal,
                             project_from_point, random_point_off_variety,
                             containing_scroll)
from amdeg.amdcheck import (analyze, check_hilbert_formula,
                            check_quadric_count, check_betti_bounds,
                            check_deficiency_shapes, check_gorenstein,
                            deficiency_window_data, depth_estimate,
                            hyperplane_section)
from amdeg.fixtures import FIXTURES

import engine_properties

FIVE = ("ex6.1A", "ex6.1B", "ex6.1C", "ex6.2A", "ex6.2B")
SCROLL_SPECS = ("S(2,2,6)", "S(2,4,4)", "S(3,3,4)", "S(2,3)", "S(1,1,2)")


def test_criterion_01_betti_tables(reports):
    for name in FIVE:
        rep = reports.report(name)
        fx = FIXTURES[name]
        u = rep.betti.row(1, len(fx.expected_u))
        v = rep.betti.row(2, len(fx.expected_v))
        assert u == fx.expected_u, f"{name} u-row: {u}"
        assert v == fx.expected_v, f"{name} v-row: {v}"


def test_criterion_02_quadric_counts(reports):
    expected = dict(zip(FIVE, (32, 32, 32, 33, 34)))
    expected["veronese"] = 0
    for name, want in expected.items():
        rep = reports.report(name)
        assert rep.quadric_count == want, f"{name}: {rep.quadric_count}"
        if name != "veronese":
            ok, pred = check_quadric_count(rep)
            assert ok and pred == want, f"{name} formula: {pred}"


def _acm_family():
    """Non-normal Del Pezzo families parametrized by ambient dimension."""
    for r in (4, 5, 6):   # surface family: blocks (2, r-2), projected from e1
        spec = ScrollSpec((2, r - 2))
        _, I = scroll_ideal(spec)
        yield f"surface r={r}", project_from_point(
            I, ProjectionPoint.unit(1, spec.nvars))
    for r in (5, 6):      # 3-fold family: blocks (1, 1, r-3)
        spec = ScrollSpec((1, 1, r - 3))
        point = tuple(1 if i in (1, 2) else 0 for i in range(spec.nvars))
        _, I = scroll_ideal(spec)
        yield f"threefold r={r}", project_from_point(I,
                                                     ProjectionPoint(point))


def test_criterion_03_hilbert_formula(reports):
    for name in FIVE + ("veronese",):
        rep = reports.report(name)
        ok, residual = check_hilbert_formula(rep)
        assert ok, f"{name}: residual {residual}"
    for label, ideal in _acm_family():
        rep = analyze(ideal, non_normal=True)
        assert rep.is_AMD and rep.is_ACM, label
        ok, residual = check_hilbert_formula(rep)
        assert ok, f"{label}: residual {residual}"


def test_criterion_04_depth_and_regularity(reports):
    for name, want_t in zip(FIVE, (1, 1, 1, 2, 3)):
        rep = reports.report(name)
        assert rep.t == want_t, f"{name}: t = {rep.t}"
        assert rep.reg == 2, f"{name}: reg = {rep.reg}"
    for name in ("ex6.3A", "ex6.3B", "ex6.4"):
        rep = reports.report(name)
        assert rep.t == rep.d + 1, f"{name}: t = {rep.t}, d = {rep.d}"


def test_criterion_05_betti_window(reports):
    for name in FIVE:
        results = check_betti_bounds(reports.report(name))
        bad = [k for k, v in results.items() if not v]
        assert not bad, f"{name}: {bad}"
    tab = reports.report("ex6.1A").betti
    assert [tab.get(i, i + 1) for i in (5, 6, 7)] == [140, 48, 7]
    assert [tab.get(i, i + 2) for i in (8, 9, 10, 11)] == [220, 66, 12, 1]


def test_criterion_06_deficiency_shapes(reports):
    for name in FIVE:
        rep = reports.report(name)
        ext = deficiency_window_data(rep, window=(-6, 4))
        results = check_deficiency_shapes(rep, ext)
        bad = [k for k, v in results.items() if not v]
        assert not bad, f"{name}: {bad}"
        if rep.t == 1:   # K^1 is the field in degree -1
            K1 = ext[1]
            assert all(v == (1 if n == -1 else 0)
                       for n, v in K1.hilbert_function.items()), \
                f"{name}: K^1 not k(1)"


def test_criterion_07_containing_scroll():
    for sname in SCROLL_SPECS:
        spec = ScrollSpec.parse(sname)
        mat, I = scroll_ideal(spec)
        points = [random_point_off_variety(I, seed=s) for s in range(50)]
        for fx in FIXTURES.values():
            if fx.scroll == spec:
                points.append(ProjectionPoint(fx.point))
        for pt in points:
            N, cert = containing_scroll(mat, pt, source_ideal=I)
            assert cert.minors_contained, (sname, pt.coords)
            assert cert.dim_Y == cert.dim_source + 1, (sname, pt.coords)
            assert cert.vertex_gap in (0, 1, 2, 3), (sname, pt.coords)


def test_criterion_08_depth_bounds():
    smooth = ("S(2,2,6)", "S(2,4,4)", "S(3,3,4)", "S(4)", "S(2,3)")
    for sname in smooth:
        _, I = scroll_ideal(ScrollSpec.parse(sname))
        for seed in range(40):
            pt = random_point_off_variety(I, seed=seed)
            t = depth_estimate(project_from_point(I, pt), seed=seed)
            assert 1 <= t <= 4, (sname, seed, t)
    for h, cone in ((0, "S(2,2)+vertex:0"), (1, "S(2,2)+vertex:1")):
        _, I = scroll_ideal(ScrollSpec.parse(cone))
        for seed in range(50):
            pt = random_point_off_variety(I, seed=seed)
            t = depth_estimate(project_from_point(I, pt), seed=seed)
            assert 1 <= t <= h + 5, (cone, seed, t)


def test_criterion_09_gorenstein_detection(reports):
    for name in ("ex6.3A", "ex6.3B", "ex6.4"):
        rep = reports.report(name)
        ok, details = check_gorenstein(rep)
        assert ok, f"{name}: {details}"
        assert rep.is_Gorenstein, name
    for sname in ("S(2,2)", "S(2,3)", "S(1,1,2)"):
        _, I = scroll_ideal(ScrollSpec.parse(sname))
        rep = analyze(I)
        assert rep.codim >= 2, sname
        ok, details = check_gorenstein(rep)
        assert not ok and not rep.is_Gorenstein, f"{sname}: {details}"


def test_criterion_10_hyperplane_sections(reports):
    deep = reports.ideal("ex6.2B")
    s1, delta1 = hyperplane_section(deep, seed=0)
    assert delta1 == 1 and depth_estimate(s1, seed=3) == 2
    s2, delta2 = hyperplane_section(s1, seed=1)
    assert delta2 == 1 and depth_estimate(s2, seed=3) == 1

    shallow = reports.ideal("ex6.1A")
    s, delta = hyperplane_section(shallow, seed=0)
    assert delta == 0 and depth_estimate(s, seed=3) == 1


def test_criterion_11_engine_property_suites():
    t0 = time.time()
    for suite in engine_properties.ALL_SUITES:
        suite(1000)
    elapsed = time.time() - t0
    assert elapsed < 300, f"property suites too slow: {elapsed:.0f}s"
