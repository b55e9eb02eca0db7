"""Named example fixtures: scroll projections and builtin varieties with
their expected invariants and Betti rows, plus the verification driver."""

from dataclasses import dataclass, field

from .varieties import (ScrollSpec, ProjectionPoint, scroll_ideal,
                        veronese_ideal, pfaffian_fixture, project_from_point,
                        containing_scroll)
from .amdcheck import (analyze, check_betti_bounds, check_deficiency_shapes,
                       check_gorenstein, deficiency_window_data)


@dataclass
class FixtureEntry:
    name: str
    description: str
    scroll: object = None            # ScrollSpec for scroll projections
    point: tuple = None              # projection point coordinates
    builtin: object = None           # callable() -> GradedIdeal
    expected: dict = field(default_factory=dict)
    expected_u: tuple = None
    expected_v: tuple = None
    non_normal: bool = False
    scroll_projection: bool = True

    def build_ideal(self, prime=None):
        if self.builtin is not None:
            return self.builtin(prime)
        mat, I = scroll_ideal(self.scroll, prime=prime)
        return project_from_point(I, ProjectionPoint(self.point))

    def build_scroll(self, prime=None):
        if self.scroll is None:
            return None, None
        return scroll_ideal(self.scroll, prime=prime)


def _e(i, n):
    return tuple(1 if k == i else 0 for k in range(n))


def _veronese_projection(prime=None):
    V = veronese_ideal(prime)
    return project_from_point(V, ProjectionPoint((1, 0, 0, 1, 0, 1)))


def _pfaffian(prime=None):
    return pfaffian_fixture(prime)


FIXTURES = {}


def _register(entry):
    FIXTURES[entry.name] = entry


_register(FixtureEntry(
    name="ex6.1A",
    description="3-fold scroll S(2,2,6) projected from the 10th coordinate point",
    scroll=ScrollSpec((2, 2, 6)), point=_e(9, 13),
    expected=dict(r=11, d=3, codim=8, degree=10, t=1, reg=2, is_AMD=True,
                  is_ACM=False, is_Gorenstein=False, quadric_count=32,
                  secant_cone_dim=0, delta_genus=0, sectional_genus=0),
    expected_u=(32, 130, 234, 234, 140, 48, 7, 0, 0, 0, 0),
    expected_v=(0, 20, 155, 456, 728, 728, 486, 220, 66, 12, 1),
))

_register(FixtureEntry(
    name="ex6.1B",
    description="3-fold scroll S(2,2,6) projected from the 11th coordinate point",
    scroll=ScrollSpec((2, 2, 6)), point=_e(10, 13),
    expected=dict(r=11, d=3, codim=8, degree=10, t=1, reg=2, is_AMD=True,
                  is_ACM=False, is_Gorenstein=False, quadric_count=32,
                  secant_cone_dim=0, delta_genus=0, sectional_genus=0),
    expected_u=(32, 131, 234, 234, 140, 48, 7, 0, 0, 0, 0),
    expected_v=(1, 20, 155, 456, 728, 728, 486, 220, 66, 12, 1),
))

_register(FixtureEntry(
    name="ex6.1C",
    description="3-fold scroll S(2,4,4) projected from the 11th coordinate point",
    scroll=ScrollSpec((2, 4, 4)), point=_e(10, 13),
    expected=dict(r=11, d=3, codim=8, degree=10, t=1, reg=2, is_AMD=True,
                  is_ACM=False, is_Gorenstein=False, quadric_count=32,
                  secant_cone_dim=0, delta_genus=0, sectional_genus=0),
    expected_u=(32, 133, 248, 234, 140, 48, 7, 0, 0, 0, 0),
    expected_v=(3, 34, 155, 456, 728, 728, 486, 220, 66, 12, 1),
))

_register(FixtureEntry(
    name="ex6.2A",
    description="3-fold scroll S(3,3,4) projected from the 7th coordinate point",
    scroll=ScrollSpec((3, 3, 4)), point=_e(6, 13),
    expected=dict(r=11, d=3, codim=8, degree=10, t=2, reg=2, is_AMD=True,
                  is_ACM=False, is_Gorenstein=False, quadric_count=33,
                  secant_cone_dim=1, delta_genus=1, sectional_genus=0),
    expected_u=(33, 142, 278, 284, 155, 48, 7, 0, 0, 0),
    expected_v=(1, 9, 40, 141, 266, 266, 156, 55, 11, 1),
))

_register(FixtureEntry(
    name="ex6.2B",
    description="3-fold scroll S(2,4,4) projected from the 2nd coordinate point",
    scroll=ScrollSpec((2, 4, 4)), point=_e(1, 13),
    expected=dict(r=11, d=3, codim=8, degree=10, t=3, reg=2, is_AMD=True,
                  is_ACM=False, is_Gorenstein=False, quadric_count=34,
                  secant_cone_dim=2, delta_genus=1, sectional_genus=0),
    expected_u=(34, 151, 314, 364, 230, 69, 7, 0, 0),
    expected_v=(0, 0, 0, 6, 35, 56, 36, 10, 1),
))

_register(FixtureEntry(
    name="ex6.3A",
    description="surface scroll with block degrees (2,3) projected from the "
                "2nd coordinate point: a non-normal Del Pezzo surface",
    scroll=ScrollSpec((2, 3)), point=_e(1, 7),
    expected=dict(r=5, d=2, codim=3, degree=5, t=3, reg=2, is_AMD=True,
                  is_ACM=True, is_Gorenstein=True, quadric_count=5,
                  secant_cone_dim=2, delta_genus=1, sectional_genus=1),
    non_normal=True,
))

_register(FixtureEntry(
    name="ex6.3B",
    description="3-fold scroll S(1,1,2) projected from (0:1:1:0:0:0:0): a "
                "non-normal Del Pezzo 3-fold",
    scroll=ScrollSpec((1, 1, 2)), point=(0, 1, 1, 0, 0, 0, 0),
    expected=dict(r=5, d=3, codim=2, degree=4, t=4, reg=2, is_AMD=True,
                  is_ACM=True, is_Gorenstein=True, quadric_count=2,
                  secant_cone_dim=3, delta_genus=1, sectional_genus=1),
    non_normal=True,
))

_register(FixtureEntry(
    name="ex6.4",
    description="6-fold cut out by the five 4x4 Pfaffian quadrics of a "
                "generic skew 5x5 matrix: a normal Del Pezzo variety",
    builtin=_pfaffian,
    expected=dict(r=9, d=6, codim=3, degree=5, t=7, reg=2, is_AMD=True,
                  is_ACM=True, is_Gorenstein=True, quadric_count=5,
                  delta_genus=1, sectional_genus=1),
    expected_u=(5, 5, 0),
    expected_v=(0, 0, 1),
    scroll_projection=False,
))

_register(FixtureEntry(
    name="veronese",
    description="Veronese surface projected from an interior point: an AMD "
                "surface cut out by no quadric at all",
    builtin=_veronese_projection,
    expected=dict(r=4, d=2, codim=2, degree=4, t=1, reg=2, is_AMD=True,
                  is_ACM=False, is_Gorenstein=False, quadric_count=0,
                  secant_cone_dim=0, delta_genus=0, sectional_genus=0),
    scroll_projection=False,
))


def fixture_names():
    return sorted(FIXTURES)


def verify_fixture(name, prime=None, window=(-6, 4), progress=None):
    """Run every applicable check on a fixture.

    Returns a list of (check_name, passed: bool, detail: str).
    """
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}")
    fx = FIXTURES[name]
    results = []

    def rec(label, ok, detail=""):
        results.append((label, bool(ok), detail))
        if progress:
            progress(f"{name}: {label}: {'pass' if ok else 'FAIL'} {detail}")

    ideal = fx.build_ideal(prime=prime)
    report = analyze(ideal, non_normal=fx.non_normal, progress=progress)

    for key, want in fx.expected.items():
        got = getattr(report, key)
        rec(f"expected_{key}", got == want, f"expected {want}, got {got}")
    if fx.expected_u is not None:
        got_u = report.betti.row(1, len(fx.expected_u))
        rec("u_row", got_u == tuple(fx.expected_u), f"{got_u}")
    if fx.expected_v is not None:
        got_v = report.betti.row(2, len(fx.expected_v))
        rec("v_row", got_v == tuple(fx.expected_v), f"{got_v}")
    for cname, ok in report.formula_checks.items():
        rec(cname, ok)

    if report.is_AMD and report.t <= report.d and fx.scroll_projection:
        bb = check_betti_bounds(report)
        rec("betti_bounds", all(bb.values()),
            ", ".join(k for k, v in bb.items() if not v) or "all indices")
        ext = deficiency_window_data(report, window=window)
        ds = check_deficiency_shapes(report, ext)
        for k, v in ds.items():
            rec(k, v)
    if report.is_ACM:
        ok, details = check_gorenstein(report)
        rec("gorenstein_full", ok, str(details))

    if fx.scroll is not None and fx.scroll_projection:
        mat, src = fx.build_scroll(prime=prime)
        N, cert = containing_scroll(mat, ProjectionPoint(fx.point),
                                    source_ideal=src)
        rec("containing_scroll_minors", cert.minors_contained)
        rec("containing_scroll_dim", cert.dim_Y == cert.dim_source + 1,
            f"dim Y = {cert.dim_Y}, dim source = {cert.dim_source}")
        rec("containing_scroll_vertex_gap", 0 <= cert.vertex_gap <= 3,
            f"gap {cert.vertex_gap}")
    return results
