import pytest

from amdeg.polyring import Ring, parse_polynomial, LinearForm
from amdeg.groebner import normal_form
from amdeg.resolve import hilbert_series
from amdeg.varieties import (ScrollSpec, ScrollMatrix, ProjectionPoint,
                             scroll_ideal, veronese_ideal, pfaffian_fixture,
                             project_from_point, random_point_off_variety,
                             containing_scroll, scroll_normal_form,
                             one_generic_test)


def test_scrollspec_parse_and_str():
    s = ScrollSpec.parse("S(2,2,6)")
    assert s.degrees == (2, 2, 6) and s.vertex_dim == -1
    assert s.dim == 3 and s.ambient_dim == 12 and s.nvars == 13
    c = ScrollSpec.parse("S(1,1,2)+vertex:0")
    assert c.vertex_dim == 0 and c.dim == 4 and c.nvars == 8
    assert ScrollSpec.parse(str(c)) == c
    with pytest.raises(ValueError):
        ScrollSpec.parse("T(2)")
    with pytest.raises(ValueError):
        ScrollSpec((2, 1))   # degrees must be non-decreasing


def test_scroll_ideal_invariants():
    for name, dim, deg in (("S(2)", 1, 2), ("S(2,3)", 2, 5),
                           ("S(2,2,6)", 3, 10), ("S(1,1,2)+vertex:0", 4, 4)):
        spec = ScrollSpec.parse(name)
        mat, I = scroll_ideal(spec)
        h = hilbert_series(I)
        assert (h.dim, h.degree) == (dim, deg), name
        assert h.degree == h.codim + 1, name               # minimal degree
        m = mat.ncols
        assert len(I.generators) == m * (m - 1) // 2, name


def test_veronese_and_pfaffian():
    V = veronese_ideal()
    h = hilbert_series(V)
    assert (h.dim, h.codim, h.degree) == (2, 3, 4)
    assert len(V.generators) == 6
    P = pfaffian_fixture()
    h = hilbert_series(P)
    assert (h.dim, h.codim, h.degree) == (6, 3, 5)
    assert len(P.generators) == 5 and all(g.degree() == 2
                                          for g in P.generators)


def test_projection_preconditions():
    _, I = scroll_ideal(ScrollSpec.parse("S(2)"))
    with pytest.raises(ValueError):
        project_from_point(I, ProjectionPoint((1, 0, 0)))   # on the conic
    with pytest.raises(ValueError):
        ProjectionPoint((0, 0, 0))


def test_projection_amd_curve():
    # degree-4 curve to 3-space from a generic point: almost minimal degree
    _, I = scroll_ideal(ScrollSpec.parse("S(4)"))
    pt = random_point_off_variety(I, seed=11)
    J = project_from_point(I, pt)
    h = hilbert_series(J)
    assert (h.dim, h.codim, h.degree) == (1, 2, 4)
    # Hilbert polynomial of the curve section: 4x + 1
    assert [h.hilbert_function(n) for n in (1, 2, 3)] == [4, 9, 13]


def test_random_point_deterministic():
    _, I = scroll_ideal(ScrollSpec.parse("S(2,3)"))
    assert random_point_off_variety(I, seed=5) \
        == random_point_off_variety(I, seed=5)


def test_containing_scroll_fixture_point():
    spec = ScrollSpec.parse("S(2,2,6)")
    mat, I = scroll_ideal(spec)
    pt = ProjectionPoint.unit(9, 13)
    proj = project_from_point(I, pt)
    N, cert = containing_scroll(mat, pt, source_ideal=I, projected=proj)
    assert cert.minors_contained
    assert cert.dim_Y == cert.dim_source + 1
    assert 0 <= cert.vertex_gap <= 3
    gb = proj.groebner_basis()
    for m in N.minors():
        assert normal_form(m, gb).is_zero()


def test_scroll_normal_form_roundtrip():
    mat, _ = scroll_ideal(ScrollSpec.parse("S(2,2,6)"))
    nf = scroll_normal_form(mat)
    assert tuple(sorted(nf.block_degrees)) == (2, 2, 6)
    assert nf.vertex_dim == -1


def test_scroll_normal_form_conjugated():
    # scramble a conic matrix by an invertible coordinate change
    ring = Ring(("x0", "x1", "x2"), 32003)
    top = [LinearForm([1, 2, 3]), LinearForm([0, 1, 5])]
    bot = [LinearForm([0, 1, 5]), LinearForm([4, 4, 1])]
    nf = scroll_normal_form(ScrollMatrix(ring, [top, bot]))
    assert tuple(nf.block_degrees) == (2,)
    # normal form basis really is a coordinate system for the conic
    assert len(nf.basis) == 3


def test_one_generic():
    mat, _ = scroll_ideal(ScrollSpec.parse("S(2,3)"))
    status, witness = one_generic_test(mat, samples=50, seed=0)
    assert status == "plausible" and witness is None
    # [[x0, x1], [x1, x0]] is NOT 1-generic: the row mix (1, 1) gives equal
    # entries, killed by the column mix (1, -1)
    ring = Ring(("x0", "x1"), 13)
    rows = [[LinearForm([1, 0]), LinearForm([0, 1])],
            [LinearForm([0, 1]), LinearForm([1, 0])]]
    status, (v, w) = one_generic_test(ScrollMatrix(ring, rows),
                                      samples=20, seed=0)
    assert status == "falsified"
    # check the witness: v.M.w must vanish coefficient-wise
    combo = [(v[0] * rows[0][k].coeffs[t] + v[1] * rows[1][k].coeffs[t]) % 13
             for k in range(2) for t in range(2)]
    assert all((combo[0 + t] * w[0] + combo[2 + t] * w[1]) % 13 == 0
               for t in range(2))
