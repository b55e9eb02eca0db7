import random

import pytest

from amdeg.polyring import Ring, parse_polynomial
from amdeg.groebner import (GradedIdeal, FreeModule, GradedSubmodule,
                            groebner_basis, normal_form, eliminate, syzygies,
                            apply_gens, saturate, ideal_quotient, intersect,
                            minimal_generators)

from conftest import random_ideal

R = Ring(("x", "y", "z", "w"), 32003)


def _p(s, ring=R):
    return parse_polynomial(s, ring)


def _ideal(*strs, ring=R):
    return GradedIdeal(ring, [_p(s, ring) for s in strs])


def _gb_strs(ideal):
    return [str(g) for g in ideal.groebner_basis()]


def test_twisted_cubic_gb():
    I = _ideal("x*z - y^2", "x*w - y*z", "y*w - z^2")
    gb = I.groebner_basis()
    assert len(gb) == 3
    leads = {g.ring.unpack(g.lead_key()) for g in gb}
    assert leads == {(0, 2, 0, 0), (0, 1, 1, 0), (0, 0, 2, 0)}


def test_normal_form_membership():
    I = _ideal("x*z - y^2", "x*w - y*z", "y*w - z^2")
    gb = I.groebner_basis()
    f = _p("x") * gb[0] + _p("z^2") * gb[1]
    assert normal_form(f, gb).is_zero()
    assert not normal_form(_p("x^2"), gb).is_zero()


def test_eliminate():
    # projection of the twisted cubic from (1:0:0:0) is a conic-like cubic
    I = _ideal("x*z - y^2", "x*w - y*z", "y*w - z^2")
    J = eliminate(I, ["x"])
    assert all("x" not in str(g) for g in J.generators)
    assert _gb_strs(GradedIdeal(J.ring, J.generators)) \
        == _gb_strs(_ideal("y*w - z^2", ring=J.ring))


def test_syzygies_annihilate():
    rng = random.Random(7)
    for _ in range(30):
        I = random_ideal(rng)
        if not I.generators:
            continue
        syz = syzygies(list(I.generators))
        for s in syz.generators:
            assert apply_gens(s, list(I.generators)).is_zero()


def test_koszul_syzygy_count():
    I = _ideal("x", "y", "z")
    syz = syzygies(list(I.generators))
    assert len(minimal_generators(syz)) == 3


def test_ideal_quotient_and_saturate():
    # (x) * (y) inside (x*y, x*z): quotient by x recovers (y, z)
    I = _ideal("x*y", "x*z")
    Q = ideal_quotient(I, _ideal("x"))
    assert _gb_strs(Q) == _gb_strs(_ideal("y", "z"))
    S = saturate(I, _p("x"))
    assert _gb_strs(S) == _gb_strs(_ideal("y", "z"))
    # saturation is idempotent
    assert _gb_strs(saturate(S, _p("x"))) == _gb_strs(S)


def test_intersect():
    A = _ideal("x")
    B = _ideal("y")
    assert _gb_strs(intersect(A, B)) == _gb_strs(_ideal("x*y"))


def test_minimal_generators_drops_redundant():
    f, g = _p("x*z - y^2"), _p("x*w - y*z")
    red = f.term_mul(R.pack((0, 0, 0, 1)), 1)   # w * f is redundant junk
    keep = minimal_generators([f, g, red + g.term_mul(R.pack((0, 0, 1, 0)), 1)])
    assert len(keep) == 2


def test_module_groebner_and_syzygies():
    mod = FreeModule(R, (0, 0))
    g1 = mod.element([_p("x"), _p("y")])
    g2 = mod.element([_p("y"), _p("z")])
    g3 = mod.element([_p("x") + _p("y"), _p("y") + _p("z")])  # g1 + g2
    sub = GradedSubmodule(mod, [g1, g2, g3])
    syz = syzygies(sub)
    assert len(syz.generators) >= 1
    for s in syz.generators:
        assert apply_gens(s, [g1, g2, g3]).is_zero()


def test_homogeneous_required():
    with pytest.raises(ValueError):
        GradedIdeal(R, [_p("x + y^2")])
