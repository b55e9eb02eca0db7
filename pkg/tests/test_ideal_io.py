import pytest

from amdeg.polyring import Ring, parse_polynomial
from amdeg.groebner import GradedIdeal
from amdeg.ideal_io import (render_ideal_text, parse_ideal_text, write_ideal,
                            read_ideal, ideal_to_json, ideal_from_json,
                            dump_json)

R = Ring(("x", "y", "z"), 32003)


def _ideal():
    return GradedIdeal(R, [parse_polynomial("x*z - y^2", R),
                           parse_polynomial("31*x^2 + y*z", R)])


def test_text_roundtrip(tmp_path):
    I = _ideal()
    path = tmp_path / "ideal.txt"
    write_ideal(I, path, comment="a test ideal")
    J = read_ideal(path)
    assert J.ring == I.ring
    assert [str(g) for g in J.generators] == [str(g) for g in I.generators]
    text = path.read_text()
    assert text.startswith("# a test ideal\n")
    assert "ring x y z mod 32003 order degrevlex" in text


def test_comments_and_blank_lines():
    text = """
# leading comment
ring x y z mod 101 order degrevlex

x*y - z^2   # trailing comment
"""
    I = parse_ideal_text(text)
    assert I.ring.prime == 101 and len(I.generators) == 1


def test_bad_headers():
    with pytest.raises(ValueError):
        parse_ideal_text("x^2 + y^2")
    with pytest.raises(ValueError):
        parse_ideal_text("ring x y mod 101 order lex\nx*y")
    with pytest.raises(ValueError):
        parse_ideal_text("# only comments\n")


def test_json_roundtrip():
    I = _ideal()
    doc = ideal_to_json(I)
    J = ideal_from_json(doc)
    assert [str(g) for g in J.generators] == [str(g) for g in I.generators]
    # byte-stable rendering
    assert dump_json(doc) == dump_json(ideal_to_json(J))
