import json

from hypothesis import given

from conftest import polys
from eulerian_ode import render
from eulerian_ode.kernel import IntPoly, IntSeries
from eulerian_ode.triangle import triangle_recurrence


def P(*c):
    return IntPoly(c)


def test_plain():
    assert render.poly_plain(P(1, 1)) == "1 + t"
    assert render.poly_plain(P(1)) == "1"
    assert render.poly_plain(P()) == "0"
    assert render.poly_plain(P(1, 4, 1)) == "1 + 4t + t^2"
    assert render.poly_plain(P(1, -2, 1)) == "1 - 2t + t^2"
    assert render.poly_plain(P(0, -1)) == "-t"
    assert str(P(0, 0, 6)) == "6t^2"


def test_latex():
    assert render.poly_latex(P(1, 11, 11, 1)) == "1 + 11t + 11t^{2} + t^{3}"


def test_poly_json_shape():
    obj = render.poly_to_json(P(1, 4, 1))
    assert obj == {"var": "t", "coeffs": ["1", "4", "1"]}
    assert render.poly_to_json(P()) == {"var": "t", "coeffs": []}


@given(polys(30))
def test_poly_json_roundtrip(p):
    assert render.poly_from_json(json.loads(json.dumps(render.poly_to_json(p)))) == p


def test_series_json_roundtrip():
    s = IntSeries((1, -2, 10**40), 2)
    obj = render.series_to_json(s)
    assert obj["order"] == 2
    assert render.series_from_json(json.loads(json.dumps(obj))) == s


def test_triangle_json_roundtrip():
    rows = triangle_recurrence(12)
    text = render.dumps(render.triangle_to_json(rows))
    assert json.loads(text)["N_max"] == 12
    assert render.triangle_from_json(json.loads(text)) == rows


def test_triangle_csv():
    text = render.triangle_csv(triangle_recurrence(2))
    assert text.splitlines() == ['0,0,"1"', '1,0,"1"', '1,1,"0;1"', '2,0,"1"', '2,1,"0;3"', '2,2,"0;0;2"']


def test_triangle_latex():
    text = render.triangle_latex(triangle_recurrence(3))
    lines = text.splitlines()
    assert lines[0] == r"\begin{bmatrix}"
    assert lines[1] == r"1 & 1 & 1 & 1 \\"
    assert lines[4] == r"0 & 0 & 0 & 6t^{3} \\"
