import math

import gradedgeom as gg


def test_poly_arithmetic():
    x = gg.Poly.var("x")
    y = gg.Poly.var("y")
    p = (x + y) ** 2
    assert str(p) == "x^2 + 2*x*y + y^2"
    assert p.total_degree() == 2
    assert str(p.derivative("x")) == "2*x + 2*y"
    assert str(x - x) == "0"


def test_filtration_degree():
    c = gg.WeightedChart(["x", "y"], [1, 2])
    x = gg.Poly.var("x")
    y = gg.Poly.var("y")
    assert gg.filtration_degree(c, x * y + x**3) == 3
    assert math.isinf(gg.filtration_degree(c, x - x))
    assert str(gg.homogeneous_part(c, y + x**2 + x**3, 2)) == "y + x^2"


def test_zoom_rescale():
    c = gg.WeightedChart(["x"], [1])
    x = gg.Poly.var("x")
    assert gg.zoom_rescale(c, x**2 + x**3, 2) == "x^2 + t*x^3"


def test_weighted_morphism():
    c = gg.WeightedChart(["x", "y"], [1, 2])
    x = gg.Poly.var("x")
    y = gg.Poly.var("y")
    assert gg.is_weighted_morphism(c, c, [x, y + x**2])
    assert not gg.is_weighted_morphism(c, c, [y, x])


def test_bundle_sections():
    c = gg.WeightedChart(["x"], [1])
    v = gg.WeightedBundle(c, ["s1", "s2"], [0, -2])
    x = gg.Poly.var("x")
    one = gg.Poly(1)
    assert gg.section_degree(v, [one, x]) == -1
    assert [str(p) for p in gg.homogeneous_approx(v, [one, x], -1)] == ["0", "x"]
    assert gg.interpolate_section(v, [one, x], -1) == ["t", "x"]
    for lam in ["2", "-1", "1/3"]:
        assert gg.zoom_equivariance_check(v, [one, x], -1, lam)
    assert not gg.zoom_equivariance_check(v, [one, x], -1, "2", 1)


def test_clifford():
    e1 = gg.CliffordElt.generator(3, 1)
    e2 = gg.CliffordElt.generator(3, 2)
    e3 = gg.CliffordElt.generator(3, 3)
    assert str((e1 * e2) * (e2 * e3)) == "-e1*e3"
    assert gg.cl_degree(e1 * e2) == -2
    assert str((e1 * e2).reverse()) == "-e1*e2"


def test_run_script():
    rc, out, err = gg.run_script("chart C { x:1 } interp C 2 (x^2 + x^3);")
    assert rc == 0
    assert out == "interp: x~^2 + t*x~^3\n"
    assert err == ""

    rc, out, err = gg.run_script("chart C { x:1 } deg C (q);")
    assert rc == 1
    assert "unknown coordinate" in err

    rc, out, err = gg.run_script("cl 3; cldeg (1 + e1*e2);", json=True)
    assert rc == 0
    assert '"cldeg"' in out
