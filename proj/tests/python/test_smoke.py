import cmath

import pytest

import lgkit


def test_jacobi_quotient():
    q = lgkit.jacobi_quotient("z^3")
    assert q["dimension"] == 2
    assert q["basis"] == ["1", "z"]
    assert lgkit.jacobi_quotient("x1 + x2 + x3", f="x1*x2*x3 - 1")["dimension"] == 3
    assert lgkit.jacobi_quotient("x^2*y")["infinite"]


def test_koszul_cohomology():
    r = lgkit.koszul_cohomology("x^2 + y^2")
    assert r["positions"] == [-2, -1, 0]
    assert r["dims"] == [0, 0, 1]
    assert r["stabilized"]


def test_critical_points_of_the_torus_mirror():
    pts = lgkit.critical_points("x1*x2*x3 - 1", "x1 + x2 + x3", re=(-2, 2), im=(-2, 2), grid=3)
    assert len(pts) == 3
    for p in pts:
        assert abs(p[0] ** 3 - 1) < 1e-9


def test_factorizations():
    assert lgkit.verify_factorization(1, 1, [["z"]], [["z"]], "z^2")
    assert not lgkit.verify_factorization(1, 1, [["z"]], [["z"]], "z^3")
    assert all(lgkit.quiver_factorization_ok(n, k) for n in range(1, 6) for k in range(n + 2))
    assert lgkit.elementary_hom_dims("z", "z") == (1, 1, True)
    assert lgkit.elementary_disk_dims("z", "z^2") == (4, 4)


def test_arrangements():
    braid = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, -1, 0], [1, 0, -1], [0, 1, -1]]
    forms = [[str(c) for c in f] for f in braid]
    assert lgkit.poincare_polynomial(forms) == [1, 6, 11, 6]
    assert lgkit.os_ranks(forms) == [1, 6, 11, 6]
    assert lgkit.h2_rank(forms) == 11


def test_theta():
    assert abs(lgkit.theta(0.5 + 0.5j)) < 1e-12
    z = 0.3 + 0.2j
    lhs = lgkit.theta(z + 1j)
    rhs = cmath.exp(cmath.pi - 2j * cmath.pi * z) * lgkit.theta(z)
    assert abs(lhs - rhs) < 1e-10 * max(1.0, abs(rhs))


def test_run_problem_and_errors():
    rec = lgkit.run({"kind": "jacobi", "W": "z^3"})
    assert rec["outputs"]["dimension"] == 2
    assert rec["version"] == lgkit.__version__
    with pytest.raises(lgkit.ParseError, match="unknown key 'jaccobi'"):
        lgkit.run({"kind": "jacobi", "jaccobi": "z^3"})
    with pytest.raises(lgkit.DomainError):
        lgkit.theta(0.3 + 10j)
