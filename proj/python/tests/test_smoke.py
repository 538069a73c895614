import json

import numpy as np
import pytest

import cstar

MIXED = [[0, 1, 0], [0, 0, 0], [0, 0, 2]]


def test_drazin_of_mixed_operator():
    f = cstar.scalar_map(MIXED)
    assert cstar.drazin_index(f) == 2
    x = cstar.drazin_inverse(f).blocks[0]
    np.testing.assert_allclose(x, np.diag([0, 0, 0.5]), atol=1e-12)


def test_map_algebra_and_json_round_trip():
    f = cstar.scalar_map([[1, 2], [0, 1]], shape=(1, 2))
    g = cstar.Map.from_json(f.to_json())
    assert (f - g).norm() == 0.0
    assert (f @ f.adjoint()).norm() == pytest.approx(f.norm() ** 2)
    assert (cstar.scalar_map([[0, 1], [0, 0]]) ** 2).norm() == 0.0


def test_fredholm_index_of_projection():
    f = cstar.scalar_map([[1, 0]], shape=(2,))
    r = cstar.fredholm_report(f)
    assert r["index"] == [2]
    assert not r["generalized_weyl"]


def test_errors_are_typed():
    a = cstar.scalar_map([[1, 0], [0, 1]])
    b = cstar.scalar_map([[1, 0, 0]])
    with pytest.raises(cstar.StructuralError):
        a @ b
    with pytest.raises(cstar.CstarError):
        cstar.verify("no-such-suite")


def test_geometry_and_probes():
    c0 = cstar.dixmier_angle(np.array([[1.0], [0.0]]), np.array([[np.cos(0.3)], [np.sin(0.3)]]))
    assert c0 == pytest.approx(np.cos(0.3))
    rows = cstar.probe("multiplier", [1, 9])["rows"]
    assert [r["gamma_f"] for r in rows] == [0.5, 0.1]


def test_banach_product():
    j = np.array([[0.0, 1.0], [0.0, 0.0]])
    r = cstar.banach_product(j, j)
    assert r["product_weyl"]


def test_verify_is_deterministic():
    a = cstar.verify("drazin-axioms", seed=3, n=5)
    b = cstar.verify("drazin-axioms", seed=3, n=5, threads=1)
    assert a["passed"]
    assert json.dumps(a) == json.dumps(b)
