import pytest

exalg = pytest.importorskip("exalg")

F5 = {"kind": "Fp", "p": 5}
Q = {"kind": "Q"}
F2T = {"kind": "FpT", "p": 2, "var": "t"}


def test_scalar_arith():
    assert exalg.scalar_arith(Q, "2/4", "1/2", "add") == "1"
    assert exalg.scalar_arith(F2T, "t", "1/t", "mul") == "1"
    ext = {"kind": "ext", "base": F2T, "minpoly": ["t", "0", "1"]}
    assert exalg.scalar_arith(ext, "[0,1]", "[0,1]", "mul") == "[t,0]"


def test_matrix_algebra_analysis():
    m2 = exalg.matrix_algebra(F5, 2)
    assert m2["dim"] == 4
    rep = exalg.analyze(m2)
    assert rep["semisimple"] is True
    assert rep["matricial"] is True
    assert [c["n"] for c in rep["components"]] == [2]


def test_quasi_inverse_and_witness():
    m2 = exalg.matrix_algebra(F5, 2)
    e12 = ["0", "1", "0", "0"]
    y = exalg.quasi_inverse(m2, e12)
    assert y == ["0", "0", "1", "0"]  # e21
    wit = exalg.unit_regular_witness(m2, e12)
    assert wit["u"] == ["0", "1", "1", "0"]  # e12 + e21


def test_extension_pipeline():
    ext = exalg.generate_extension(1, F5, [1], [2])
    lifted = exalg.lift_subalgebra(ext)
    assert lifted["t_dim"] == 4
    env = exalg.envelope(ext, "matricial")
    assert env["envelope_dim"] == ext["algebra"]["dim"]


def test_counterexample():
    v = exalg.counterexample(2, 2)
    assert v["verdict"] == "Infeasible"
    assert v["has_certificate"] is True
    s = exalg.counterexample(2, 2, sanity=True)
    assert s["verdict"] == "Feasible"


def test_radical():
    # K[x]/(x^2) over Q: radical is span{x}
    alg = {
        "field": Q,
        "dim": 2,
        "mul": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"]],
    }
    rad = exalg.radical(alg)
    assert rad["radical_dim"] == 1
