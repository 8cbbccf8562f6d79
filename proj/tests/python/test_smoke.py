"""Smoke tests for the raclab extension module.

The heavy numerical checks live in the C++ suites; this only confirms the
bindings expose working entry points with sane values.
"""

import json
import math

import raclab


def test_version():
    assert raclab.__version__


def test_qcrac_values():
    assert math.isclose(raclab.qcrac_analytic(2), 0.5 + 0.5 / math.sqrt(2.0), rel_tol=0, abs_tol=1e-12)
    for d in (2, 3, 4):
        assert math.isclose(
            raclab.qcrac_protocol_success(d), raclab.qcrac_analytic(d), rel_tol=0, abs_tol=1e-10
        )


def test_classical_optimum_exact():
    assert raclab.classical_optimum(2, 2)[:2] == (3, 4)
    assert raclab.classical_optimum(2, 3)[:2] == (2, 3)
    assert raclab.classical_analytic_n2(4)[:2] == (5, 8)


def test_classical_work_cap():
    try:
        raclab.classical_optimum(3, 5)
    except RuntimeError as err:
        assert "too large" in str(err)
    else:
        raise AssertionError("expected a work-cap refusal")


def test_explicit_earac():
    assert math.isclose(raclab.earac_23_success(), 7.0 / 9.0, rel_tol=0, abs_tol=1e-12)
    a00 = raclab.explicit_a00()
    assert math.isclose(sum(a00[k][k].real for k in range(3)), 1.0, abs_tol=1e-12)
    assert math.isclose(a00[0][0].real, 7.0 / 9.0, abs_tol=1e-15)


def test_solve_povm_diagonal():
    rewards = [
        [[1.0, 0.0, 0.0], [0.0, 0.2, 0.0], [0.0, 0.0, 0.1]],
        [[0.3, 0.0, 0.0], [0.0, 0.9, 0.0], [0.0, 0.0, 0.4]],
    ]
    rewards = [[[complex(x) for x in row] for row in r] for r in rewards]
    solution = raclab.solve_povm(rewards)
    assert solution["certified"]
    assert math.isclose(solution["primal_value"], 1.0 + 0.9 + 0.4, abs_tol=1e-8)


def test_seesaw_chsh():
    result = raclab.seesaw(2, 2, restarts=4, seed=7)
    assert result["best_value"] >= 0.853
    assert result["best_value"] <= 0.8536 + 1e-3
    trace = result["trace"]
    assert all(b >= a - 1e-10 for a, b in zip(trace, trace[1:]))


def test_concat():
    assert math.isclose(raclab.concat_17_27(), 17.0 / 27.0, rel_tol=0, abs_tol=1e-10)


def test_report_schema():
    doc = json.loads(raclab.report_json("qcrac", d=4))
    assert doc["command"] == "qcrac"
    assert doc["scenario"] == {"n": 2, "d": 4}
    assert doc["values"]["qcrac_analytic"]["decimal"] == "0.75"
    assert "witness" in doc
