import pytest

from incidencelab.experiments import CapExceeded, EXPERIMENTS, run_experiment
from incidencelab.serialize import dump_json

FAST_PARAMS = {
    "joints": {"kind": "grid_joints", "size": 3},
    "szt": {"max_size": 4},
    "gk4": {"kind": "gk2_config", "size": 3},
    "distances": {"size": 4},
    "pk": {"kind": "grid_joints", "size": 2, "k": 2, "s": 4},
    "flecnode": {"poly": "x^2+y^2+z^2-1"},
    "degree-reduce": {"n1": 16, "n2": 10, "probability": "1/4", "cap": 2, "retries": 5},
    "partition": {"m": 32, "s": 4},
    "census": {"kind": "grid_joints", "size": 2},
    "quadruples": {"n": 5},
}


def test_every_registered_experiment_has_fast_params():
    assert set(FAST_PARAMS) == set(EXPERIMENTS)


@pytest.mark.parametrize("name", sorted(FAST_PARAMS))
def test_experiment_runs_and_passes(name):
    report = run_experiment(name, FAST_PARAMS[name], 0)
    assert report["experiment"] == name
    assert report["passed"], [c for c in report["checks"] if not c["passed"]]
    assert report["format_version"] == 1
    assert "bounds" in report and "measured" in report


@pytest.mark.parametrize("name", sorted(FAST_PARAMS))
def test_experiment_reports_byte_identical(name):
    a = dump_json(run_experiment(name, FAST_PARAMS[name], 3))
    b = dump_json(run_experiment(name, FAST_PARAMS[name], 3))
    assert a == b


def test_unknown_experiment_rejected():
    with pytest.raises(ValueError) as err:
        run_experiment("nope", {}, 0)
    assert "known" in str(err.value)


def test_caps_named_in_errors():
    with pytest.raises(CapExceeded) as err:
        run_experiment("joints", {"size": 100}, 0)
    assert "cap is 6" in str(err.value)
    with pytest.raises(CapExceeded) as err:
        run_experiment("partition", {"m": 9999, "s": 4}, 0)
    assert "cap is 1024" in str(err.value)


def test_joints_experiment_matches_grid_arithmetic():
    report = run_experiment("joints", {"kind": "grid_joints", "size": 3}, 0)
    assert report["measured"]["line_count"] == 27
    assert report["measured"]["joint_count"] == 27
    assert abs(report["measured"]["ratio"] - 27 / 27 ** 1.5) < 1e-12


def test_flecnode_experiment_fermat():
    report = run_experiment("flecnode", {"poly": "x^3+y^3+z^3-1", "irreducible": True}, 0)
    assert report["measured"]["verdict"] == "not-ruled-certified"
    assert report["bounds"]["classical_flecnode_degree"]["value"] == 9


def test_quadruples_experiment_square_fixture():
    square = {"points": [["0", "0"], ["1", "0"], ["1", "1"], ["0", "1"]]}
    report = run_experiment("quadruples", square, 0)
    assert report["measured"]["total"] == 80
    assert report["measured"]["distance_count"] == 2
    assert report["passed"]
