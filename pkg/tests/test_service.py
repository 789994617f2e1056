import pytest
from fastapi.testclient import TestClient

from incidencelab.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health(client):
    body = client.get("/health").json()
    assert body["status"] == "ok"


def test_parse_poly_endpoint(client):
    resp = client.post("/parse-poly", json={"text": "x^2+y^2+z^2-1"})
    assert resp.status_code == 200
    report = resp.json()["report"]
    assert report["degree"] == 2
    assert report["term_count"] == 4


def test_parse_error_becomes_422(client):
    resp = client.post("/parse-poly", json={"text": "2x"})
    assert resp.status_code == 422
    assert "position" in resp.json()["detail"]


def test_fit_endpoint_points(client):
    cube = [[str(a), str(b), str(c)] for a in (0, 1) for b in (0, 1) for c in (0, 1)]
    resp = client.post("/fit", json={"points": cube, "degree": 2})
    assert resp.status_code == 200
    report = resp.json()["report"]
    assert report["found"] and report["degree"] <= 2


def test_fit_endpoint_minimize(client):
    points = [["0", "0", "0"], ["1", "0", "0"], ["2", "0", "0"]]
    report = client.post("/fit", json={"points": points, "minimize": True}).json()["report"]
    assert report["found"] and report["degree"] == 1


def test_fit_requires_exactly_one_target(client):
    resp = client.post("/fit", json={"degree": 1})
    assert resp.status_code == 422


def test_flecnode_endpoint(client):
    report = client.post("/flecnode", json={"poly": "x^2+y^2+z^2-1"}).json()["report"]
    assert set(report["charts"]) == {"1", "2", "3"}
    assert all(entry["flec"] is None for entry in report["charts"].values())


def test_ruled_cert_endpoint(client):
    report = client.post(
        "/ruled-cert", json={"poly": "x^3+y^3+z^3-1", "irreducible": True}
    ).json()["report"]
    assert report["status"] == "not-ruled-certified"
    report = client.post("/ruled-cert", json={"poly": "x*y-z"}).json()["report"]
    assert report["status"] == "ruled-certified"


def test_motion_lines_endpoint(client):
    points = [["0", "0"], ["1", "0"]]
    report = client.post("/motion-lines", json={"points": points}).json()["report"]
    assert report["line_count"] == 4
    assert report["tags_recovered"]


def test_generate_endpoint(client):
    report = client.post(
        "/generate", json={"kind": "grid_joints", "size": 2, "seed": 0}
    ).json()["report"]
    assert len(report["lines"]) == 12


def test_experiment_endpoint_and_listing(client):
    names = client.get("/experiments").json()["experiments"]
    assert "joints" in names and "partition" in names
    envelope = client.post(
        "/experiments/joints", json={"params": {"size": 2}, "seed": 0}
    ).json()
    assert envelope["report"]["passed"]
    assert envelope["wall_time_ms"] >= 0.0


def test_experiment_cap_becomes_422(client):
    resp = client.post("/experiments/joints", json={"params": {"size": 50}, "seed": 0})
    assert resp.status_code == 422
    assert "cap is" in resp.json()["detail"]


def test_unknown_experiment_becomes_422(client):
    resp = client.post("/experiments/bogus", json={"params": {}, "seed": 0})
    assert resp.status_code == 422
