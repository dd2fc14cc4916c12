import pytest
from fastapi.testclient import TestClient

from latdist.service.app import app

client = TestClient(app)


def test_square_stats_endpoint():
    resp = client.post("/v1/square-stats", json={"side": 3})
    assert resp.status_code == 200
    body = resp.json()
    assert body["n_points"] == 9
    assert body["stats"]["distinct"] == 5
    assert body["stats"]["energy"] == "1248"  # wide ints travel as strings
    assert body["stats"]["cs_bound"] == "5184/5"


def test_square_stats_validation():
    resp = client.post("/v1/square-stats", json={"side": 1})
    assert resp.status_code == 422


def test_lshape_endpoint():
    resp = client.post("/v1/lshape", json={"n": 2})
    assert resp.status_code == 200
    body = resp.json()
    assert body["distinct"] == 4
    assert body["energy"] == "40"


def test_rect_endpoint():
    resp = client.post("/v1/rect", json={"n": 64, "alpha": "1/3"})
    assert resp.status_code == 200
    body = resp.json()
    assert (body["w"], body["h"], body["i_min"]) == (16, 4, 8)
    assert body["identities"]["sum_r"] == "45"
    assert body["identities"]["sum_d"] == "45"


def test_rect_rejects_float_alpha():
    resp = client.post("/v1/rect", json={"n": 64, "alpha": "0.33"})
    assert resp.status_code == 422


def test_rect_empty_sublattice():
    resp = client.post("/v1/rect", json={"n": 10, "alpha": "9/20"})
    assert resp.status_code == 422
    body = resp.json()
    assert body["code"] == "validation"
    assert "sublattice empty" in body["reason"]


def test_identities_endpoint():
    resp = client.post("/v1/identities", json={"n": 4096, "alpha": "2/5"})
    assert resp.status_code == 200
    ids = resp.json()["identities"]
    assert ids["sum_r"] == ids["sum_d"]
    assert ids["sum_r2"] == ids["sum_d2"]
    assert ids["sum_binom_r2"] == ids["sum_binom_d2"]


def test_rhat_endpoint():
    resp = client.post("/v1/rhat", json={"limit": 10})
    assert resp.status_code == 200
    row = resp.json()["checkpoints"][0]
    assert row["k"] == 10 and row["rhat"] == "22"


def test_rhat_bad_checkpoint():
    resp = client.post("/v1/rhat", json={"limit": 10, "checkpoints": [100]})
    assert resp.status_code == 422


def test_landau_endpoint():
    resp = client.post("/v1/landau", json={"limit": 100, "checkpoints": [10, 100]})
    assert resp.status_code == 200
    rows = resp.json()["checkpoints"]
    assert [r["count"] for r in rows] == [7, 43]


def test_arcs_endpoint():
    resp = client.post("/v1/arcs", json={"n_max": 100, "beta": "1/6", "per_n": True})
    assert resp.status_code == 200
    body = resp.json()
    assert body["overall_max"] <= 2
    assert len(body["rows"]) == body["scanned"]


def test_arcs_rejects_float_beta():
    resp = client.post("/v1/arcs", json={"n_max": 100, "beta": "0.4"})
    assert resp.status_code == 422


def test_capacity_maps_to_507():
    resp = client.post("/v1/rhat", json={"limit": 1 << 40})
    assert resp.status_code == 507
    assert resp.json()["code"] == "capacity"


def test_oracle_check_endpoint():
    resp = client.post("/v1/oracle-check", json={})
    assert resp.status_code == 200
    assert resp.json()["all_ok"] is True
