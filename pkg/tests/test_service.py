"""HTTP service endpoints against the in-process library results."""

import pytest
from fastapi.testclient import TestClient

from sicrate.analysis import expected_rates
from sicrate.centralized import solve_global
from sicrate.channel import SymmetricChannel
from sicrate.service.app import create_app

EXAMPLE = {"epsilon": 0.3, "mu": 0.7, "gamma": 4.0}


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_health(client):
    res = client.get("/health")
    assert res.status_code == 200
    assert res.json() == {"status": "ok"}


def test_solve_symmetric_matches_library(client):
    res = client.post("/solve/symmetric", json=EXAMPLE)
    assert res.status_code == 200
    body = res.json()
    alloc = solve_global(SymmetricChannel(**EXAMPLE).to_gains())
    assert body["strategy"] == alloc.strategy.value
    assert body["sum_rate"] == alloc.sum_rate
    assert (body["gamma1"], body["gamma2"]) == (4.0, 4.0)


def test_solve_general_gains(client):
    res = client.post("/solve", json={
        "g11": 1.0, "g12": 0.3, "g21": 0.7, "g22": 1.0,
        "gamma1_max": 4.0, "gamma2_max": 4.0,
    })
    assert res.status_code == 200
    assert res.json()["strategy"] == "PartialSicR1"


def test_landmarks(client):
    res = client.post("/landmarks", json=EXAMPLE)
    body = res.json()
    assert body["ws2"] == pytest.approx(1.49, abs=0.01)
    assert body["op2"] == pytest.approx(0.64, abs=0.01)
    assert body["th"] == pytest.approx(0.85, abs=0.01)


def test_classify(client):
    body = client.post("/classify", json=EXAMPLE).json()
    assert body["strategy"] == "PartialSicR1"
    assert body["r_opt"] == pytest.approx(body["r_pii"], rel=1e-12)


def test_expected_rates(client):
    body = client.post("/expected-rates", json=EXAMPLE).json()
    er = expected_rates(SymmetricChannel(**EXAMPLE))
    assert body["e_sum"] == pytest.approx(er.e_sum, rel=1e-12)
    assert body["rho_osc"] == pytest.approx(0.836, abs=2e-3)
    assert body["rho_greedy"] < 1.0
    assert body["rho_orth"] < 1.0


def test_switching_curve(client):
    body = client.get("/switching-curve", params={"gamma": 4.0, "epsilon": 0.3}).json()
    assert body["mu"] == pytest.approx(0.8928571428571429, abs=1e-12)
    assert body["q"] == pytest.approx(0.6096117967977924, abs=1e-5)


def test_simulate_events(client):
    res = client.post("/simulate", json={**EXAMPLE, "n_periods": 2})
    body = res.json()
    assert body["greedy_user"] == 1
    assert body["events"]["sic_loss"] == pytest.approx(1.4292, abs=1e-3)
    assert body["steady_average"] == pytest.approx(body["e_sum_closed_form"], abs=5e-3)


def test_validation_rejected_with_422(client):
    assert client.post("/landmarks", json={**EXAMPLE, "epsilon": 1.2}).status_code == 422
    assert client.post("/solve", json={"g11": -1, "g12": 0.3, "g21": 0.7, "g22": 1,
                                       "gamma1_max": 4, "gamma2_max": 4}).status_code == 422
    assert client.post("/simulate", json={**EXAMPLE, "dt": 0.5}).status_code == 422
    assert client.get("/switching-curve", params={"gamma": -4, "epsilon": 0.3}).status_code == 422
