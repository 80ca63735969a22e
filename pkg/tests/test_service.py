from fractions import Fraction

from fastapi.testclient import TestClient

from axialalg.fields import Field
from axialalg.fileio import to_document
from axialalg.models import make_B, make_exc3, make_U
from axialalg.service.app import app

client = TestClient(app)
Q = Field.rationals()


def _doc(A):
    return to_document(A).model_dump(exclude_none=True)


def test_health():
    r = client.get("/health")
    assert r.status_code == 200
    assert r.json()["status"] == "ok"


def test_make_and_analyze():
    r = client.post("/make", json={"kind": "U", "field": {"kind": "Q"}, "n": 3, "lam": "3"})
    assert r.status_code == 200
    doc = r.json()["algebra"]
    assert doc["dim"] == 3

    r = client.post("/analyze", json={"algebra": doc, "options": {"max_axes": 24}})
    assert r.status_code == 200
    body = r.json()
    assert body["verdict"] == "ok"
    assert body["report"]["closure"]["spanning"] is True
    axes = [e for e in body["report"]["basis_elements"] if e["primitive_axis"]]
    assert len(axes) == 3


def test_make_rejects_bad_parameters():
    r = client.post("/make", json={"kind": "U", "field": {"kind": "Q"}, "n": 2, "lam": "1"})
    assert r.status_code == 400
    assert "lam" in r.json()["detail"]
    r = client.post("/make", json={"kind": "U", "field": {"kind": "Fp", "p": 9}, "n": 2, "lam": "3"})
    assert r.status_code == 400
    r = client.post("/make", json={"kind": "wat", "field": {"kind": "Q"}})
    assert r.status_code == 422  # schema-level rejection


def test_analyze_rejects_malformed_document():
    r = client.post("/analyze", json={"algebra": {"dim": 2}})
    assert r.status_code == 422
    doc = _doc(make_U(Q, 2, 3))
    doc["extra"] = True
    r = client.post("/analyze", json={"algebra": doc})
    assert r.status_code == 422


def test_idempotents_endpoint():
    A = make_exc3(Field.prime(7), 3)
    r = client.post("/idempotents", json={"algebra": _doc(A)})
    assert r.status_code == 200
    rep = r.json()["report"]
    assert rep["brute_force"]["count"] == 16
    assert rep["formula"]["count"] == 16
    assert rep["comparison"] == "equal"


def test_decompose_endpoint():
    from axialalg.algebra import direct_product

    P = direct_product(make_U(Q, 2, 3), make_exc3(Q, 3))
    r = client.post("/decompose", json={"algebra": _doc(P), "max_axes": 40})
    assert r.status_code == 200
    body = r.json()
    assert body["spanning"] and body["pairwise_products_zero"]
    assert len(body["components"]) == 2
    types = sorted(c["type"] for c in body["components"])
    assert all(t.startswith("noncommutative") for t in types)
    z = [c["z_ideal"] for c in body["components"] if c["z_ideal"]]
    assert z and z[0]["square_zero"] and z[0]["is_ideal"]


def test_frobenius_endpoint():
    A = make_B(Q, 2, Fraction(3, 2))
    r = client.post("/frobenius", json={"algebra": _doc(A)})
    assert r.status_code == 200
    body = r.json()
    assert set(body["norms"]) == {"1"}
    assert body["radical_dim"] >= 1
    assert any(v["verdict"] == "exceptional_case" for v in body["a0_verdicts"])
    assert body["cases"][0]["case"] == "III" and body["cases"][0]["nu"] == "2"


def test_frobenius_rejects_when_no_axes():
    from axialalg.algebra import Algebra

    zero2 = Algebra(Q, ["u", "v"], [[[0, 0], [0, 0]], [[0, 0], [0, 0]]])
    r = client.post("/frobenius", json={"algebra": _doc(zero2)})
    assert r.status_code == 400


def test_graph_endpoint():
    A = make_exc3(Field.prime(5), 2)
    r = client.post("/graph", json={"algebra": _doc(A)})
    assert r.status_code == 200
    body = r.json()
    assert body["dot"].startswith("graph axial {")
    assert body["components"] == 1
    assert body["vertices"] == 2 * 5  # the two mu-lines of idempotent axes
