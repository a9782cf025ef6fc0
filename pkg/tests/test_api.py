"""Tests de la API FastAPI de rango antisimétrico."""
import pytest

from src.graph.sgr import to_sgr

C4_NEGATIVE = "4\n0 1\n0 3\n1 2\n2 3\n"


class TestHealthCheck:
    """Tests del endpoint de health check."""

    def test_health_returns_200(self, test_client):
        response = test_client.get("/api/health")
        assert response.status_code == 200

    def test_health_has_limits(self, test_client):
        data = test_client.get("/api/health").json()
        assert data["status"] == "ok"
        assert data["limits"] == {"max_api_verify_n": 5, "max_catalog_n": 8}
        assert data["checks"] == 22
        assert "version" in data


class TestGraphEndpoints:
    """Tests de las consultas sobre un grafo .sgr."""

    def test_rank(self, test_client):
        response = test_client.post("/api/rank", json={"sgr": C4_NEGATIVE})
        assert response.status_code == 200
        data = response.json()
        assert data["skew_rank"] == 4
        assert data["matching_number"] == 2
        assert data["girth"] == 4

    def test_rank_of_forest_has_no_girth(self, test_client, p4):
        data = test_client.post("/api/rank", json={"sgr": to_sgr(p4)}).json()
        assert data["girth"] is None
        assert data["skew_rank"] == 4

    def test_charpoly(self, test_client):
        data = test_client.post("/api/charpoly", json={"sgr": C4_NEGATIVE}).json()
        assert data["exact"] == data["combinatorial"] == [1, 0, 4, 0, 4]
        assert data["match"] is True

    def test_classify(self, test_client):
        data = test_client.post("/api/classify", json={"sgr": C4_NEGATIVE}).json()
        assert data["graph"] == C4_NEGATIVE
        assert {r["predicate"] for r in data["results"]} >= {"rank-two", "unicyclic-nonsingular"}

    def test_classify_single(self, test_client, paw):
        payload = {"sgr": to_sgr(paw), "theorem": "rank-four-pendant"}
        data = test_client.post("/api/classify", json=payload).json()
        assert len(data["results"]) == 1
        assert data["results"][0]["value"] is True

    def test_classify_precondition(self, test_client):
        payload = {"sgr": C4_NEGATIVE, "theorem": "rank-four-pendant"}
        assert test_client.post("/api/classify", json=payload).status_code == 400

    def test_reduce(self, test_client, k13):
        data = test_client.post("/api/reduce", json={"sgr": to_sgr(k13)}).json()
        assert data["skew_rank"] == 2
        assert data["delta"]["accumulated"] == 2
        assert "delta_class" not in data
        assert len(data["twin_pairs"]) == 3

    @pytest.mark.parametrize("sgr", [
        "",
        "3\n0 1\n1 0\n",
        "2\n0 0\n",
        "2\n0 5\n",
        "dos\n",
    ])
    def test_invalid_sgr(self, test_client, sgr):
        assert test_client.post("/api/rank", json={"sgr": sgr}).status_code == 400


class TestGenerate:
    """Tests del generador de familias."""

    def test_h_graph(self, test_client):
        response = test_client.get("/api/generate", params={"family": "h-nk", "n": 6, "k": 4})
        assert response.status_code == 200
        data = response.json()
        assert data["skew_rank"] == 4
        assert data["sgr"].startswith("6\n")

    def test_multipartite(self, test_client):
        data = test_client.get("/api/generate?family=complete-multipartite&parts=2&parts=3").json()
        assert data["n"] == 5
        assert data["edges"] == 6
        assert data["skew_rank"] == 2

    def test_unknown_family(self, test_client):
        assert test_client.get("/api/generate", params={"family": "petersen"}).status_code == 400


class TestVerifyEndpoints:
    """Tests de la verificación acotada por la API."""

    def test_theorems(self, test_client):
        data = test_client.get("/api/theorems").json()
        assert len(data) == 22
        cycle = next(t for t in data if t["id"] == "cycle-rank")
        assert cycle["aliases"] == ["lemma2.4"]
        literal = next(t for t in data if t["id"] == "unicyclic-rank-literal")
        assert literal["documented_discrepancy"] is True

    def test_verify_passes(self, test_client):
        response = test_client.post("/api/verify", json={"theorem": "lemma2.3"})
        assert response.status_code == 200
        data = response.json()
        assert data["passed"] is True
        assert data["filter"]["max_n"] == 5
        assert data["instances_checked"] == 31

    def test_verify_explicit_bounds(self, test_client):
        payload = {"theorem": "cycle-rank", "max_n": 4}
        data = test_client.post("/api/verify", json=payload).json()
        assert data["notes"] == {"sign:negative": 8, "sign:positive": 8, "sign:undefined": 8}

    def test_verify_above_limit(self, test_client):
        response = test_client.post("/api/verify", json={"theorem": "path-rank", "max_n": 9})
        assert response.status_code == 400

    def test_verify_unknown_theorem(self, test_client):
        response = test_client.post("/api/verify", json={"theorem": "theorem9.9"})
        assert response.status_code == 400

    def test_verify_invalid_sample(self, test_client):
        response = test_client.post("/api/verify", json={"theorem": "path-rank", "sample": 0})
        assert response.status_code == 422


class TestCatalog:
    """Tests del catálogo de rango 4."""

    def test_json(self, test_client):
        response = test_client.get("/api/catalog/4/unicyclic")
        assert response.status_code == 200
        assert len(response.json()) == 2

    def test_csv(self, test_client):
        response = test_client.get("/api/catalog/4/unicyclic", params={"format": "csv"})
        assert response.status_code == 200
        assert response.headers["content-type"].startswith("text/csv")
        assert "attachment" in response.headers["content-disposition"]
        assert "annotation" in response.text

    def test_above_limit(self, test_client):
        assert test_client.get("/api/catalog/9/unicyclic").status_code == 400

    def test_unknown_class(self, test_client):
        assert test_client.get("/api/catalog/4/tricyclic").status_code == 400
