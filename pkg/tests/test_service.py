import pytest
from fastapi.testclient import TestClient

from blockperm.service import app

client = TestClient(app)


def test_health():
    r = client.get("/health")
    assert r.status_code == 200
    assert r.json()["status"] == "ok"


def test_count_avoiding():
    r = client.post("/count", json={"comp": [1, 1, 1], "k": 1})
    assert r.status_code == 200
    body = r.json()
    assert body["count"] == 5
    assert body["selector"] == "k" and body["param"] == 1


def test_count_exact_lis():
    r = client.post("/count", json={"comp": [3, 5], "lis": 6})
    assert r.status_code == 200
    assert r.json()["count"] == 20


def test_count_requires_one_selector():
    assert client.post("/count", json={"comp": [1, 1]}).status_code == 422
    assert (
        client.post("/count", json={"comp": [1, 1], "k": 1, "lis": 2}).status_code
        == 422
    )


def test_count_table():
    r = client.post("/count/table", json={"comp": [2, 2]})
    assert r.status_code == 200
    body = r.json()
    rows = {row["param"]: row["count"] for row in body["rows"]}
    assert rows["h=3"] == 3 and rows["k=1"] == 2
    assert body["csv"].startswith("comp,param,count")


def test_enumerate_canonical_text():
    r = client.post("/enumerate", json={"comp": [2, 2], "lis": 3})
    assert r.status_code == 200
    assert r.json()["perms"] == ["1,3|2,4", "1,4|2,3", "2,3|1,4"]


def test_enumerate_unfiltered():
    r = client.post("/enumerate", json={"comp": [1, 1]})
    assert r.json()["perms"] == ["1|2", "2|1"]


def test_map_w_golden():
    r = client.post("/map", json={"name": "w", "perm": "236|14578"})
    assert r.status_code == 200
    body = r.json()
    assert body["perm"] == "2346|1578"
    assert body["comp"] == [4, 4]
    assert body["values"] == [2, 3, 4, 6, 1, 5, 7, 8]
    assert "trace" not in body


def test_map_swap_trace():
    r = client.post(
        "/map",
        json={"name": "swap", "perm": "1|37|2458|6", "index": 2, "trace": True},
    )
    assert r.status_code == 200
    body = r.json()
    assert body["perm"] == "1|3478|25|6"
    assert [s["after"] for s in body["trace"]] == ["1|347|258|6", "1|3478|25|6"]


def test_map_sort_and_inject():
    r = client.post(
        "/map", json={"name": "sort", "perm": "13|24", "target": [2, 2]}
    )
    assert r.json()["perm"] == "13|24"
    r = client.post(
        "/map", json={"name": "inject", "perm": "1234|5", "target": [3, 2]}
    )
    assert r.status_code == 200
    assert r.json()["comp"] == [3, 2]


def test_map_insert_delete():
    r = client.post("/map", json={"name": "delete-max", "perm": "24|13", "k": 1})
    assert r.json()["perm"] == "2|13"
    r = client.post("/map", json={"name": "insert-max", "perm": "2|13", "k": 1})
    assert r.json()["perm"] == "24|13"


def test_map_domain_error_is_400():
    r = client.post("/map", json={"name": "w", "perm": "34|12"})
    assert r.status_code == 400
    assert "LIS" in r.json()["detail"]
    assert r.json()["error"] == "DomainError"


def test_map_parse_error_is_400():
    r = client.post("/map", json={"name": "w", "perm": "2,|3"})
    assert r.status_code == 400
    assert r.json()["error"] == "ParseError"


def test_map_missing_argument_is_422():
    assert (
        client.post("/map", json={"name": "swap", "perm": "12|34"}).status_code
        == 422
    )
    assert (
        client.post("/map", json={"name": "nope", "perm": "12|34"}).status_code
        == 422
    )


def test_tableau_count():
    r = client.post(
        "/tableau/count", json={"outer": [7, 7, 7, 7, 4], "inner": [2]}
    )
    assert r.status_code == 200
    body = r.json()
    assert body["count"] == 27_754_983_956_700
    assert body["cells"] == 30
    assert "diagram" not in body


def test_tableau_count_diagram():
    r = client.post(
        "/tableau/count", json={"outer": [2, 1], "inner": [1], "diagram": True}
    )
    body = r.json()
    assert body["count"] == 2
    assert body["diagram"] == ". #\n#"


def test_tableau_bad_shape_is_400():
    r = client.post("/tableau/count", json={"outer": [1, 2]})
    assert r.status_code == 400


def test_verify_endpoint():
    r = client.post("/verify", json={"suite": "catalan", "max_size": 5})
    assert r.status_code == 200
    body = r.json()
    assert body["passed"] is True
    assert {c["name"] for c in body["checks"]} == {
        "catalan-closed-forms", "two-block-counts", "catalan-numbers"
    }
    assert all(c["ok"] for c in body["checks"])


def test_verify_unknown_suite_is_400():
    assert client.post("/verify", json={"suite": "bogus"}).status_code == 400


def test_size_cap_is_400():
    r = client.post("/count", json={"comp": [8, 8], "k": 3})
    assert r.status_code == 400
    assert r.json()["error"] == "SizeLimitError"
    r = client.post("/count", json={"comp": [8, 8], "k": 3, "cap": 16})
    assert r.status_code == 200
