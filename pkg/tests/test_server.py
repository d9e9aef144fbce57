import pytest
from fastapi.testclient import TestClient

from chipgame import complete, ewd, make_divisor, q_reduce, rank
from chipgame.formats import divisor_to_obj, graph_to_obj, write
from chipgame.server import create_app
from support import fig_divisor, fig_graph


@pytest.fixture
def client():
    return TestClient(create_app())


def fig_payload():
    return divisor_to_obj(fig_divisor())


def start_session(client) -> dict:
    response = client.post("/sessions", json=fig_payload())
    assert response.status_code == 201
    return response.json()


def play(client, sid, kind, vertices):
    response = client.post(
        f"/sessions/{sid}/moves", json={"kind": kind, "vertices": sorted(vertices)}
    )
    assert response.status_code == 200, response.text
    return response.json()


class TestCreateSession:
    def test_initial_state(self, client):
        state = start_session(client)
        assert state["chips"] == {"Alice": 2, "Bob": -3, "Charlie": 4, "Elise": -1}
        assert state["degree"] == 2
        assert state["won"] is False
        assert state["move_index"] == 0

    def test_effective_divisor_starts_won(self, client):
        payload = divisor_to_obj(make_divisor(fig_graph(), [("Alice", 2)]))
        state = client.post("/sessions", json=payload).json()
        assert state["won"] is True

    def test_disconnected_graph_rejected(self, client):
        payload = {
            "graph": {"vertices": ["a", "b", "c"], "edges": [["a", "b", 1]]},
            "degrees": {},
        }
        response = client.post("/sessions", json=payload)
        assert response.status_code == 422
        body = response.json()
        assert set(body) == {"code", "message", "path"}

    def test_malformed_body(self, client):
        response = client.post("/sessions", content=b"{nope", headers={"content-type": "application/json"})
        assert response.status_code == 422


class TestMoves:
    def test_fig3_sequence(self, client):
        sid = start_session(client)["session_id"]
        state = play(client, sid, "set_fire", {"Alice", "Elise", "Charlie"})
        assert state["chips"] == {"Alice": 1, "Bob": -1, "Charlie": 3, "Elise": -1}
        assert state["won"] is False
        state = play(client, sid, "set_fire", {"Alice", "Elise", "Charlie"})
        assert state["chips"] == {"Alice": 0, "Bob": 1, "Charlie": 2, "Elise": -1}
        state = play(client, sid, "set_fire", {"Bob", "Charlie"})
        assert state["chips"] == {"Alice": 2, "Bob": 0, "Charlie": 0, "Elise": 0}
        assert state["won"] is True
        assert state["move_index"] == 3

    def test_lend_then_borrow_restores(self, client):
        initial = start_session(client)
        sid = initial["session_id"]
        play(client, sid, "lend", {"Charlie"})
        state = play(client, sid, "borrow", {"Charlie"})
        assert state["chips"] == initial["chips"]

    def test_degree_conserved(self, client):
        sid = start_session(client)["session_id"]
        for move in ({"Alice"}, {"Bob", "Charlie"}, {"Elise"}):
            state = play(client, sid, "set_fire", move)
            assert state["degree"] == 2

    def test_unknown_vertex(self, client):
        sid = start_session(client)["session_id"]
        response = client.post(
            f"/sessions/{sid}/moves", json={"kind": "lend", "vertices": ["Zed"]}
        )
        assert response.status_code == 400
        assert response.json()["code"] == "unknown_vertex"

    def test_unknown_session(self, client):
        response = client.post(
            "/sessions/deadbeef/moves", json={"kind": "lend", "vertices": ["Alice"]}
        )
        assert response.status_code == 404
        assert response.json()["code"] == "unknown_session"

    def test_bad_kind_rejected(self, client):
        sid = start_session(client)["session_id"]
        response = client.post(
            f"/sessions/{sid}/moves", json={"kind": "steal", "vertices": ["Alice"]}
        )
        assert response.status_code == 422
        assert response.json()["code"] == "validation_error"

    def test_history_replays(self, client):
        sid = start_session(client)["session_id"]
        play(client, sid, "set_fire", {"Alice", "Elise", "Charlie"})
        play(client, sid, "borrow", {"Bob"})
        state = client.get(f"/sessions/{sid}").json()
        assert state["move_index"] == 2
        assert len(state["history"]) == 2
        replay = make_divisor(fig_graph(), list(state["initial_chips"].items()))
        for entry in state["history"]:
            if entry["kind"] == "set_fire":
                replay = replay.set_fire(entry["vertices"])
            elif entry["kind"] == "lend":
                replay = replay.lend(entry["vertices"][0])
            else:
                replay = replay.borrow(entry["vertices"][0])
            assert replay.as_dict() == entry["chips"]
        assert replay.as_dict() == state["chips"]


class TestUndo:
    def test_single_undo(self, client):
        initial = start_session(client)
        sid = initial["session_id"]
        play(client, sid, "set_fire", {"Alice", "Elise", "Charlie"})
        state = client.post(f"/sessions/{sid}/undo").json()
        assert state["chips"] == initial["chips"]
        assert state["move_index"] == 0

    def test_undo_fresh_session(self, client):
        sid = start_session(client)["session_id"]
        response = client.post(f"/sessions/{sid}/undo")
        assert response.status_code == 409
        assert response.json()["code"] == "nothing_to_undo"

    def test_undo_stack_discipline(self, client, rng):
        initial = start_session(client)
        sid = initial["session_id"]
        states = [initial["chips"]]
        for _ in range(rng.randint(3, 8)):
            vertices = rng.sample(fig_graph().vertices, rng.randint(1, 4))
            states.append(play(client, sid, "set_fire", vertices)["chips"])
        for expected in reversed(states[:-1]):
            state = client.post(f"/sessions/{sid}/undo").json()
            assert state["chips"] == expected


class TestAnalysis:
    def test_hint_at_fig4_position(self, client):
        sid = start_session(client)["session_id"]
        play(client, sid, "set_fire", {"Charlie"})
        result = client.get(f"/sessions/{sid}/analysis/hint", params={"q": "Bob"}).json()
        assert result["result"]["kind"] == "dhar_set"
        assert result["result"]["vertices"] == ["Alice", "Charlie", "Elise"]

    def test_hint_borrow_fallback(self, client):
        sid = start_session(client)["session_id"]
        result = client.get(f"/sessions/{sid}/analysis/hint", params={"q": "Bob"}).json()
        # Elise is in debt off q, so the configuration is not yet nonnegative
        assert result["result"]["kind"] == "borrow_at"
        assert result["result"]["vertices"] == ["Elise"]

    def test_hint_when_won(self, client):
        payload = divisor_to_obj(make_divisor(fig_graph(), [("Alice", 2)]))
        sid = client.post("/sessions", json=payload).json()["session_id"]
        result = client.get(f"/sessions/{sid}/analysis/hint").json()
        assert result["result"]["kind"] == "none"

    def test_hint_when_unwinnable(self, client):
        payload = divisor_to_obj(make_divisor(fig_graph(), [("Bob", -1)]))
        sid = client.post("/sessions", json=payload).json()["session_id"]
        result = client.get(f"/sessions/{sid}/analysis/hint", params={"q": "Bob"}).json()
        assert result["result"]["kind"] == "none"
        assert "unwinnable" in result["result"]["rationale"]

    def test_hints_are_legal(self, client, rng):
        from chipgame import Configuration, legal_set_fire

        sid = start_session(client)["session_id"]
        divisor = fig_divisor()
        for _ in range(15):
            vertices = rng.sample(fig_graph().vertices, rng.randint(1, 4))
            play(client, sid, "set_fire", vertices)
            divisor = divisor.set_fire(vertices)
            hint = client.get(f"/sessions/{sid}/analysis/hint", params={"q": "Bob"}).json()[
                "result"
            ]
            if hint["kind"] == "dhar_set":
                legal, _ = legal_set_fire(Configuration(divisor, "Bob"), hint["vertices"])
                assert legal

    def test_winnable_matches_library(self, client):
        sid = start_session(client)["session_id"]
        result = client.get(f"/sessions/{sid}/analysis/winnable").json()
        expected = ewd(fig_graph(), fig_divisor())
        assert result["result"]["winnable"] == expected.winnable

    def test_qreduce_matches_library(self, client):
        sid = start_session(client)["session_id"]
        result = client.get(f"/sessions/{sid}/analysis/qreduce", params={"q": "Bob"}).json()
        reduced, script = q_reduce(fig_divisor(), "Bob")
        assert result["result"]["reduced"] == reduced.as_dict()
        assert result["result"]["script"] == script.as_dict()

    def test_rank_matches_library(self, client):
        sid = start_session(client)["session_id"]
        result = client.get(f"/sessions/{sid}/analysis/rank").json()
        expected = rank(fig_divisor())
        assert result["result"]["rank"] == expected.rank == 0
        assert result["result"]["witness"] == expected.witness.as_dict()

    def test_ewd_replay(self, client):
        sid = start_session(client)["session_id"]
        result = client.get(f"/sessions/{sid}/analysis/ewd_replay", params={"q": "Bob"}).json()
        expected = ewd(fig_graph(), fig_divisor(), q="Bob")
        steps = result["result"]["steps"]
        assert result["result"]["winnable"] == expected.winnable
        assert len(steps) == len(expected.log)
        assert steps[0]["fired"] == []
        assert steps[-1]["chips"] == expected.q_reduced.as_dict()

    def test_rank_guard(self):
        client = TestClient(create_app(rank_vertex_limit=3))
        state = client.post("/sessions", json=fig_payload())
        sid = state.json()["session_id"]
        response = client.get(f"/sessions/{sid}/analysis/rank")
        assert response.status_code == 400
        assert "too large" in response.json()["message"]

    def test_unknown_kind(self, client):
        sid = start_session(client)["session_id"]
        assert client.get(f"/sessions/{sid}/analysis/mystery").status_code == 400

    def test_responses_carry_state(self, client):
        sid = start_session(client)["session_id"]
        result = client.get(f"/sessions/{sid}/analysis/winnable").json()
        for key in ("session_id", "move_index", "chips", "degree", "won"):
            assert key in result


class TestPersistence:
    def test_recovery_replays_log(self, tmp_path):
        store = tmp_path / "sessions"
        client = TestClient(create_app(persist_dir=str(store)))
        sid = client.post("/sessions", json=fig_payload()).json()["session_id"]
        client.post(f"/sessions/{sid}/moves", json={"kind": "set_fire",
                    "vertices": ["Alice", "Charlie", "Elise"]})
        client.post(f"/sessions/{sid}/moves", json={"kind": "borrow", "vertices": ["Bob"]})
        client.post(f"/sessions/{sid}/undo")
        expected = client.get(f"/sessions/{sid}").json()

        revived = TestClient(create_app(persist_dir=str(store)))
        state = revived.get(f"/sessions/{sid}").json()
        assert state["chips"] == expected["chips"]
        assert state["move_index"] == expected["move_index"] == 1


class TestTtl:
    def test_expired_sessions_pruned(self):
        client = TestClient(create_app(session_ttl=0.0))
        sid = client.post("/sessions", json=fig_payload()).json()["session_id"]
        import time

        time.sleep(0.01)
        assert client.get(f"/sessions/{sid}").status_code == 404
