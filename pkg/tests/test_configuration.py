import pytest

from chipgame import (
    build_graph,
    enumerate_superstables,
    is_superstable,
    legal_set_fire,
    make_config,
    make_divisor,
    outdeg_S,
    tetrahedron,
)
from chipgame.errors import (
    EmptySError,
    EnumerationTooLargeError,
    NegativeConfigurationError,
    QInSError,
    UnknownVertexError,
    VertexNotInSError,
)
from support import (
    brute_superstable,
    fig_divisor,
    random_connected_multigraph,
    spanning_tree_count,
)


@pytest.fixture
def c_prime(g_ex):
    # the A:3, C:1, E:0 configuration with respect to Bob
    return make_config(make_divisor(g_ex, [("Alice", 3), ("Charlie", 1)]), "Bob")


class TestMakeConfig:
    def test_worked_example(self, g_ex, d_ex):
        config = make_config(d_ex, "Bob")
        assert config.as_dict() == {"Alice": 2, "Charlie": 4, "Elise": -1}
        assert config.degree_sum == 5
        assert config.q_underlying_chips() == -3

    def test_zero(self, g_ex):
        assert make_config(make_divisor(g_ex), "Alice").degree_sum == 0

    def test_fig4_configuration(self, c_prime):
        assert c_prime.as_dict() == {"Alice": 3, "Charlie": 1, "Elise": 0}

    def test_unknown_q(self, d_ex):
        with pytest.raises(UnknownVertexError):
            make_config(d_ex, "Zed")


class TestOutdeg:
    def test_two_member_set(self, c_prime):
        assert outdeg_S(c_prime, "Alice", {"Alice", "Charlie"}) == 3

    def test_three_member_set(self, c_prime):
        assert outdeg_S(c_prime, "Alice", {"Alice", "Charlie", "Elise"}) == 1

    def test_singleton_is_valence(self, c_prime):
        assert outdeg_S(c_prime, "Charlie", {"Charlie"}) == 3

    def test_vertex_not_in_set(self, c_prime):
        with pytest.raises(VertexNotInSError):
            outdeg_S(c_prime, "Alice", {"Charlie"})

    def test_q_in_set(self, c_prime):
        with pytest.raises(QInSError):
            outdeg_S(c_prime, "Bob", {"Bob"})


class TestLegalSetFire:
    def test_fig5_firing_set(self, c_prime):
        legal, after = legal_set_fire(c_prime, {"Alice", "Charlie", "Elise"})
        assert legal
        assert after.as_dict() == {"Alice": 2, "Charlie": 0, "Elise": 0}
        assert after.q_underlying_chips() == c_prime.q_underlying_chips() + 2

    def test_zero_configuration_has_no_legal_firing(self, rng):
        for _ in range(20):
            g = random_connected_multigraph(rng)
            q = rng.choice(g.vertices)
            config = make_config(make_divisor(g), q)
            others = [v for v in g.vertices if v != q]
            members = rng.sample(others, rng.randint(1, len(others)))
            legal, _ = legal_set_fire(config, members)
            assert not legal

    def test_empty_set_rejected(self, c_prime):
        with pytest.raises(EmptySError):
            legal_set_fire(c_prime, set())

    def test_q_in_set_rejected(self, c_prime):
        with pytest.raises(QInSError):
            legal_set_fire(c_prime, {"Bob", "Alice"})

    def test_illegal_preview_still_returned(self, g_ex):
        config = make_config(make_divisor(g_ex), "Bob")
        legal, after = legal_set_fire(config, {"Alice"})
        assert not legal
        assert after.as_dict()["Alice"] == -4


class TestSuperstable:
    def test_reduced_example(self, g_ex):
        config = make_config(make_divisor(g_ex, [("Alice", 2)]), "Bob")
        assert is_superstable(config) == (True, False)

    def test_zero_is_superstable(self, rng):
        for _ in range(15):
            g = random_connected_multigraph(rng)
            q = rng.choice(g.vertices)
            superstable, _ = is_superstable(make_config(make_divisor(g), q))
            assert superstable

    def test_fig4_not_superstable(self, c_prime):
        superstable, maximal = is_superstable(c_prime)
        assert not superstable and not maximal

    def test_negative_configuration_rejected(self, g_ex, d_ex):
        with pytest.raises(NegativeConfigurationError):
            is_superstable(make_config(d_ex, "Bob"))

    def test_brute_force_agreement(self, rng):
        cases = 0
        while cases < 200:
            g = random_connected_multigraph(rng, max_n=5)
            q = rng.choice(g.vertices)
            chips = [
                (v, rng.randint(0, g.valence(v)))  # sometimes >= valence on purpose
                for v in g.vertices
                if v != q
            ]
            config = make_config(make_divisor(g, chips), q)
            expected = brute_superstable(config)
            assert is_superstable(config)[0] == expected
            cases += 1

    def test_maximal_iff_degree_equals_genus(self, rng):
        seen_maximal = 0
        for _ in range(40):
            g = random_connected_multigraph(rng, max_n=5)
            q = g.vertices[0]
            for config in enumerate_superstables(g, q):
                superstable, maximal = is_superstable(config)
                assert superstable
                assert config.degree_sum <= g.genus
                assert maximal == (config.degree_sum == g.genus)
                seen_maximal += maximal
        assert seen_maximal > 0

    def test_superstable_values_below_valence(self, rng):
        for _ in range(20):
            g = random_connected_multigraph(rng, max_n=5)
            q = g.vertices[0]
            for config in enumerate_superstables(g, q):
                for v, c in config.as_dict().items():
                    assert 0 <= c < g.valence(v)


class TestEnumerateSuperstables:
    def test_single_edge(self):
        g = build_graph({"u", "v"}, [("u", "v", 1)])
        found = enumerate_superstables(g, "u")
        assert len(found) == 1
        assert found[0].as_dict() == {"v": 0}

    def test_worked_example(self, g_ex):
        found = enumerate_superstables(g_ex, "Bob")
        dicts = [c.as_dict() for c in found]
        assert {"Alice": 2, "Charlie": 0, "Elise": 0} in dicts
        assert {"Alice": 0, "Charlie": 0, "Elise": 0} in dicts

    def test_count_matches_spanning_trees(self, rng):
        # Merino's correspondence: superstables biject with spanning trees.
        g_ex_count = len(enumerate_superstables(tetrahedron(), "v0"))
        assert g_ex_count == spanning_tree_count(tetrahedron()) == 16
        for _ in range(15):
            g = random_connected_multigraph(rng, max_n=5)
            q = rng.choice(g.vertices)
            assert len(enumerate_superstables(g, q)) == spanning_tree_count(g)

    def test_cap(self, g_ex):
        with pytest.raises(EnumerationTooLargeError):
            enumerate_superstables(g_ex, "Bob", cap=3)
