import random

import pytest

from domgame.analysis import (ConjectureRow, check_half_conjecture,
                              classify_unicyclic, has_hamiltonian_path)
from domgame.families import FamilySpec, generate, path_graph, cycle_graph
from domgame.graph import make_graph, mask_of

from helpers import naive_hamiltonian_endpoints


class TestHamiltonianPath:
    def test_cycle_all_endpoints(self):
        g = cycle_graph(6)
        assert has_hamiltonian_path(g) == (True, g.full_mask)

    def test_star_not_traceable(self):
        star = make_graph(4, [(0, 1), (0, 2), (0, 3)])
        assert has_hamiltonian_path(star) == (False, 0)

    def test_tadpole_31_endpoints(self):
        lg = generate(FamilySpec("tadpole", {"m": 3, "n": 1}))
        exists, endpoints = has_hamiltonian_path(lg.graph)
        assert exists
        assert endpoints & (1 << lg.labels["tail_leaf"])

    def test_matches_permutation_search(self):
        rng = random.Random(13)
        for _ in range(40):
            n = rng.randint(1, 7)
            edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                     if rng.random() < 0.4]
            g = make_graph(n, edges)
            assert has_hamiltonian_path(g) == naive_hamiltonian_endpoints(g)

    def test_cap(self):
        with pytest.raises(ValueError):
            has_hamiltonian_path(path_graph(25))


class TestClassifyUnicyclic:
    def test_cycle(self):
        assert classify_unicyclic(cycle_graph(5)).kind == "cycle"
        assert classify_unicyclic(cycle_graph(5)).params == (5,)

    def test_tadpole_roundtrip(self):
        lg = generate(FamilySpec("tadpole", {"m": 5, "n": 2}))
        c = classify_unicyclic(lg.graph)
        assert (c.kind, c.params) == ("tadpole", (5, 2))

    def test_two_tailed_roundtrip_sorted_tails(self):
        for n, k in ((3, 2), (2, 3), (2, 2)):
            lg = generate(FamilySpec("two-tailed-tadpole",
                                     {"m": 4, "n": n, "k": k}))
            c = classify_unicyclic(lg.graph)
            assert (c.kind, c.params) == ("two-tailed-tadpole",
                                          (4, max(n, k), min(n, k)))

    def test_nonadjacent_branches_not_traceable(self):
        # C_6 with pendant paths at two opposite vertices
        g = make_graph(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0),
                           (0, 6), (3, 7)])
        assert classify_unicyclic(g).kind == "not-traceable"

    def test_two_tails_same_vertex_not_traceable(self):
        g = make_graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                           (0, 5), (0, 6)])
        assert classify_unicyclic(g).kind == "not-traceable"

    def test_tree_not_unicyclic(self):
        assert classify_unicyclic(path_graph(5)).kind == "not-unicyclic"

    def test_disconnected_not_unicyclic(self):
        g = make_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
        assert classify_unicyclic(g).kind == "not-unicyclic"

    def test_roundtrip_sweep(self):
        for m in range(3, 8):
            for n in range(1, 5):
                lg = generate(FamilySpec("tadpole", {"m": m, "n": n}))
                c = classify_unicyclic(lg.graph)
                assert (c.kind, c.params) == ("tadpole", (m, n))


class TestConjectureCheck:
    def test_p11(self):
        row = check_half_conjecture(path_graph(11))
        assert (row.gamma_g, row.bound, row.holds, row.is_half_graph) == \
            (5, 6, True, False)

    def test_r11(self):
        lg = generate(FamilySpec("r-graph", {"n": 2}))
        row = check_half_conjecture(lg.graph)
        assert (row.gamma_g, row.bound, row.holds, row.is_half_graph) == \
            (6, 6, True, True)

    def test_c8(self):
        row = check_half_conjecture(cycle_graph(8))
        assert (row.gamma_g, row.bound, row.is_half_graph) == (4, 4, True)

    def test_rejects_non_traceable(self):
        star = make_graph(4, [(0, 1), (0, 2), (0, 3)])
        with pytest.raises(ValueError):
            check_half_conjecture(star)

    def test_holds_flag_consistency(self):
        row = ConjectureRow("path", "n=9", 9, 5, 5, True, True)
        assert row.as_dict()["holds"] == (row.gamma_g <= row.bound)

    def test_random_traceable_unicyclic_hold(self):
        rng = random.Random(3)
        for _ in range(20):
            m = rng.randint(3, 10)
            n = rng.randint(1, 16 - m) if m < 16 else 1
            lg = generate(FamilySpec("tadpole", {"m": m, "n": n}))
            assert check_half_conjecture(lg.graph).holds
