import pytest

from homnet.complexes import clique_complex
from homnet.filtration import simplexwise_filtration, skeleton_filtration
from homnet.graph import Graph
from homnet.oracle import SIZE_GUARD, RankReport, betti_bruteforce, persistent_betti_direct
from helpers import branched_complex, complete_graph, cycle_graph, random_graph


def test_hollow_triangle():
    k = clique_complex(cycle_graph(3), max_dim=1)
    report = betti_bruteforce(k, 1)
    assert report.betti == (1, 1)


def test_two_disjoint_edges():
    g = Graph(node_count=4, edges=frozenset({(0, 1), (2, 3)}))
    report = betti_bruteforce(clique_complex(g), 1)
    assert report.betti == (2, 0)


def test_branched_complex_connected():
    report = betti_bruteforce(branched_complex(), 4)
    assert report.betti[0] == 1
    assert report.betti == (1, 1, 0, 0, 0)


def test_rank_report_structure():
    report = betti_bruteforce(clique_complex(complete_graph(3)), 2)
    assert report.boundary_ranks[0] == 0
    assert report.face_counts == (3, 3, 1)
    for k in range(3):
        assert report.bounding_rank(k) <= report.cycle_rank(k)
        assert report.betti[k] >= 0


def test_size_guard():
    big = clique_complex(complete_graph(22))
    with pytest.raises(ValueError):
        betti_bruteforce(big, 4)  # ~35k faces up to dimension 5


def test_betti_respects_truncation():
    capped = clique_complex(complete_graph(4), max_dim=1)
    # the 1-skeleton of K4 has 3 independent cycles
    assert betti_bruteforce(capped, 1).betti == (1, 3)


def test_persistent_betti_direct_p_zero_equals_bruteforce_prefix():
    for seed in range(10):
        k = clique_complex(random_graph(8, 0.5, seed))
        f = skeleton_filtration(k)
        from homnet.complexes import skeleton

        for l in range(f.level_count):
            prefix_report = betti_bruteforce(skeleton(k, l), 2)
            for dim in range(3):
                assert persistent_betti_direct(f, l, 0, dim) == prefix_report.betti[dim]


def test_persistent_betti_direct_k3_window():
    f = skeleton_filtration(clique_complex(complete_graph(3)))
    assert persistent_betti_direct(f, 1, 1, 1) == 0
    assert persistent_betti_direct(f, 1, 0, 1) == 1


def test_persistent_betti_direct_simplexwise():
    f = simplexwise_filtration(clique_complex(cycle_graph(4)))
    # the 4-cycle's loop is born with its last edge and never dies
    last = f.level_count - 1
    assert persistent_betti_direct(f, last, 0, 1) == 1


def test_persistent_betti_direct_range_checks():
    f = skeleton_filtration(clique_complex(complete_graph(3)))
    with pytest.raises(ValueError):
        persistent_betti_direct(f, 2, 1, 0)
    with pytest.raises(ValueError):
        persistent_betti_direct(f, -1, 0, 0)


def test_size_guard_value_documented():
    assert SIZE_GUARD == 20000
    assert isinstance(betti_bruteforce(branched_complex(), 2), RankReport)
