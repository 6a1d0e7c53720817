"""Tests for the seeded sweep corpus."""

from app.services.verification import random_graphs, random_order, sweep_rng


def test_same_seed_same_graphs():
    first = list(random_graphs(sweep_rng(7, "coloring"), 5, 8, [0.3, 0.6]))
    second = list(random_graphs(sweep_rng(7, "coloring"), 5, 8, [0.3, 0.6]))
    assert first == second


def test_sweeps_draw_independently():
    a = [sweep_rng(7, "coloring").random() for _ in range(3)]
    b = [sweep_rng(7, "sandwich").random() for _ in range(3)]
    assert a != b


def test_graph_names_and_sizes():
    for index, (label, g) in enumerate(random_graphs(sweep_rng(1, "x"), 8, 6, [0.5], min_vertices=3)):
        assert label.startswith(f"gnp{index}_n{g.n}_")
        assert 3 <= g.n <= 6


def test_random_order_is_permutation():
    order = random_order(sweep_rng(3, "order"), 9)
    assert sorted(order) == list(range(1, 10))
