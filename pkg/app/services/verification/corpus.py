"""Seeded random graphs and orders for the property sweeps."""

import random
from typing import Iterator, List, Sequence, Tuple

import networkx as nx

from app.services.graph_core import Graph, from_networkx
from app.services.orderings import LinearOrder, OrderStrategy, heuristic_order


def sweep_rng(seed: int, sweep: str) -> random.Random:
    """Independent generator per sweep, so sweeps do not shift each other's draws."""
    return random.Random(f"{seed}:{sweep}")


def random_graphs(
    rng: random.Random,
    count: int,
    max_vertices: int,
    densities: Sequence[float],
    min_vertices: int = 2,
) -> Iterator[Tuple[str, Graph]]:
    """``count`` G(n, d) graphs; densities cycle, n is uniform in min..max."""
    for index in range(count):
        n = rng.randint(min_vertices, max_vertices)
        density = densities[index % len(densities)]
        h = nx.gnp_random_graph(n, density, seed=rng.randrange(2**32))
        yield f"gnp{index}_n{n}_d{density}", from_networkx(h)


def random_bipartite_graphs(rng: random.Random, count: int, max_side: int, density: float) -> Iterator[Graph]:
    for _ in range(count):
        a, b = rng.randint(1, max_side), rng.randint(1, max_side)
        yield from_networkx(nx.bipartite.random_graph(a, b, density, seed=rng.randrange(2**32)))


def random_tree(rng: random.Random, n: int) -> Graph:
    """Uniform labelled tree on n >= 2 vertices via a Pruefer sequence."""
    if n == 2:
        return Graph.from_edges(2, [(1, 2)])
    sequence = [rng.randrange(n) for _ in range(n - 2)]
    return from_networkx(nx.from_prufer_sequence(sequence))


def random_order(rng: random.Random, n: int) -> LinearOrder:
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return LinearOrder.of(perm)


def sweep_orders(g: Graph, rng: random.Random) -> List[Tuple[str, LinearOrder]]:
    """A random order plus the degeneracy and BFS heuristics."""
    return [
        ("random", random_order(rng, g.n)),
        ("degeneracy", heuristic_order(g, OrderStrategy.DEGENERACY)),
        ("bfs", heuristic_order(g, OrderStrategy.BFS_ROOT)),
    ]
