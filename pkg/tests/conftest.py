import random

import pytest

from mixedcages import generators
from mixedcages.graph import MixedGraph
from mixedcages.labels import plain

# Fixed seed for the reproducible random-graph corpus used by the
# oracle-equivalence and property tests.
RANDOM_CORPUS_SEED = 20240613


def random_mixed_graphs(count=50, max_vertices=30, seed=RANDOM_CORPUS_SEED):
    """Seeded corpus of simple mixed graphs of varied density."""
    rng = random.Random(seed)
    graphs = []
    for _ in range(count):
        n = rng.randint(4, max_vertices)
        density = rng.uniform(0.03, 0.25)
        edges, arcs = [], []
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() >= density:
                    continue
                roll = rng.random()
                if roll < 0.40:
                    edges.append((plain(i), plain(j)))
                elif roll < 0.65:
                    arcs.append((plain(i), plain(j)))
                elif roll < 0.90:
                    arcs.append((plain(j), plain(i)))
                else:
                    arcs.append((plain(i), plain(j)))
                    arcs.append((plain(j), plain(i)))
        graphs.append(MixedGraph.build([plain(i) for i in range(n)], edges, arcs))
    return graphs


def small_generated_graphs():
    """Every generator output of order <= 100 exercised by the suite."""
    return [
        generators.projective_incidence(2),
        generators.projective_incidence(3),
        generators.projective_incidence(4),
        generators.biaffine(2),
        generators.biaffine(3),
        generators.biaffine(5),
        generators.biaffine(7),
        generators.circulant(11, (1, 2)),
        generators.circulant(6, (1,)),
        generators.circulant(5, (1, 2, 3, 4)),
        generators.bipartite_circulant(3),
        generators.bipartite_circulant(7),
        generators.bipartite_circulant(11),
        generators.family(3),
        generators.family(5),
        generators.cage_136(),
        generators.moore_tree(3, 6),
        generators.moore_tree(5, 6),
        generators.moore_tree(4, 4),
        generators.lower_bound_witness(2, 5, 6),
        generators.lower_bound_witness(1, 3, 6),
    ]


@pytest.fixture(scope="session")
def small_graphs():
    return small_generated_graphs()


@pytest.fixture(scope="session")
def cage():
    return generators.cage_136()
