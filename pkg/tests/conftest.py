"""Shared sweep definitions and fixtures."""

from __future__ import annotations

import pytest

from satnum import build_family, erdos_renyi

#: canonical family instances exercised across the structural/oracle sweeps
SWEEP_EXPRESSIONS = (
    [f"path({n})" for n in range(1, 13)]
    + [f"cycle({n})" for n in range(3, 13)]
    + [f"wheel({n})" for n in range(4, 11)]
    + [f"complete({n})" for n in range(1, 7)]
    + [f"empty({n})" for n in range(1, 6)]
    + [f"tri({n})" for n in range(1, 6)]
    + [f"sq({n})" for n in range(1, 5)]
    + [
        "linkpath(2,5)",
        "linkpath(3,3)",
        "linkpath(4,3)",
        "chainpath(3,4)",
        "chainpath(4,3)",
        "chainpath(5,2)",
        "linkcyc(3,3,1)",
        "linkcyc(4,2,1)",
        "linkcyc(4,2,2)",
        "linkcyc(5,2,2)",
        "linkcyc(6,2,3)",
        "chaincyc(3,4,1)",
        "chaincyc(4,3,2)",
        "chaincyc(5,2,1)",
        "chaincyc(6,2,3)",
        "corona(path(3),empty(2))",
        "corona(cycle(4),empty(1))",
        "corona(path(2),path(3))",
        "corona(cycle(3),cycle(3))",
        "corona(complete(1),wheel(5))",
        "union(path(4),cycle(5))",
        "union(cycle(3),cycle(3))",
        "deledge(cycle(8),0,1)",
        "deledge(path(9),3,4)",
    ]
)

RANDOM_GRAPH_SEED = 20260808


def random_graph_suite(count=300, max_n=10, p=0.3, seed=RANDOM_GRAPH_SEED):
    """The seeded random-graph battery used by the oracle criteria."""
    import random

    rng = random.Random(seed)
    graphs = []
    for i in range(count):
        n = rng.randint(1, max_n)
        graphs.append(erdos_renyi(n, p, seed=seed + 1 + i))
    return graphs


@pytest.fixture(scope="session")
def sweep_graphs():
    return [(expr, build_family(expr)) for expr in SWEEP_EXPRESSIONS]


@pytest.fixture(scope="session")
def random_graphs():
    return random_graph_suite()


@pytest.fixture(params=["numba", "python"])
def backend(request):
    return request.param
