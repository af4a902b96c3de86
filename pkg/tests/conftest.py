import json
import os
import random

import pytest

from cyclelab.homalg import ChainComplex, IntMatrix
from cyclelab.homalg.double import tensor_complexes
from cyclelab.multicurve import graph_from_json

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def fixture_path(name):
    return os.path.join(FIXTURES, name)


@pytest.fixture
def remark_graph():
    with open(fixture_path("remark.json"), "r", encoding="utf-8") as fh:
        return graph_from_json(json.load(fh))


def random_chain_complex(rng, max_rank=2, span=3, offset=0):
    """Small complex with honest d*d = 0: a direct sum of two-term pieces
    [Z --m--> Z] in adjacent degrees plus free summands.

    Each two-term piece owns a private source generator at degree k and a
    private target generator at degree k-1; targets at a degree come before
    sources, so no generator is ever both, and compositions vanish.
    """
    targets = {}
    sources = {}
    free = {}
    pieces = []
    for _ in range(rng.randint(1, 4)):
        k = offset + rng.randint(1, span)
        if rng.random() < 0.7:
            m = rng.randint(-3, 3)
            pieces.append((k, m, sources.get(k, 0), targets.get(k - 1, 0)))
            sources[k] = sources.get(k, 0) + 1
            targets[k - 1] = targets.get(k - 1, 0) + 1
        else:
            free[k] = free.get(k, 0) + max(1, rng.randint(1, max_rank))
    degrees = set(targets) | set(sources) | set(free)
    ranks = {k: targets.get(k, 0) + free.get(k, 0) + sources.get(k, 0)
             for k in degrees}
    entries = {}
    for (k, m, src_slot, dst_slot) in pieces:
        j = targets.get(k, 0) + free.get(k, 0) + src_slot
        entries.setdefault(k, {})[(dst_slot, j)] = m
    diffs = {}
    for k, ent in entries.items():
        diffs[k] = IntMatrix(ranks.get(k - 1, 0), ranks.get(k, 0), ent)
    return ChainComplex(ranks, diffs)


def random_double_complex(rng, max_rank=2):
    """Tensor of two random complexes: anticommutation holds by construction
    and the total homology has the tensor complex as an oracle."""
    a = random_chain_complex(rng, max_rank=max_rank)
    b = random_chain_complex(rng, max_rank=max_rank)
    return tensor_complexes(a, b), a, b


def random_matrix(rng, rows, cols, bound=9):
    entries = {}
    for i in range(rows):
        for j in range(cols):
            if rng.random() < 0.7:
                v = rng.randint(-bound, bound)
                if v:
                    entries[i, j] = v
    return IntMatrix(rows, cols, entries)


@pytest.fixture
def rng():
    return random.Random(20250815)
