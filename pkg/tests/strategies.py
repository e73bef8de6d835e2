"""Hypothesis strategies for partitions."""
from hypothesis import strategies as st

from parmon.partition import Partition, from_permutation


@st.composite
def partitions(draw, min_degree=1, max_degree=5, degree=None):
    n = degree if degree is not None else draw(st.integers(min_degree, max_degree))
    points = list(range(1, n + 1)) + [-x for x in range(1, n + 1)]
    order = draw(st.permutations(points))
    labels = []
    for i, _ in enumerate(order):
        labels.append(draw(st.integers(0, max(labels, default=-1) + 1)))
    blocks = {}
    for p, lab in zip(order, labels):
        blocks.setdefault(lab, []).append(p)
    return Partition(n, blocks.values())


@st.composite
def permutations_of(draw, degree):
    return from_permutation(draw(st.permutations(range(1, degree + 1))))


@st.composite
def pairs(draw, max_degree=5):
    n = draw(st.integers(1, max_degree))
    return draw(partitions(degree=n)), draw(partitions(degree=n))


@st.composite
def triples(draw, max_degree=5):
    n = draw(st.integers(1, max_degree))
    return tuple(draw(partitions(degree=n)) for _ in range(3))
