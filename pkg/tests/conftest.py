"""Shared strategies, oracles, and fixtures."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import strategies as st

from harmspec.graphs import Graph, build_graph


@st.composite
def graph_strategy(draw, min_n: int = 0, max_n: int = 12):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if not pairs:
        return build_graph(n, [])
    edges = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs)))
    return build_graph(n, edges)


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return build_graph(n, edges)


def exact_det(matrix) -> Fraction:
    """Independent exact determinant via fraction Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in matrix]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = Fraction(1) / m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] * inv
            if f:
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return det


def brute_force_regular_classes(n: int, d: int) -> set[str]:
    """Independent census oracle: exhaust all edge subsets of the right
    size, keep the d-regular ones, and collect canonical forms."""
    from harmspec.census import canonical_form
    from harmspec.graphs import degrees

    pairs = list(combinations(range(n), 2))
    want = n * d // 2
    classes = set()
    for edges in combinations(pairs, want):
        g = build_graph(n, edges)
        if all(x == d for x in degrees(g)):
            classes.add(canonical_form(g))
    return classes


@pytest.fixture(scope="session")
def cubic10():
    from harmspec.census import cached_census

    return cached_census(10, 3)
