"""Seeded generators for synthetic and semi-synthetic uncertain graphs.

All generators are pure functions of their parameters and seed (numpy
PCG64), so serialized output is byte-identical across runs and platforms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .graph import GraphFormatError, UncertainGraph
from .oracle import build_extremal_graph


@dataclass(frozen=True)
class DeterministicGraph:
    """Structure-only intermediate: n vertices, edges as (u, v) with u < v."""

    n: int
    edges: tuple[tuple[int, int], ...]


def gen_barabasi_albert(n: int, m_per_vertex: int, seed: int) -> DeterministicGraph:
    """Preferential-attachment graph: start from a clique on m+1 vertices,
    then attach each new vertex to m distinct existing vertices chosen with
    probability proportional to degree (without replacement).  Edge count
    is C(m+1, 2) + (n - m - 1) * m, i.e. about n * m."""
    m = m_per_vertex
    if not 1 <= m < n:
        raise ValueError("need 1 <= m_per_vertex < n")
    rng = np.random.default_rng(seed)
    edges: list[tuple[int, int]] = list(combinations(range(m + 1), 2))
    # One slot per degree unit; sampling a slot uniformly picks a vertex
    # with probability proportional to its degree.
    slots: list[int] = [u for e in edges for u in e]
    for v in range(m + 1, n):
        targets: set[int] = set()
        while len(targets) < m:
            targets.add(slots[int(rng.integers(0, len(slots)))])
        for u in sorted(targets):
            edges.append((u, v))
            slots.append(u)
            slots.append(v)
    return DeterministicGraph(n, tuple(edges))


def gen_erdos_renyi(n: int, density: float, seed: int) -> DeterministicGraph:
    """Each vertex pair is an edge independently with probability density."""
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.default_rng(seed)
    pairs = list(combinations(range(n), 2))
    mask = rng.random(len(pairs)) < density
    return DeterministicGraph(n, tuple(p for p, keep in zip(pairs, mask) if keep))


def assign_uniform_probabilities(g: DeterministicGraph, seed: int) -> UncertainGraph:
    """Give every edge an independent probability uniform on (0, 1].

    Drawn as 1 - u with u in [0, 1) so the endpoint 0 is excluded and 1 is
    attainable, matching the probability codomain.
    """
    rng = np.random.default_rng(seed)
    draws = 1.0 - rng.random(len(g.edges))
    return UncertainGraph(g.n, [(u, v, p) for (u, v), p in zip(g.edges, draws)])


def assign_constant_probability(g: DeterministicGraph, q: float) -> UncertainGraph:
    if not 0.0 < q <= 1.0:
        raise ValueError("probability must lie in (0, 1]")
    return UncertainGraph(g.n, [(u, v, q) for u, v in g.edges])


def coauthor_probability(c: int) -> float:
    """Edge probability from a co-authored paper count: 1 - e^(-c/10)."""
    if c != int(c) or c <= 0:
        raise ValueError(f"paper count must be a positive integer, got {c!r}")
    return 1.0 - math.exp(-c / 10.0)


def coauthor_prob_parser(token: str) -> float:
    """prob_parser for graph.load_graph over weighted 'u v c' edge lists."""
    try:
        c = int(token)
    except ValueError:
        raise GraphFormatError(f"paper count {token!r} is not an integer")
    return coauthor_probability(c)


PROB_MODELS = ("uniform01", "constant")


@dataclass(frozen=True)
class GenSpec:
    """One generator invocation, parseable from 'family:key=val,...'
    (e.g. 'ba:n=2000,m=10,seed=1' or 'er:n=12,density=0.5')."""

    family: str
    n: int
    m: int = 10
    density: float = 0.5
    alpha: float = 0.5          # extremal family only
    prob_model: str = "uniform01"
    q: float = 0.5              # constant prob model only
    seed: int = 0

    _FAMILIES = ("ba", "er", "extremal")
    _INT_KEYS = ("n", "m", "seed")
    _FLOAT_KEYS = ("density", "alpha", "q")

    def __post_init__(self):
        if self.family not in self._FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.prob_model not in PROB_MODELS:
            raise ValueError(f"unknown probability model {self.prob_model!r}")

    @classmethod
    def parse(cls, text: str) -> "GenSpec":
        family, _, rest = text.partition(":")
        kwargs: dict = {}
        for item in filter(None, rest.split(",")):
            key, _, val = item.partition("=")
            if key in cls._INT_KEYS:
                kwargs[key] = int(val)
            elif key in cls._FLOAT_KEYS:
                kwargs[key] = float(val)
            elif key == "prob_model":
                kwargs[key] = val
            else:
                raise ValueError(f"unknown generator parameter {key!r}")
        if "n" not in kwargs:
            raise ValueError("generator spec requires n=<count>")
        return cls(family=family, **kwargs)

    def label(self) -> str:
        if self.family == "ba":
            return f"ba{self.n}-m{self.m}-s{self.seed}"
        if self.family == "er":
            return f"er{self.n}-d{self.density}-s{self.seed}"
        return f"extremal{self.n}-a{self.alpha}"

    def build(self) -> UncertainGraph:
        if self.family == "extremal":
            return build_extremal_graph(self.n, self.alpha)
        if self.family == "ba":
            base = gen_barabasi_albert(self.n, self.m, self.seed)
        else:
            base = gen_erdos_renyi(self.n, self.density, self.seed)
        if self.prob_model == "constant":
            return assign_constant_probability(base, self.q)
        # distinct stream from the structure draw
        return assign_uniform_probabilities(base, self.seed + 1)
