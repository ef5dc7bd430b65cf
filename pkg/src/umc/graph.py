"""Uncertain graph data model: simple undirected graphs with a per-edge
existence probability in (0, 1].

Vertices are dense internal indices 0..n-1.  External 1-based labels are
kept only for I/O; the total order that drives the enumeration ("add
vertices in increasing order") is the internal index order, assigned by
first appearance in the input file.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, TextIO


class GraphFormatError(ValueError):
    """Edge-list input violates the format contract."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class NotACliqueError(ValueError):
    """A vertex set handed to a probability query is not fully connected."""


@dataclass(frozen=True)
class Clique:
    """One unit of enumeration output: a sorted vertex tuple (internal
    indices) plus its clique probability."""

    vertices: tuple[int, ...]
    prob: float


class UncertainGraph:
    """Immutable simple undirected graph with edge probabilities.

    All accessors are pure reads, so instances are safe to share across
    threads after construction.
    """

    __slots__ = ("n", "_prob", "_nbrs", "_nbr_sets", "_labels", "_index")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, float]],
                 labels: Iterable[int] | None = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        prob: dict[tuple[int, int], float] = {}
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v, p in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge endpoint out of range: ({u}, {v})")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not 0.0 < p <= 1.0:
                raise ValueError(f"edge probability {p!r} outside (0, 1]")
            key = (u, v) if u < v else (v, u)
            if key in prob:
                raise ValueError(f"duplicate edge {key}")
            prob[key] = p
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self._prob = prob
        self._nbrs = tuple(tuple(sorted(a)) for a in adj)
        self._nbr_sets = tuple(frozenset(a) for a in adj)
        if labels is None:
            lab = tuple(range(1, n + 1))
        else:
            lab = tuple(labels)
            if len(lab) != n or len(set(lab)) != n:
                raise ValueError("labels must be a bijection onto the vertices")
        self._labels = lab
        self._index = {ext: i for i, ext in enumerate(lab)}

    @property
    def num_edges(self) -> int:
        return len(self._prob)

    def neighbors(self, u: int) -> tuple[int, ...]:
        """Sorted neighbor indices of u."""
        return self._nbrs[u]

    def adj_set(self, u: int) -> frozenset[int]:
        return self._nbr_sets[u]

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    def degree(self, u: int) -> int:
        return len(self._nbrs[u])

    def edge_prob(self, u: int, v: int) -> float:
        key = (u, v) if u < v else (v, u)
        return self._prob[key]

    def edges(self) -> Iterator[tuple[int, int, float]]:
        """Edges as (u, v, p) with u < v, in sorted order."""
        for (u, v) in sorted(self._prob):
            yield u, v, self._prob[(u, v)]

    def label(self, u: int) -> int:
        """External 1-based label of internal index u."""
        return self._labels[u]

    def index(self, label: int) -> int:
        """Internal index of an external label; KeyError if unknown."""
        return self._index[label]

    def has_label(self, label: int) -> bool:
        return label in self._index

    def replace_edges(self, edges: Iterable[tuple[int, int, float]]) -> "UncertainGraph":
        """New graph on the same vertex set/labels with a different edge set."""
        return UncertainGraph(self.n, edges, self._labels)


def load_graph(source: TextIO, prob_parser=None) -> UncertainGraph:
    """Parse the edge-list text format.

    Lines are "u v p" with positive integer labels u != v and p in (0, 1];
    '#' starts a comment; an optional leading header "n <count>" declares
    the vertex count (and thereby isolated vertices), in which case labels
    must lie in 1..count.  Without a header, vertices are the union of the
    endpoints and internal indices follow first-appearance order.

    prob_parser maps the third token to a probability (default: float);
    pass generators.coauthor_prob_parser to ingest "u v c" weighted lists.
    """
    if prob_parser is None:
        prob_parser = _parse_probability
    header_n: int | None = None
    label_order: dict[int, int] = {}
    edges: list[tuple[int, int, float]] = []
    seen: set[tuple[int, int]] = set()

    def intern(ext: int, line_no: int) -> int:
        if ext <= 0:
            raise GraphFormatError(f"vertex id {ext} must be positive", line_no)
        if header_n is not None:
            if ext > header_n:
                raise GraphFormatError(
                    f"vertex id {ext} exceeds declared count {header_n}", line_no)
            return ext - 1
        if ext not in label_order:
            label_order[ext] = len(label_order)
        return label_order[ext]

    for line_no, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if header_n is not None or edges:
                raise GraphFormatError("header must precede all edges", line_no)
            if len(parts) != 2:
                raise GraphFormatError("header must be 'n <count>'", line_no)
            try:
                header_n = int(parts[1])
            except ValueError:
                raise GraphFormatError("header count is not an integer", line_no)
            if header_n < 0:
                raise GraphFormatError("vertex count must be non-negative", line_no)
            continue
        if len(parts) != 3:
            raise GraphFormatError("expected 'u v p'", line_no)
        try:
            eu, ev = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError("vertex ids must be integers", line_no)
        if eu == ev:
            raise GraphFormatError(f"self-loop at vertex {eu}", line_no)
        u, v = intern(eu, line_no), intern(ev, line_no)
        try:
            p = prob_parser(parts[2])
        except GraphFormatError:
            raise
        except ValueError as exc:
            raise GraphFormatError(str(exc), line_no)
        if not 0.0 < p <= 1.0:
            raise GraphFormatError(f"probability {parts[2]} outside (0, 1]", line_no)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphFormatError(f"duplicate edge {{{eu}, {ev}}}", line_no)
        seen.add(key)
        edges.append((u, v, p))

    n = header_n if header_n is not None else len(label_order)
    labels = None if header_n is not None else tuple(label_order)
    return UncertainGraph(n, edges, labels)


def _parse_probability(token: str) -> float:
    return float(token)


def dump_graph(g: UncertainGraph, out: TextIO) -> None:
    """Write the edge-list format; round-trips bit-exactly through
    load_graph (probabilities printed with 17 significant digits).

    The header (which preserves isolated vertices) is emitted only when
    the labels are exactly 1..n; arbitrary-label graphs are written as
    bare edges in first-appearance order.
    """
    canonical = all(g.label(u) == u + 1 for u in range(g.n))
    if canonical:
        out.write(f"n {g.n}\n")
    for u, v, p in g.edges():
        out.write(f"{g.label(u)} {g.label(v)} {p:.17g}\n")


def prune_by_alpha(g: UncertainGraph, alpha: float) -> UncertainGraph:
    """Drop every edge with p(e) < alpha; vertex set unchanged.

    Sound for enumeration: an edge below the threshold cannot appear in
    any clique whose probability reaches alpha.
    """
    check_alpha(alpha)
    return g.replace_edges((u, v, p) for u, v, p in g.edges() if p >= alpha)


def check_alpha(alpha: float) -> None:
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"alpha must lie in (0, 1], got {alpha!r}")


def clique_probability(g: UncertainGraph, c: Iterable[int]) -> float:
    """Product of edge probabilities inside c; 1.0 for the empty set and
    singletons.  Raises NotACliqueError when some pair is not an edge
    (distinct from probability 0, which cannot occur)."""
    q = clique_probability_or_none(g, c)
    if q is None:
        raise NotACliqueError(f"{sorted(set(c))} is not a clique")
    return q


def clique_probability_or_none(g: UncertainGraph, c: Iterable[int]) -> float | None:
    verts = sorted(set(c))
    q = 1.0
    for i, u in enumerate(verts):
        nbrs = g.adj_set(u)
        for v in verts[i + 1:]:
            if v not in nbrs:
                return None
            q *= g.edge_prob(u, v)
    return q


def is_alpha_maximal(g: UncertainGraph, c: Iterable[int], alpha: float) -> bool:
    """Definition-level check, independent of the enumerator: c is an
    alpha-clique and no single vertex extends it to another alpha-clique.
    (Single-vertex extension suffices by subset monotonicity.)"""
    check_alpha(alpha)
    verts = tuple(sorted(set(c)))
    if not verts:
        raise ValueError("empty vertex set")
    q = clique_probability_or_none(g, verts)
    if q is None or q < alpha:
        return False
    cset = set(verts)
    base = min(verts, key=g.degree)
    for w in g.neighbors(base):
        if w in cset:
            continue
        nbrs = g.adj_set(w)
        ext = q
        for u in verts:
            if u not in nbrs:
                ext = None
                break
            ext *= g.edge_prob(u, w)
        if ext is not None and ext >= alpha:
            return False
    return True
