"""Enumerators for alpha-maximal cliques.

mule        incremental depth-first enumeration: each candidate carries a
            cached factor so extending the working clique costs O(1) per
            candidate, and maximality is decided from the candidate sets
            alone (no graph rescans).
large_mule  size-thresholded variant: shared-neighborhood pre-filtering
            plus a branch guard that skips subtrees too small to reach the
            threshold.
dfs_noip    baseline that recomputes every clique probability from scratch
            and runs full maximality checks; kept for benchmarking.

All enumerators expect the graph to be alpha-pruned already (see
graph.prune_by_alpha); drivers prune first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .graph import (
    Clique,
    UncertainGraph,
    check_alpha,
    clique_probability,
    clique_probability_or_none,
    is_alpha_maximal,
)

Sink = Callable[[Clique], None]

REL_TOL = 1e-9  # factor drift tolerance in debug verification


class InvariantViolation(AssertionError):
    """A cached candidate factor disagrees with the direct product."""


ALGORITHMS = ("mule", "large_mule", "dfs_noip", "oracle")
EMIT_ORDERS = ("dfs", "canonical")


@dataclass(frozen=True)
class EnumConfig:
    """Run parameters for one enumeration."""

    alpha: float
    min_size: int = 1
    algorithm: str = "mule"
    emit_order: str = "dfs"

    def __post_init__(self):
        check_alpha(self.alpha)
        if self.min_size < 1:
            raise ValueError("min_size must be >= 1")
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.algorithm!r}")
        if self.emit_order not in EMIT_ORDERS:
            raise ValueError(f"unknown emit order {self.emit_order!r}")


class _Frame:
    """One node of the search tree.

    clique   current working clique (sorted tuple, ascending)
    q        its clique probability, maintained incrementally
    ext      extension candidates (u, r), u > max(clique), sorted by u;
             q*r is the probability of clique+{u} and is >= alpha
    excl     exclusion witnesses (v, s), v < max(clique), v not in clique;
             q*s is the probability of clique+{v} and is >= alpha
    """

    __slots__ = ("clique", "q", "ext", "excl", "i", "pending")

    def __init__(self, clique, q, ext, excl):
        self.clique = clique
        self.q = q
        self.ext = ext
        self.excl = excl
        self.i = 0            # next extension index to process
        self.pending = None   # (u, r) to move into excl once its subtree returns


def mule(g: UncertainGraph, alpha: float, sink: Sink, *,
         check_invariants: bool = False) -> int:
    """Emit every alpha-maximal clique of g exactly once; returns the count.

    A clique is emitted when both candidate sets are empty: no vertex above
    max(C) extends it (ext) and no vertex below does either (excl), which
    is exactly maximality.
    """
    return _enumerate(g, alpha, sink, min_size=None,
                      check_invariants=check_invariants)


def large_mule(g: UncertainGraph, alpha: float, t: int, sink: Sink, *,
               check_invariants: bool = False) -> int:
    """Emit exactly the alpha-maximal cliques with at least t vertices.

    For t >= 2, first applies shared_neighborhood_filter, then prunes any
    branch where |C'| + |ext'| < t: that subtree cannot reach size t, and
    every surviving witness needed for maximality of a size->=t clique is
    preserved (on the path to such a clique the guard never fires).
    """
    if t < 1:
        raise ValueError("size threshold must be >= 1")
    if t == 1:
        return mule(g, alpha, sink, check_invariants=check_invariants)
    filtered = shared_neighborhood_filter(g, t)
    return _enumerate(filtered, alpha, sink, min_size=t,
                      check_invariants=check_invariants)


def _enumerate(g, alpha, sink, *, min_size, check_invariants):
    check_alpha(alpha)
    count = 0
    # Explicit frame stack: worst-case depth is n, far beyond what native
    # recursion survives.
    stack = [_Frame((), 1.0, [(u, 1.0) for u in range(g.n)], [])]
    while stack:
        fr = stack[-1]
        if fr.pending is not None:
            # Subtree of the previous candidate finished; it now becomes a
            # maximality witness for everything to its right.
            fr.excl.append(fr.pending)
            fr.pending = None
        if fr.i == 0 and not fr.ext and not fr.excl:
            if fr.clique:
                sink(Clique(fr.clique, fr.q))
                count += 1
            stack.pop()
            continue
        if fr.i >= len(fr.ext):
            stack.pop()
            continue
        u, r = fr.ext[fr.i]
        fr.i += 1
        q2 = fr.q * r
        c2 = fr.clique + (u,)
        ext2 = _filter_extension(g, u, q2, fr.ext, fr.i, alpha)
        if min_size is not None and len(c2) + len(ext2) < min_size:
            continue  # subtree cannot reach the size threshold
        excl2 = _filter_exclusion(g, u, q2, fr.excl, alpha)
        if check_invariants:
            _check_frame(g, c2, q2, ext2, excl2, alpha)
        fr.pending = (u, r)
        stack.append(_Frame(c2, q2, ext2, excl2))
    return count


def _filter_extension(g, m, q_new, ext, start, alpha):
    """Candidates surviving the addition of m (= new max of the clique).

    ext is sorted by vertex, so entries from `start` on are exactly those
    above m; each must also be adjacent to m and keep the product >= alpha.
    Runs in O(|ext|) with O(1) work per entry.
    """
    adj = g.adj_set(m)
    out = []
    for i in range(start, len(ext)):
        u, r = ext[i]
        if u in adj:
            r2 = r * g.edge_prob(u, m)
            if q_new * r2 >= alpha:
                out.append((u, r2))
    return out


def _filter_exclusion(g, m, q_new, excl, alpha):
    """Witnesses still able to extend the clique after m joins it."""
    adj = g.adj_set(m)
    out = []
    for v, s in excl:
        if v in adj:
            s2 = s * g.edge_prob(v, m)
            if q_new * s2 >= alpha:
                out.append((v, s2))
    return out


def _check_frame(g, clique, q, ext, excl, alpha):
    """Debug verification: every cached factor must reproduce the directly
    computed clique probability within REL_TOL, and satisfy the ordering
    and threshold contracts of its set."""
    direct_q = clique_probability(g, clique)
    if abs(q - direct_q) > REL_TOL * direct_q:
        raise InvariantViolation(f"q drift at {clique}: {q} vs {direct_q}")
    mx = clique[-1]
    members = set(clique)
    for u, r in ext:
        if u <= mx:
            raise InvariantViolation(f"extension {u} not above max {mx}")
        direct = clique_probability(g, clique + (u,))
        if abs(q * r - direct) > REL_TOL * direct or q * r < alpha:
            raise InvariantViolation(
                f"extension factor drift at {clique}+{u}: {q * r} vs {direct}")
    for v, s in excl:
        if v >= mx or v in members:
            raise InvariantViolation(f"exclusion {v} out of place for {clique}")
        direct = clique_probability(g, tuple(sorted(members | {v})))
        if abs(q * s - direct) > REL_TOL * direct or q * s < alpha:
            raise InvariantViolation(
                f"exclusion factor drift at {clique}+{v}: {q * s} vs {direct}")


def shared_neighborhood_filter(g: UncertainGraph, t: int) -> UncertainGraph:
    """Remove edges and vertices that cannot sit inside any clique of size
    >= t, iterating to a fixpoint:

      (a) drop every edge {u,v} whose endpoints share fewer than t-2
          neighbors;
      (b) drop every vertex lacking at least t-1 neighbors u with
          |shared(u,v)| >= t-2.

    Vertex removal is realized by deleting the vertex's edges; the vertex
    set (and labelling) is unchanged.  Every alpha-maximal clique of size
    >= t survives intact.
    """
    if t < 2:
        raise ValueError("size threshold must be >= 2 for filtering")
    adj: list[set[int]] = [set(g.neighbors(u)) for u in range(g.n)]
    need = t - 2
    changed = True
    while changed:
        changed = False
        for u in range(g.n):
            for v in [w for w in adj[u] if w > u]:
                if len(adj[u] & adj[v]) < need:
                    adj[u].discard(v)
                    adj[v].discard(u)
                    changed = True
        for v in range(g.n):
            if not adj[v]:
                continue
            strong = sum(1 for u in adj[v] if len(adj[u] & adj[v]) >= need)
            if strong < t - 1:
                for u in adj[v]:
                    adj[u].discard(v)
                adj[v].clear()
                changed = True
    edges = [(u, v, g.edge_prob(u, v))
             for u in range(g.n) for v in adj[u] if u < v]
    return g.replace_edges(edges)


def dfs_noip(g: UncertainGraph, alpha: float, sink: Sink) -> int:
    """Baseline enumerator with no incremental probability bookkeeping.

    Same search-tree shape as mule (vertices added in increasing order),
    but every candidate's clique probability is recomputed from scratch
    and maximality is decided by a full definition-level check.  Emits the
    same clique set as mule; kept as the performance comparison point.
    """
    check_alpha(alpha)
    count = 0

    def visit(c: tuple[int, ...], cand: list[int]) -> None:
        nonlocal count
        mx = c[-1] if c else -1
        kept = []
        for u in cand:
            if u <= mx:
                continue
            q = clique_probability_or_none(g, c + (u,))
            if q is not None and q >= alpha:
                kept.append(u)
        if not kept:
            if c and is_alpha_maximal(g, c, alpha):
                sink(Clique(c, clique_probability(g, c)))
                count += 1
            return
        for v in kept:
            c2 = c + (v,)
            if is_alpha_maximal(g, c2, alpha):
                sink(Clique(c2, clique_probability(g, c2)))
                count += 1
            else:
                adj = g.adj_set(v)
                visit(c2, [w for w in kept if w in adj])

    visit((), list(range(g.n)))
    return count
