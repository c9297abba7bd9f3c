"""ADE / affine classification of the underlying graph of a quiver.

Recognition is purely structural (degree sequence plus arm lengths).  A graph
that is neither a Dynkin nor a Euclidean diagram always properly contains a
Euclidean one; classify_graph reports a smallest such vertex subset as the
witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .quiver import DisconnectedError, Quiver

DYNKIN = "dynkin"
EUCLIDEAN = "euclidean"
BEYOND = "beyond"


@dataclass(frozen=True)
class GraphClass:
    kind: str  # DYNKIN | EUCLIDEAN | BEYOND
    family: str | None  # "A" | "D" | "E" for the (affine) diagram, None for BEYOND
    rank: int | None
    witness: tuple[int, ...] | None = None  # vertex subset inducing a Euclidean diagram

    def label(self) -> str:
        if self.kind == DYNKIN:
            return f"{self.family}{self.rank}"
        if self.kind == EUCLIDEAN:
            return f"t{self.family}{self.rank}"
        return "beyond"

    @property
    def representation_finite(self) -> bool:
        return self.kind == DYNKIN


def _bfs_path(q: Quiver, src: int, dst: int) -> list[int]:
    prev = {src: src}
    queue = [src]
    while queue:
        v = queue.pop(0)
        if v == dst:
            break
        for w in q.neighbors[v]:
            if w not in prev:
                prev[w] = v
                queue.append(w)
    path = [dst]
    while path[-1] != src:
        path.append(prev[path[-1]])
    return path[::-1]


def _shortest_cycle(q: Quiver) -> tuple[int, ...]:
    # BFS from every vertex; the shortest cycle through the root is found when
    # two BFS branches meet.  Shortest cycles are chordless, so the vertex set
    # induces a plain cycle.
    best: list[int] | None = None
    for root in range(q.n):
        parent = {root: -1}
        depth = {root: 0}
        queue = [root]
        while queue:
            v = queue.pop(0)
            for w in q.neighbors[v]:
                if w == parent[v]:
                    continue
                if w in depth:
                    # walk both branches up to the root to extract the cycle
                    pa, pb = [v], [w]
                    while pa[-1] != root:
                        pa.append(parent[pa[-1]])
                    while pb[-1] != root:
                        pb.append(parent[pb[-1]])
                    cyc = set(pa) | set(pb)
                    if best is None or len(cyc) < len(best):
                        best = sorted(cyc)
                else:
                    depth[w] = depth[v] + 1
                    parent[w] = v
                    queue.append(w)
    assert best is not None
    return tuple(best)


def _branch_arms_edges(q: Quiver, center: int) -> list[int]:
    """Edge lengths of the paths hanging off `center` in a tree."""
    arms = []
    for first in q.neighbors[center]:
        length = 1
        prev, cur = center, first
        while True:
            nxt = [w for w in q.neighbors[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    return sorted(arms, reverse=True)


def _arm_vertices(q: Quiver, center: int, first: int, count: int) -> list[int]:
    """First `count` vertices along the arm starting center->first."""
    out = [first]
    prev, cur = center, first
    while len(out) < count:
        nxt = [w for w in q.neighbors[cur] if w != prev]
        prev, cur = cur, nxt[0]
        out.append(cur)
    return out


def _three_arm_class(q: Quiver, center: int) -> GraphClass:
    arms = _branch_arms_edges(q, center)
    a, b, c = arms
    nbrs = q.neighbors[center]
    by_len = sorted(nbrs, key=lambda f: (-len(_arm_vertices(q, center, f, q.n)), f))
    # vertices of the three arms, longest first, for witness assembly
    arm_paths = []
    remaining = list(nbrs)
    for want in arms:
        pick = None
        for f in remaining:
            walk = [f]
            prev, cur = center, f
            while True:
                nxt = [w for w in q.neighbors[cur] if w != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                walk.append(cur)
            if len(walk) == want and pick is None:
                pick = (f, walk)
        remaining.remove(pick[0])
        arm_paths.append(pick[1])

    def witness(i: int, j: int, k: int) -> tuple[int, ...]:
        verts = {center}
        verts.update(arm_paths[0][:i])
        verts.update(arm_paths[1][:j])
        verts.update(arm_paths[2][:k])
        return tuple(sorted(verts))

    if c == 1:
        if b == 1:
            return GraphClass(DYNKIN, "D", q.n)
        if b == 2:
            if a == 2:
                return GraphClass(DYNKIN, "E", 6)
            if a == 3:
                return GraphClass(DYNKIN, "E", 7)
            if a == 4:
                return GraphClass(DYNKIN, "E", 8)
            if a == 5:
                return GraphClass(EUCLIDEAN, "E", 8, tuple(range(q.n)))
            return GraphClass(BEYOND, None, None, witness(5, 2, 1))
        # b >= 3
        if a == 3 and b == 3:
            return GraphClass(EUCLIDEAN, "E", 7, tuple(range(q.n)))
        return GraphClass(BEYOND, None, None, witness(3, 3, 1))
    # c >= 2
    if (a, b, c) == (2, 2, 2):
        return GraphClass(EUCLIDEAN, "E", 6, tuple(range(q.n)))
    return GraphClass(BEYOND, None, None, witness(2, 2, 2))


@lru_cache(maxsize=None)
def classify_graph(q: Quiver) -> GraphClass:
    """Exact Dynkin/Euclidean recognition of the underlying graph, or a
    minimal Euclidean witness subset when the graph lies beyond both."""
    if not q.is_connected:
        raise DisconnectedError("classification requires a connected quiver")
    n, m = q.n, q.arrow_count
    if m >= n:
        cycle = _shortest_cycle(q)
        if m == n and len(cycle) == n:
            return GraphClass(EUCLIDEAN, "A", n - 1, tuple(range(n)))
        return GraphClass(BEYOND, None, None, cycle)

    # tree
    branch = [v for v in range(n) if q.degrees[v] >= 3]
    if not branch:
        return GraphClass(DYNKIN, "A", n)

    big = [v for v in branch if q.degrees[v] >= 4]
    if big:
        v = big[0]
        if n == 5 and q.degrees[v] == 4:
            return GraphClass(EUCLIDEAN, "D", 4, tuple(range(n)))
        return GraphClass(BEYOND, None, None, tuple(sorted((v, *q.neighbors[v][:4]))))

    if len(branch) == 1:
        return _three_arm_class(q, branch[0])

    # at least two degree-3 vertices: affine D shape or beyond it
    pairs = sorted(
        ((len(_bfs_path(q, u, v)), u, v) for i, u in enumerate(branch) for v in branch[i + 1:]),
    )
    plen, u, v = pairs[0]
    path = _bfs_path(q, u, v)
    on_path = set(path)
    u_extra = [w for w in q.neighbors[u] if w not in on_path][:2]
    v_extra = [w for w in q.neighbors[v] if w not in on_path][:2]
    witness = tuple(sorted(set(path) | set(u_extra) | set(v_extra)))
    if len(branch) == 2 and len(witness) == n:
        return GraphClass(EUCLIDEAN, "D", n - 1, tuple(range(n)))
    return GraphClass(BEYOND, None, None, witness)


def is_representation_finite(q: Quiver) -> bool:
    """Finitely many indecomposables iff the underlying graph is Dynkin."""
    return classify_graph(q).kind == DYNKIN
