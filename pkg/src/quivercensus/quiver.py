"""Quiver data model: parsing, presets, structural predicates, bilinear forms.

A quiver here is always loop-free, without multiple arrows (no repeated
underlying edge), and acyclically oriented; those constraints are enforced at
construction time with a distinct error per violation.  Vertices are the
integers 0..n-1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations

Arrow = tuple[int, int]
DimVector = tuple[int, ...]


class QuiverError(ValueError):
    """Base class for invalid quiver input."""


class QuiverParseError(QuiverError):
    """Malformed quiver text."""


class LoopError(QuiverError):
    """An arrow with equal source and target."""


class MultipleArrowError(QuiverError):
    """Two arrows over the same underlying edge."""


class DirectedCycleError(QuiverError):
    """The orientation contains a directed cycle."""


class NotATreeError(QuiverError):
    """Operation defined only for tree quivers."""


class DisconnectedError(QuiverError):
    """Operation requires a connected quiver."""


@dataclass(frozen=True)
class Quiver:
    """Finite acyclic simple quiver on vertices 0..n-1."""

    n: int
    arrows: tuple[Arrow, ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise QuiverError(f"vertex count must be positive, got {self.n}")
        object.__setattr__(self, "arrows", tuple((int(s), int(t)) for s, t in self.arrows))
        seen_edges = set()
        for s, t in self.arrows:
            if not (0 <= s < self.n and 0 <= t < self.n):
                raise QuiverError(f"arrow {s}->{t} out of range for n={self.n}")
            if s == t:
                raise LoopError(f"loop at vertex {s}")
            edge = (min(s, t), max(s, t))
            if edge in seen_edges:
                raise MultipleArrowError(f"multiple arrow on edge {edge[0]}-{edge[1]}")
            seen_edges.add(edge)
        if self._has_directed_cycle():
            raise DirectedCycleError("orientation contains a directed cycle")

    def _has_directed_cycle(self) -> bool:
        # Kahn peeling; with no multiple arrows the arrow list is edge list.
        indeg = [0] * self.n
        out: list[list[int]] = [[] for _ in range(self.n)]
        for s, t in self.arrows:
            indeg[t] += 1
            out[s].append(t)
        stack = [v for v in range(self.n) if indeg[v] == 0]
        removed = 0
        while stack:
            v = stack.pop()
            removed += 1
            for w in out[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    stack.append(w)
        return removed != self.n

    @property
    def arrow_count(self) -> int:
        return len(self.arrows)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Sorted undirected adjacency lists."""
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for s, t in self.arrows:
            adj[s].add(t)
            adj[t].add(s)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.neighbors)

    @cached_property
    def is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in self.neighbors[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    @property
    def is_tree(self) -> bool:
        return self.is_connected and self.arrow_count == self.n - 1

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset((min(s, t), max(s, t)) for s, t in self.arrows)

    def induced(self, vertices) -> tuple["Quiver", dict[int, int]]:
        """Induced subquiver on a vertex subset, plus the old->new index map."""
        verts = sorted(set(vertices))
        if not verts:
            raise QuiverError("induced subquiver needs at least one vertex")
        if verts[0] < 0 or verts[-1] >= self.n:
            raise QuiverError(f"vertex subset {verts} out of range")
        index = {v: i for i, v in enumerate(verts)}
        arrows = tuple(
            (index[s], index[t]) for s, t in self.arrows if s in index and t in index
        )
        return Quiver(len(verts), arrows), index

    def delete_vertex(self, v: int) -> tuple["Quiver", dict[int, int]]:
        """Remove one vertex and its arrows; indices compact, map recorded."""
        if not (0 <= v < self.n):
            raise QuiverError(f"vertex {v} out of range")
        if self.n == 1:
            raise QuiverError("cannot delete the last vertex")
        return self.induced([u for u in range(self.n) if u != v])

    def subset_is_connected(self, vertices) -> bool:
        verts = set(vertices)
        if not verts:
            return False
        start = next(iter(verts))
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in self.neighbors[v]:
                if w in verts and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(verts)

    def subset_induces_tree(self, vertices) -> bool:
        verts = set(vertices)
        edges = sum(1 for s, t in self.arrows if s in verts and t in verts)
        return self.subset_is_connected(verts) and edges == len(verts) - 1

    def label(self) -> str:
        return self.name or f"quiver(n={self.n})"


# ---------------------------------------------------------------------------
# dimension vectors

def height(d: DimVector) -> int:
    return sum(d)


def support(d: DimVector) -> tuple[int, ...]:
    return tuple(i for i, x in enumerate(d) if x > 0)


def is_thin(d: DimVector) -> bool:
    return all(x <= 1 for x in d)


def unit_vector(n: int, i: int) -> DimVector:
    return tuple(1 if j == i else 0 for j in range(n))


def check_dimvector(q: Quiver, d) -> DimVector:
    d = tuple(int(x) for x in d)
    if len(d) != q.n:
        raise QuiverError(f"dimension vector has length {len(d)}, expected {q.n}")
    if any(x < 0 for x in d):
        raise QuiverError(f"dimension vector must be nonnegative, got {d}")
    return d


# ---------------------------------------------------------------------------
# bilinear forms

def euler_form(q: Quiver, d, e) -> int:
    """Hereditary Euler form  <d,e> = sum_i d_i e_i - sum_{a:i->j} d_i e_j."""
    d = check_dimvector(q, d)
    e = check_dimvector(q, e)
    total = sum(di * ei for di, ei in zip(d, e))
    for s, t in q.arrows:
        total -= d[s] * e[t]
    return total


def tits_form(q: Quiver, d) -> int:
    return euler_form(q, d, d)


def symmetric_pairing(q: Quiver, d, i: int) -> int:
    """Symmetrized form against the i-th unit vector: 2 d_i - sum of neighbors."""
    return 2 * d[i] - sum(d[j] for j in q.neighbors[i])


# ---------------------------------------------------------------------------
# parsing

_ARROW_RE = re.compile(r"^(\d+)->(\d+)$")


def parse_quiver(text: str, name: str | None = None) -> Quiver:
    """Parse the text format  "n; s->t s->t ...".

    Raises QuiverParseError on malformed syntax; loop, multiple arrow and
    directed cycle each surface as their own error type.
    """
    head, sep, tail = text.partition(";")
    if not sep:
        raise QuiverParseError("missing ';' after the vertex count")
    head = head.strip()
    if not head.isdigit():
        raise QuiverParseError(f"vertex count must be a nonnegative integer, got {head!r}")
    n = int(head)
    if n < 1:
        raise QuiverParseError("vertex count must be positive")
    arrows = []
    for token in tail.split():
        m = _ARROW_RE.match(token)
        if not m:
            raise QuiverParseError(f"bad arrow token {token!r}, expected 'i->j'")
        arrows.append((int(m.group(1)), int(m.group(2))))
    try:
        return Quiver(n, tuple(arrows), name=name)
    except QuiverParseError:
        raise
    except QuiverError:
        raise


def format_quiver(q: Quiver) -> str:
    return f"{q.n}; " + " ".join(f"{s}->{t}" for s, t in q.arrows)


# ---------------------------------------------------------------------------
# presets

def _path(n: int, name: str) -> Quiver:
    return Quiver(n, tuple((i, i + 1) for i in range(n - 1)), name=name)


def _tpqr(p: int, q: int, r: int, name: str) -> Quiver:
    # Three arms sharing vertex 0; each arm length counts its vertices
    # including the shared one, so the graph has p+q+r-2 vertices.
    arrows: list[Arrow] = []
    nxt = 1
    for arm in (p, q, r):
        prev = 0
        for _ in range(arm - 1):
            arrows.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Quiver(nxt, tuple(arrows), name=name)


def _star(k: int, name: str) -> Quiver:
    return Quiver(k + 1, tuple((0, i) for i in range(1, k + 1)), name=name)


def preset(family: str, *params: int) -> Quiver:
    """Canonical quiver of a named family, arrows oriented away from the
    center (or the left end for paths)."""
    family = family.strip()
    key = family.lower()
    if key == "a":
        (n,) = params
        if n < 1:
            raise QuiverError("A_n needs n >= 1")
        return _path(n, f"A{n}")
    if key == "d":
        (n,) = params
        if n < 4:
            raise QuiverError("D_n needs n >= 4")
        return _tpqr(n - 2, 2, 2, f"D{n}")
    if key == "e":
        (n,) = params
        if n not in (6, 7, 8):
            raise QuiverError("E_n needs n in {6,7,8}")
        return _tpqr(n - 3, 3, 2, f"E{n}")
    if key == "ta":
        (n,) = params
        if n < 2:
            raise QuiverError("affine A_n needs n >= 2 (n=1 would be a double arrow)")
        arrows = tuple((i, i + 1) for i in range(n)) + ((0, n),)
        return Quiver(n + 1, arrows, name=f"tA{n}")
    if key == "td":
        (m,) = params
        if m < 4:
            raise QuiverError("affine D_m needs m >= 4")
        if m == 4:
            return _star(4, "tD4")
        # central path 0..m-4, two pendant leaves at each end
        k = m - 3
        arrows = [(i, i + 1) for i in range(k - 1)]
        arrows += [(0, k), (0, k + 1), (k - 1, k + 2), (k - 1, k + 3)]
        return Quiver(m + 1, tuple(arrows), name=f"tD{m}")
    if key == "te":
        (n,) = params
        if n == 6:
            return _tpqr(3, 3, 3, "tE6")
        if n == 7:
            return _tpqr(4, 4, 2, "tE7")
        if n == 8:
            return _tpqr(6, 3, 2, "tE8")
        raise QuiverError("affine E_n needs n in {6,7,8}")
    if key == "t":
        p, q, r = params
        if not (p >= q >= r >= 2):
            raise QuiverError(f"T_pqr needs p >= q >= r >= 2, got {(p, q, r)}")
        return _tpqr(p, q, r, f"T{p},{q},{r}")
    if key == "star":
        (k,) = params
        if k < 1:
            raise QuiverError("star needs at least one leaf")
        return _star(k, f"star{k}")
    raise QuiverError(f"unknown preset family {family!r}")


_PRESET_NAME_RE = re.compile(
    r"^(?:(A|D|E|tA|tD|tE)(\d+)|T(\d+),(\d+),(\d+)|star(\d+))$"
)


def preset_from_name(name: str) -> Quiver:
    """Resolve a CLI-style preset name such as A5, tD4, E7 or T6,3,2."""
    m = _PRESET_NAME_RE.match(name.strip())
    if not m:
        raise QuiverError(f"unknown preset name {name!r}")
    if m.group(1):
        return preset(m.group(1), int(m.group(2)))
    if m.group(3):
        return preset("T", int(m.group(3)), int(m.group(4)), int(m.group(5)))
    return preset("star", int(m.group(6)))


# ---------------------------------------------------------------------------
# subquiver enumeration

@lru_cache(maxsize=None)
def connected_subquivers(q: Quiver, t: int) -> tuple[tuple[int, ...], ...]:
    """All size-t vertex subsets inducing a connected subquiver, sorted."""
    if not (1 <= t <= q.n):
        raise QuiverError(f"subquiver size {t} out of range 1..{q.n}")
    frontier = {frozenset((v,)) for v in range(q.n)}
    seen = set(frontier)
    for _ in range(t - 1):
        nxt = set()
        for s in frontier:
            for v in s:
                for w in q.neighbors[v]:
                    if w not in s:
                        grown = s | {w}
                        if grown not in seen:
                            seen.add(grown)
                            nxt.add(grown)
        frontier = nxt
    return tuple(sorted(tuple(sorted(s)) for s in frontier))


@dataclass(frozen=True)
class ArmProfile:
    """Arms of a tree with a unique branching vertex; lengths count vertices
    including the center, so three arms (p,q,r) give p+q+r-2 vertices."""

    center: int
    arms: tuple[int, ...]

    @property
    def is_three_armed(self) -> bool:
        return len(self.arms) == 3


def arm_profile(q: Quiver) -> ArmProfile | None:
    """Profile of the unique degree->=3 vertex, or None if there is not
    exactly one."""
    if not q.is_tree:
        raise NotATreeError("arm profile is defined for tree quivers only")
    branch = [v for v in range(q.n) if q.degrees[v] >= 3]
    if len(branch) != 1:
        return None
    center = branch[0]
    arms = []
    for first in q.neighbors[center]:
        length = 2  # center plus the first arm vertex
        prev, cur = center, first
        while True:
            nxt = [w for w in q.neighbors[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    return ArmProfile(center, tuple(sorted(arms, reverse=True)))


def compositions(total: int, parts: int):
    """Ordered tuples of `parts` positive integers summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for cuts in combinations(range(1, total), parts - 1):
        prev = 0
        out = []
        for c in cuts:
            out.append(c - prev)
            prev = c
        out.append(total - prev)
        yield tuple(out)
