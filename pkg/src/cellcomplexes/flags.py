"""Flags, flag graphs, orientability, and incidence signs.

A flag below a cell ``x`` is a maximal descending chain of cells in the
closure of ``x``, one cell per rank, represented as a tuple starting at
``x``.  Flags of an equidimensional complex are the flags below its top
cells.  Two flags are adjacent when they differ in exactly one entry; an
orientation is a 2-coloring of a connected flag graph with adjacent flags
opposite, so it exists exactly when the graph is connected and bipartite.

For an oriented cell ``x`` and an oriented face ``y`` the incidence sign
``s(x, y)`` compares the color of any flag through both against the color
of its truncation; connectivity of the face's flag graph makes the value
independent of the chosen flag.  These signs are the entries of the
boundary matrices built in :mod:`cellcomplexes.chains`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

from .cells import CellId
from .complexes import Ccc, simplex_vertices
from .errors import (
    CccError,
    MissingSignError,
    NotEquidimensionalError,
    NotOrientableError,
    SimplicialStructureError,
)

Flag = tuple  # of CellId, strictly descending by one rank per step


def flags_of(s: Ccc, x: CellId) -> list:
    """All flags below ``x``, each of length ``rank(x) + 1``."""
    r = s.rank(x)
    out = []
    stack = [(x,)]
    while stack:
        chain = stack.pop()
        fs = s.faces(chain[-1])
        if not fs:
            if s.rank(chain[-1]) != 0:
                raise CccError(f"cell {chain[-1]} of positive rank has no faces")
            out.append(chain)
        else:
            for f in fs:
                stack.append(chain + (f,))
    assert all(len(f) == r + 1 for f in out)
    return sorted(out)


def _require_equidimensional(s: Ccc):
    if any(s.rank(c) != s.dim for c in s.maximal_cells()):
        raise NotEquidimensionalError(
            "flags of the whole complex need all maximal cells at top rank")


def all_flags(s: Ccc) -> list:
    _require_equidimensional(s)
    out = []
    for top in s.cells_of_rank(s.dim):
        out.extend(flags_of(s, top))
    return sorted(out)


@dataclass(frozen=True)
class FlagGraph:
    flags: tuple
    neighbors: Mapping  # Flag -> tuple of adjacent flags

    @property
    def edge_count(self) -> int:
        return sum(len(v) for v in self.neighbors.values()) // 2


def _adjacency(flags: Iterable[Flag]) -> dict:
    buckets: dict = {}
    for f in flags:
        for pos in range(len(f)):
            buckets.setdefault((pos, f[:pos] + f[pos + 1:]), []).append(f)
    nbrs: dict = {f: [] for f in flags}
    for group in buckets.values():
        for i, a in enumerate(group):
            for b in group[i + 1:]:
                nbrs[a].append(b)
                nbrs[b].append(a)
    return {f: tuple(sorted(v)) for f, v in nbrs.items()}


def flag_graph(s: Ccc) -> FlagGraph:
    """Adjacency graph over all flags of an equidimensional complex."""
    fl = all_flags(s)
    return FlagGraph(tuple(fl), _adjacency(fl))


def _closure_flag_graph(s: Ccc, x: CellId) -> FlagGraph:
    fl = flags_of(s, x)
    return FlagGraph(tuple(fl), _adjacency(fl))


def _two_color(graph: FlagGraph):
    """2-color the graph.  Returns (colors, odd_cycle, component_count);
    colors is None when an odd cycle exists."""
    colors: dict = {}
    parent: dict = {}
    depth: dict = {}
    components = 0
    for root in graph.flags:
        if root in colors:
            continue
        components += 1
        colors[root] = 1
        parent[root] = None
        depth[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in graph.neighbors[u]:
                if v not in colors:
                    colors[v] = -colors[u]
                    parent[v] = u
                    depth[v] = depth[u] + 1
                    queue.append(v)
                elif colors[v] == colors[u]:
                    return None, _odd_cycle(u, v, parent, depth), components
    return colors, None, components


def _odd_cycle(u, v, parent, depth):
    left, right = u, v
    lpath, rpath = [left], [right]
    while depth[left] > depth[right]:
        left = parent[left]
        lpath.append(left)
    while depth[right] > depth[left]:
        right = parent[right]
        rpath.append(right)
    while left != right:
        left, right = parent[left], parent[right]
        lpath.append(left)
        rpath.append(right)
    # lpath ends at the common ancestor; walk u..ancestor then back down to v
    cycle = lpath + rpath[-2::-1]
    assert len(cycle) % 2 == 1
    return cycle


def is_flag_connected(s: Ccc) -> bool:
    g = flag_graph(s)
    if not g.flags:
        return False
    _, _, components = _two_color(g)
    return components == 1


def odd_flag_cycle(s: Ccc):
    """A closed odd walk in the flag graph, or None if the graph is bipartite."""
    _, cycle, _ = _two_color(flag_graph(s))
    return cycle


def is_orientable(s: Ccc) -> bool:
    colors, cycle, components = _two_color(flag_graph(s))
    return cycle is None and components == 1


@dataclass(frozen=True)
class Orientation:
    """A coloring of flags with adjacent flags opposite."""

    colors: Mapping  # Flag -> +1 / -1

    def sign(self, flag: Flag) -> int:
        return self.colors[flag]

    def flipped(self) -> "Orientation":
        return Orientation({f: -c for f, c in self.colors.items()})

    def __eq__(self, other):
        return isinstance(other, Orientation) and dict(self.colors) == dict(other.colors)


def _color_or_raise(graph: FlagGraph, what: str, cell=None) -> dict:
    colors, cycle, components = _two_color(graph)
    if cycle is not None:
        raise NotOrientableError(f"{what}: flag graph is not bipartite",
                                 odd_cycle=cycle, cell=cell)
    if components != 1:
        raise NotOrientableError(f"{what}: flag graph is disconnected "
                                 f"({components} components)",
                                 components=components, cell=cell)
    return colors


def orient(s: Ccc) -> Orientation:
    """Canonical orientation: the least flag is colored +1.

    Raises NotOrientableError carrying an odd-cycle certificate or a
    component count.
    """
    graph = flag_graph(s)
    if not graph.flags:
        raise NotOrientableError("complex has no flags")
    colors = _color_or_raise(graph, "complex")
    least = graph.flags[0]
    if colors[least] < 0:
        colors = {f: -c for f, c in colors.items()}
    return Orientation(colors)


def orient_cell(s: Ccc, x: CellId) -> Orientation:
    graph = _closure_flag_graph(s, x)
    colors = _color_or_raise(graph, f"cell {x}", cell=x)
    least = graph.flags[0]
    if colors[least] < 0:
        colors = {f: -c for f, c in colors.items()}
    return Orientation(colors)


class SignTable:
    """Chosen per-cell orientations plus all derived incidence signs."""

    __slots__ = ("complex", "orientations", "signs")

    def __init__(self, complex: Ccc, orientations: Mapping, signs: Mapping):
        self.complex = complex
        self.orientations = dict(orientations)
        self.signs = dict(signs)

    def s(self, x: CellId, y: CellId) -> int:
        try:
            return self.signs[(x, y)]
        except KeyError:
            raise MissingSignError(f"no sign for the pair ({x}, {y})") from None

    def orientation(self, x: CellId) -> Orientation:
        return self.orientations[x]

    def flipped(self, cells: Iterable[CellId]) -> "SignTable":
        """Reverse the orientation of the given cells; signs follow suit."""
        flip = set(cells)
        t = lambda c: -1 if c in flip else 1
        orientations = {c: (o.flipped() if c in flip else o)
                        for c, o in self.orientations.items()}
        signs = {(x, y): v * t(x) * t(y) for (x, y), v in self.signs.items()}
        return SignTable(self.complex, orientations, signs)

    def restrict(self, sub: Ccc) -> "SignTable":
        """The table induced on a closed subcomplex."""
        orientations = {c: self.orientations[c] for c in sub.cells}
        signs = {(x, y): v for (x, y), v in self.signs.items()
                 if x in sub and y in sub}
        return SignTable(sub, orientations, signs)


def sign_from_flag(table_x: Orientation, table_y: Orientation, flag: Flag) -> int:
    """s(x, y) computed from one flag through x and its face y."""
    return table_x.sign(flag) * table_y.sign(flag[1:])


def _derive_signs(s: Ccc, orientations: Mapping) -> dict:
    signs = {}
    for x in s.cells:
        if s.rank(x) == 0:
            continue
        for y in s.faces(x):
            tail = min(orientations[y].colors)
            signs[(x, y)] = sign_from_flag(orientations[x], orientations[y],
                                           (x,) + tail)
    return signs


def orient_all_cells(s: Ccc, overrides: Mapping | None = None) -> SignTable:
    """Choose an orientation for every cell and tabulate all signs.

    Each closure gets its canonical orientation (least flag +1, so every
    vertex flag is +1) unless ``overrides`` supplies one, as the duality
    pipeline does for maximal cells.  Fails with the witness cell if some
    closure is not orientable or not flag-connected.
    """
    overrides = overrides or {}
    orientations = {}
    for x in s.cells:
        if x in overrides:
            orientations[x] = overrides[x]
        elif s.rank(x) == 0:
            orientations[x] = Orientation({(x,): 1})
        else:
            orientations[x] = orient_cell(s, x)
    return SignTable(s, orientations, _derive_signs(s, orientations))


# -- simplicial orientations ---------------------------------------------


def _permutation_sign(perm) -> int:
    inv = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inv += 1
    return -1 if inv % 2 else 1


def permutation_orientation(s: Ccc, x: CellId, members_desc: Callable) -> Orientation:
    """Orientation of a simplex-like cell from removal permutations.

    ``members_desc(cell)`` lists the cell's defining elements, largest
    first.  Walking down a flag removes one element per step; the color of
    the flag is the sign of the resulting permutation of positions.  Two
    adjacent flags differ by a transposition, so this is an orientation,
    and it makes dropping the i-th largest element carry sign (-1)^i.
    """
    top = list(members_desc(x))
    pos = {m: i for i, m in enumerate(top)}
    colors = {}
    for flag in flags_of(s, x):
        perm = []
        prev = set(top)
        for cell in flag[1:]:
            cur = set(members_desc(cell))
            (dropped,) = prev - cur
            perm.append(pos[dropped])
            prev = cur
        (last,) = prev
        perm.append(pos[last])
        colors[flag] = _permutation_sign(perm)
    return Orientation(colors)


def simplicial_signs(k: Ccc, vertex_order: Iterable[str] | None = None) -> SignTable:
    """Sign table for a complex built by ``from_simplicial``.

    Vertices are ordered by ``vertex_order`` (default: token order); each
    simplex is oriented by removal permutations, so the boundary of a
    simplex alternates signs starting with +1 at the face that drops the
    largest vertex.
    """
    verts = {}
    for c in k.cells:
        vs = simplex_vertices(c)
        if len(vs) != k.rank(c) + 1 or len(set(vs)) != len(vs):
            raise SimplicialStructureError(f"cell {c} is not a rank-{k.rank(c)} simplex")
        verts[c] = set(vs)
    for x in k.cells:
        for y in k.faces(x):
            if not verts[y] < verts[x]:
                raise SimplicialStructureError(
                    f"face {y} of {x} is not a vertex subset")
    if vertex_order is None:
        key = lambda v: v
    else:
        rank = {str(v): i for i, v in enumerate(vertex_order)}
        key = lambda v: rank[v]
    members = lambda c: sorted(verts[c], key=key, reverse=True)
    orientations = {}
    for x in k.cells:
        if k.rank(x) == 0:
            orientations[x] = Orientation({(x,): 1})
        else:
            orientations[x] = permutation_orientation(k, x, members)
    return SignTable(k, orientations, _derive_signs(k, orientations))
