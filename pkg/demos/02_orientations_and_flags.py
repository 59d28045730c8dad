"""Flags, the adjacency graph, and orientability.

A flag is a maximal descending chain of cells, one per rank.  Two flags
are adjacent when they differ in a single entry, and a complex is
orientable exactly when this graph is connected and bipartite.  The
torus passes; the Mobius band fails with an odd cycle as certificate.
"""

from cellcomplexes import (
    NotOrientableError,
    flag_graph,
    flags_of,
    orient,
    orient_all_cells,
)
from cellcomplexes import fixtures
from cellcomplexes.cells import CellId

C = CellId.of

t = fixtures.torus9()
g = flag_graph(t)
print(f"torus: {len(g.flags)} flags, {g.edge_count} adjacencies, "
      f"{len(g.neighbors[g.flags[0]])} per flag")

omega = orient(t)
plus = sum(1 for f in g.flags if omega.sign(f) == 1)
print(f"orientation found: {plus} flags colored +1, {len(g.flags) - plus} colored -1")

m = fixtures.mobius3()
try:
    orient(m)
except NotOrientableError as err:
    print(f"\nmobius band: not orientable; odd cycle of {len(err.odd_cycle)} flags:")
    for f in err.odd_cycle[:3]:
        print("   ", ">".join(str(c) for c in f))
    print("    ...")

# Per-cell orientations give incidence signs s(x, y), the boundary
# matrix entries.  The two vertices of an edge always get opposite signs.
table = orient_all_cells(t)
e = C("h00")
a, b = t.faces(e)
print(f"\nsigns on the edge {e}: s({e},{a}) = {table.s(e, a):+d}, "
      f"s({e},{b}) = {table.s(e, b):+d}")

# Around every codimension-2 interval the four signs cancel in pairs;
# this is what makes the boundary square to zero.
f, z = C("f00"), C("v00")
mids = [y for y in t.faces(f) if t.lt(z, y)]
yp, ym = mids
lhs = table.s(f, yp) * table.s(yp, z) + table.s(f, ym) * table.s(ym, z)
print(f"sign cancellation around ({z}, {f}): "
      f"{table.s(f, yp):+d}*{table.s(yp, z):+d} + "
      f"{table.s(f, ym):+d}*{table.s(ym, z):+d} = {lhs}")

# Every cell of a square has eight flags below it.
print(f"\nflags below one square: {len(flags_of(t, f))}")
