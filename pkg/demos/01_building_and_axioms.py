"""Build cell complexes three ways and check the axioms.

A combinatorial cell complex is a finite ranked poset whose cells glue
like convex polyhedra.  Four axioms make that precise; `validate_axioms`
checks all of them and reports witnesses when they fail.
"""

from cellcomplexes import CellId, build_complex, from_simplicial, product
from cellcomplexes import fixtures

C = CellId.of

# 1. From covering pairs: two triangles sharing an edge.
cells = [(C(v), 0) for v in "abcd"]
cells += [(C(e), 1) for e in ("ab", "ac", "bc", "bd", "cd")]
cells += [(C("abc"), 2), (C("bcd"), 2)]
covers = [(C(v), C(e)) for e in ("ab", "ac", "bc", "bd", "cd") for v in e]
covers += [(C(e), C("abc")) for e in ("ab", "ac", "bc")]
covers += [(C(e), C("bcd")) for e in ("bc", "bd", "cd")]
s = build_complex(cells, covers)
print(f"two triangles: {len(s)} cells, dimension {s.dim}")
print("axioms:", "pass" if s.validate_axioms().passed else "fail")

# The shared edge is the greatest lower bound of the two triangles.
print("meet of the triangles:", s.meet([C("abc"), C("bcd")]))
print("join of b and c:", s.join([C("b"), C("c")]))

# 2. From an abstract simplicial complex (auto-closed under subsets).
sphere = from_simplicial([("a", "b", "c"), ("a", "b", "d"),
                          ("a", "c", "d"), ("b", "c", "d")])
print(f"\nboundary of a tetrahedron: {len(sphere)} cells,",
      "manifold-like" if sphere.classify().manifold_like else "has boundary")

# 3. As a product: an edge times an edge is a square.
sq = product(fixtures.edge(), fixtures.edge())
print(f"edge x edge: face vector",
      tuple(len(sq.cells_of_rank(r)) for r in range(3)))

# Stars and closures are the basic order-theoretic queries.
t = fixtures.torus9()
st = t.star(C("h00"))
print(f"\nstar of an edge in the torus: {len(st)} cells "
      f"({len(st.cells_of_rank(2))} squares, {len(st.cells_of_rank(1))} edges, "
      f"{len(st.cells_of_rank(0))} vertices)")
print(f"its base (the part the subdivision cones over): "
      f"{len(t.open_star(C('h00')))} cells")

# When an axiom fails, the report names it and the offending cells.
bad = fixtures.bad_axiom4()
report = bad.validate_axioms()
print("\nbroken complex:")
for v in report.violations:
    print(f"  axiom {v.axiom}: {v.message}")
