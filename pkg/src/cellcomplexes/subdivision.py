"""Stellar and barycentric subdivision with chain maps between them.

Subdividing at a cell ``x`` removes every cell above ``x`` and cones the
rest of the star off a new vertex: one cone ``C(x;y)`` per cell ``y`` of
the star outside the up-set of ``x``, plus the vertex ``C(x;0)``.  Cone
orientations are transported from the base cell, never recomputed, so the
incidence signs of a cone satisfy ``s(C(x;y), y) = 1`` and
``s(C(x;y), C(x;z)) = -s(y, z)``.

The barycentric subdivision is the complex of non-empty chains; it equals
the tower of stellar subdivisions at all cells in decreasing rank order,
and both constructions here label a chain ``v0 < v1 < ... < vr`` by the
same nested cone ``C(v1; C(v2; ... C(vr; v0)))`` (base ``0`` when the
chain has no vertex), which realizes the comparison bijection directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import numpy as np

from .cells import CellId, EMPTY
from .chains import ChainComplex, HomologyResult, chain_complex, homology_of
from .complexes import Ccc
from .errors import CccError, UnknownCellError
from .flags import Orientation, SignTable, flags_of, permutation_orientation, _derive_signs


@dataclass(frozen=True)
class StellarResult:
    complex: Ccc
    old_cells: frozenset
    new_cells: dict       # base cell in the cone target (or EMPTY) -> cone id
    origin_complex: Ccc
    origin_cell: CellId


class ChainMap:
    """Degree-preserving integer matrices intertwining two boundary operators."""

    def __init__(self, source: ChainComplex, target: ChainComplex, mats):
        self.source = source
        self.target = target
        self.mats = mats  # per degree: (len(target.bases[d]), len(source.bases[d]))

    def matrix(self, d: int) -> np.ndarray:
        if 0 <= d < len(self.mats):
            return self.mats[d]
        return np.zeros((0, 0), dtype=np.int64)

    def apply(self, chain):
        d = chain.degree
        vec = self.matrix(d) @ self.source.vector(chain)
        return self.target.from_vector(vec, d)

    def is_chain_map(self) -> bool:
        """Does target-boundary compose with this as this composes with source-boundary?"""
        for d in range(1, max(self.source.dim, self.target.dim) + 1):
            left = self.target.boundary_matrix(d) @ self.matrix(d)
            right = self.matrix(d - 1) @ self.source.boundary_matrix(d)
            if left.shape != right.shape or not np.array_equal(left, right):
                return False
        return True

    def then(self, nxt: "ChainMap") -> "ChainMap":
        if self.target.bases != nxt.source.bases:
            raise ValueError("chain maps do not compose: bases differ")
        mats = [nxt.matrix(d) @ self.matrix(d)
                for d in range(len(self.mats))]
        return ChainMap(self.source, nxt.target, mats)


def identity_chain_map(cc: ChainComplex) -> ChainMap:
    mats = [np.eye(len(b), dtype=np.int64) for b in cc.bases]
    return ChainMap(cc, cc, mats)


# -- stellar subdivision ----------------------------------------------------


def stellar(s: Ccc, x: CellId, signs: SignTable):
    """Subdivide at ``x`` (rank >= 1) and transport orientations.

    Returns the :class:`StellarResult` and the sign table of the new
    complex.  Old cells keep their orientations; the cone over ``y`` is
    oriented by pulling each of its flags back to a flag of ``y``'s
    closure with the parity of its cone prefix.
    """
    if x not in s:
        raise UnknownCellError(f"cell {x} is not in the complex")
    if s.rank(x) == 0:
        raise ValueError(f"stellar subdivision at the vertex {x} is not supported")
    up = s.up_set(x)
    base_cells = s.closure(up) - up  # closed: the cone bases
    cone = {y: CellId.cone(x, y) for y in base_cells}
    cone[EMPTY] = CellId.cone(x, EMPTY)
    for c in cone.values():
        if c in s:
            raise CccError(f"cone label {c} collides with an existing cell")

    ranks = {}
    strictly_below = {}
    old = [z for z in s.cells if z not in up]
    for z in old:
        ranks[z] = s.rank(z)
        strictly_below[z] = [w for w in s.closure([z]) if w != z]
    ranks[cone[EMPTY]] = 0
    strictly_below[cone[EMPTY]] = []
    for y in base_cells:
        c = cone[y]
        ranks[c] = s.rank(y) + 1
        cl = s.closure([y])
        strictly_below[c] = (list(cl)
                             + [cone[z] for z in cl if z != y]
                             + [cone[EMPTY]])
    out = Ccc(ranks, strictly_below)

    orientations = {z: signs.orientations[z] for z in old}
    orientations[cone[EMPTY]] = Orientation({(cone[EMPTY],): 1})
    for y in sorted(base_cells, key=lambda c: (s.rank(c), c._key)):
        orientations[cone[y]] = _cone_orientation(out, cone[y], signs.orientations[y])
    new_signs = SignTable(out, orientations, _derive_signs(out, orientations))

    result = StellarResult(
        complex=out,
        old_cells=frozenset(old),
        new_cells=dict(cone),
        origin_complex=s,
        origin_cell=x,
    )
    return result, new_signs


def _cone_orientation(sx: Ccc, cone_id: CellId, base_orientation: Orientation) -> Orientation:
    """Flags of a cone start with a cone prefix and continue in the base's
    closure; the color is the base flag's color times the prefix parity."""
    colors = {}
    for flag in flags_of(sx, cone_id):
        prefix = 0
        while prefix < len(flag) and flag[prefix].is_cone and \
                flag[prefix].apex == cone_id.apex:
            prefix += 1
        tail = flag[prefix:]
        bases = [c.base for c in flag[:prefix]]
        if bases and bases[-1] is EMPTY:
            bases = bases[:-1]
            assert not tail
        else:
            assert tail and tail[0] == bases[-1]
            tail = tail[1:]
        pulled = tuple(bases) + tail
        colors[flag] = (-1) ** (prefix - 1) * base_orientation.sign(pulled)
    return Orientation(colors)


def stellar_sequence(s: Ccc, points: Iterable[CellId], signs: SignTable):
    """Fold stellar subdivision over ``points``; each must be alive in turn.

    When the up-sets of the points are pairwise disjoint the result does
    not depend on the order.
    """
    cur, cur_signs = s, signs
    for x in points:
        res, cur_signs = stellar(cur, x, cur_signs)
        cur = res.complex
    return cur, cur_signs


def phi(s: Ccc, x: CellId, signs: SignTable) -> ChainMap:
    """The subdivision chain map: identity off the up-set of ``x``, cone
    expansion on it."""
    res, new_signs = stellar(s, x, signs)
    src = chain_complex(s, signs)
    tgt = chain_complex(res.complex, new_signs)
    return ChainMap(src, tgt, _phi_matrices(s, signs, res, src, tgt))


def _phi_matrices(s: Ccc, signs: SignTable, res: StellarResult,
                  src: ChainComplex, tgt: ChainComplex):
    up = s.up_set(res.origin_cell)
    mats = []
    for d in range(s.dim + 1):
        m = np.zeros((len(tgt.bases[d]), len(src.bases[d])), dtype=np.int64)
        for j, w in enumerate(src.bases[d]):
            if w not in up:
                m[tgt.index[d][w], j] = 1
            else:
                for y in s.faces(w):
                    if y in up:
                        continue
                    m[tgt.index[d][res.new_cells[y]], j] = signs.s(w, y)
        mats.append(m)
    return mats


# -- barycentric subdivision ------------------------------------------------


def cell_of_chain(s: Ccc, chain) -> CellId:
    """Label of the barycentric cell of an ascending chain of cells of ``s``:
    nested cones around the chain's vertex, or around the empty base when
    the chain has no rank-zero member."""
    if not chain:
        raise ValueError("empty chain")
    if s.rank(chain[0]) == 0:
        cur, apexes = chain[0], chain[1:]
    else:
        cur, apexes = EMPTY, chain
    for a in reversed(apexes):
        cur = CellId.cone(a, cur)
    return cur


def chain_of_cell(s: Ccc, cid: CellId):
    """The ascending chain of cells of ``s`` a subdivision label stands for.

    Inverse of the labelling used by :func:`barycentric` and by the
    stellar tower; peeling stops at cells of ``s`` so nested labels inside
    ``s`` itself are never split.
    """
    apexes = []
    cur = cid
    while isinstance(cur, CellId) and cur.is_cone and cur not in s:
        apexes.append(cur.apex)
        cur = cur.base
    if cur is EMPTY:
        chain = tuple(apexes)
    else:
        if cur not in s:
            raise UnknownCellError(f"label {cid} does not decode over this complex")
        chain = (cur,) + tuple(apexes)
    for a, b in zip(chain, chain[1:]):
        if not s.lt(a, b):
            raise CccError(f"label {cid} does not decode to a chain")
    return chain


def barycentric(s: Ccc):
    """The complex of non-empty chains, with alternating-sign orientations.

    Cells are chains ordered by inclusion, rank is length minus one, and
    each chain is oriented through removal permutations taken from the
    rank order of its members, so removing the i-th largest member of a
    chain carries sign (-1)^i.
    """
    chains_by_top: dict = {c: [] for c in s.cells}
    for c in s.cells:  # ascending rank order
        mine = [(c,)]
        for b in s.closure([c]):
            if b != c:
                mine.extend(ch + (c,) for ch in chains_by_top[b])
        chains_by_top[c] = mine
    all_chains = [ch for per in chains_by_top.values() for ch in per]

    label = {ch: cell_of_chain(s, ch) for ch in all_chains}
    ranks = {label[ch]: len(ch) - 1 for ch in all_chains}
    if len(ranks) != len(all_chains):
        raise CccError("chain labels collide; complex already uses them")
    strictly_below = {}
    for ch in all_chains:
        subs = []
        for k in range(1, len(ch)):
            subs.extend(label[sub] for sub in combinations(ch, k))
        strictly_below[label[ch]] = subs
    out = Ccc(ranks, strictly_below)

    members = lambda cid: tuple(sorted(chain_of_cell(s, cid),
                                       key=lambda c: s.rank(c), reverse=True))
    orientations = {}
    for c in out.cells:
        if out.rank(c) == 0:
            orientations[c] = Orientation({(c,): 1})
        else:
            orientations[c] = permutation_orientation(out, c, members)
    return out, SignTable(out, orientations, _derive_signs(out, orientations))


def big_phi(s: Ccc, signs: SignTable, target=None) -> ChainMap:
    """Chain map into the barycentric subdivision: a cell goes to the
    signed sum of its flags, weighted by its chosen orientation."""
    if target is None:
        target = barycentric(s)
    bcc, bsigns = target
    src = chain_complex(s, signs)
    tgt = chain_complex(bcc, bsigns)
    mats = []
    for d in range(s.dim + 1):
        m = np.zeros((len(tgt.bases[d]), len(src.bases[d])), dtype=np.int64)
        for j, x in enumerate(src.bases[d]):
            for flag in flags_of(s, x):
                lbl = cell_of_chain(s, tuple(reversed(flag)))
                m[tgt.index[d][lbl], j] = signs.orientations[x].sign(flag)
        mats.append(m)
    return ChainMap(src, tgt, mats)


@dataclass
class TowerStage:
    rank: int
    points: tuple       # the cells subdivided at during this stage
    complex: Ccc
    signs: SignTable
    step_map: ChainMap  # from the previous stage's complex


@dataclass
class BaryTower:
    source: Ccc
    stages: list
    final: Ccc
    final_signs: SignTable
    phi_total: ChainMap
    iso: dict  # final cell -> ascending chain in the source


def barycentric_via_stellar(s: Ccc, signs: SignTable) -> BaryTower:
    """Subdivide at every cell of rank >= 1 in decreasing rank order.

    Before each stage the up-sets of that stage's subdivision points are
    checked to be pairwise disjoint, which makes the within-stage order
    immaterial; every point must still be alive when its stage arrives.
    The final complex carries the chain labels of the barycentric
    subdivision, and :func:`compare_phi_bigphi` checks that it equals it.
    """
    cur, cur_signs = s, signs
    total = identity_chain_map(chain_complex(s, signs))
    stages = []
    for r in range(s.dim, 0, -1):
        points = list(s.cells_of_rank(r))
        for t in points:
            if t not in cur:
                raise CccError(f"subdivision point {t} died before its stage")
        for a, b in combinations(points, 2):
            if cur.up_set(a) & cur.up_set(b):
                raise CccError(
                    f"up-sets of {a} and {b} intersect before stage {r}")
        stage_map = None
        for t in points:
            src = chain_complex(cur, cur_signs)
            res, nxt_signs = stellar(cur, t, cur_signs)
            tgt = chain_complex(res.complex, nxt_signs)
            step = ChainMap(src, tgt, _phi_matrices(cur, cur_signs, res, src, tgt))
            stage_map = step if stage_map is None else stage_map.then(step)
            cur, cur_signs = res.complex, nxt_signs
        stages.append(TowerStage(rank=r, points=tuple(points), complex=cur,
                                 signs=cur_signs, step_map=stage_map))
        if stage_map is not None:
            total = total.then(stage_map)
    iso = {c: chain_of_cell(s, c) for c in cur.cells}
    return BaryTower(source=s, stages=stages, final=cur,
                     final_signs=cur_signs, phi_total=total, iso=iso)


def compare_phi_bigphi(s: Ccc, signs: SignTable):
    """Per-degree sign relating the tower composite to the flag-sum map.

    Both maps land in the same chain groups (the tower reproduces the
    barycentric labels); they agree degree by degree up to one global
    sign, which this returns.  Raises if no uniform sign exists.
    """
    tower = barycentric_via_stellar(s, signs)
    bcc, bsigns = barycentric(s)
    if tower.final != bcc:
        raise CccError("stellar tower does not reproduce the barycentric complex")
    flag_map = big_phi(s, signs, target=(bcc, bsigns))
    eps = []
    for d in range(s.dim + 1):
        a = flag_map.matrix(d)
        b = tower.phi_total.matrix(d)
        nz = np.argwhere(b != 0)
        if nz.size == 0:
            if a.any():
                raise CccError(f"maps differ in degree {d}")
            eps.append(1)
            continue
        i, j = nz[0]
        e = int(a[i, j]) // int(b[i, j]) if b[i, j] else 0
        if e not in (1, -1) or not np.array_equal(a, e * b):
            raise CccError(f"no uniform sign relates the maps in degree {d}")
        eps.append(e)
    return eps


@dataclass(frozen=True)
class InvarianceReport:
    cell: CellId
    before: HomologyResult
    after: HomologyResult
    chain_map_ok: bool

    @property
    def passed(self) -> bool:
        return self.before == self.after and self.chain_map_ok


def verify_subdivision_invariance(s: Ccc, x: CellId, signs: SignTable) -> InvarianceReport:
    """Check that subdividing at ``x`` preserves homology degree by degree
    and that the subdivision chain map commutes with the boundaries."""
    f = phi(s, x, signs)
    before = homology_of(f.source)
    after = homology_of(f.target)
    return InvarianceReport(cell=x, before=before, after=after,
                            chain_map_ok=f.is_chain_map())
