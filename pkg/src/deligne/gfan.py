"""
g-vector model of chambers.

The g-matrix of a chamber lists its labeled rays, row ``i`` being the ray
labeled ``i``, written in the coordinate system in which the base chamber's
labeled rays are the standard basis. In that system the base chamber is the
positive orthant and each row plays the role of the g-vector of the i-th
summand of a two-term tilting complex; crossing wall ``i`` (mutation at
``i``) replaces row ``i`` only.

No complexes of projectives are computed. Rays stand in for g-vectors, so
every check here is an exact statement about cones.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from . import exact, paths
from .arrangement import Arrangement, Vector, parse_arrangement
from .errors import (
    AtomClassSplit,
    ConeNotChamber,
    NotSimplicial,
    OverlappingCones,
    RankDeficient,
)
from .skeleton import SkeletonGraph


@dataclass(frozen=True)
class GMatrix:
    base: int
    chamber: int
    rows: tuple[Vector, ...]

    def to_json(self) -> dict:
        return {"base": self.base, "chamber": self.chamber, "rows": [list(r) for r in self.rows]}


def to_base_coordinates(sk: SkeletonGraph, vec: Sequence[int]) -> Vector:
    """Primitive coordinates of a ray in the basis of the base chamber's labeled rays."""
    basis = sk.rays[sk.base]
    transpose = [[basis[j][i] for j in range(len(basis))] for i in range(len(basis))]
    return exact.primitive(exact.solve(transpose, vec))


def normal_to_base_coordinates(sk: SkeletonGraph, normal: Sequence[int]) -> Vector:
    """Canonical normal of a hyperplane after the same change of coordinates."""
    basis = sk.rays[sk.base]
    return exact.canonical([exact.dot(b, normal) for b in basis])


def g_matrix(sk: SkeletonGraph, chamber) -> GMatrix:
    c = sk.chamber(chamber)
    rows = tuple(to_base_coordinates(sk, r) for r in sk.rays[c.id])
    return GMatrix(sk.base, c.id, rows)


def mutate_g(sk: SkeletonGraph, g: GMatrix, i: int) -> GMatrix:
    target = sk.cross(g.chamber, i).target
    out = g_matrix(sk, target)
    for j, (old, new) in enumerate(zip(g.rows, out.rows), start=1):
        if j != i and old != new:
            raise AssertionError(f"mutation at {i} changed row {j}")
    return out


@dataclass(frozen=True)
class Reconstruction:
    arrangement: Arrangement
    matching: tuple[int, ...]  # chamber id for each input matrix
    unmatched: tuple[int, ...]

    @property
    def complete(self) -> bool:
        return not self.unmatched


def _interior_inequalities(rows: Sequence[Vector]) -> list[Vector]:
    # x = sum(l_i * row_i) with all l_i > 0  <=>  D x > 0 for D = inverse of rows^T
    n = len(rows)
    transpose = [[rows[j][i] for j in range(n)] for i in range(n)]
    cols = [exact.solve(transpose, [int(k == i) for k in range(n)]) for i in range(n)]
    # column i of the inverse; the inequality rows are the rows of the inverse
    return [exact.primitive([cols[k][i] for k in range(n)]) for i in range(n)]


def arrangement_from_g_matrices(dim: int, matrices: Sequence[Sequence[Sequence[int]]]) -> Reconstruction:
    """
    Rebuild the arrangement whose chambers are the given simplicial cones.

    Hyperplanes are the spans of all facets (each set of n-1 rows). The cones
    must have pairwise disjoint interiors and each must be exactly one
    chamber of the rebuilt arrangement.
    """
    cones: list[tuple[Vector, ...]] = []
    for m in matrices:
        rows = [list(r) for r in m]
        if len(rows) != dim or any(len(r) != dim for r in rows):
            raise RankDeficient(f"matrix is not {dim}x{dim}")
        if exact.rank(rows) != dim:
            raise RankDeficient(f"rows {rows} are linearly dependent")
        cones.append(tuple(exact.primitive(r) for r in rows))

    interiors = [_interior_inequalities(c) for c in cones]
    for a, b in combinations(range(len(cones)), 2):
        if exact.strict_cone_witness(interiors[a] + interiors[b], dim) is not None:
            raise OverlappingCones(f"cones {a} and {b} have intersecting interiors")

    normals: list[Vector] = []
    for cone in cones:
        for omit in range(dim):
            rest = [cone[j] for j in range(dim) if j != omit]
            h = exact.canonical(exact.kernel_vector(rest, dim))
            if h not in normals:
                normals.append(h)
    arr = parse_arrangement(dim, normals)

    matching = []
    for k, cone in enumerate(cones):
        sign = arr.sign_of([sum(col) for col in zip(*cone)])
        if sign is None:
            raise ConeNotChamber(f"cone {k} is cut by a hyperplane")
        chamber = arr.chamber(sign)
        try:
            rays = arr.chamber_rays(chamber)
        except NotSimplicial:
            raise ConeNotChamber(f"cone {k} lies in a non-simplicial chamber") from None
        if sorted(rays) != sorted(cone):
            raise ConeNotChamber(f"cone {k} is a proper subset of chamber {sign}")
        matching.append(chamber.id)
    hit = set(matching)
    unmatched = tuple(c.id for c in arr.chambers if c.id not in hit)
    return Reconstruction(arr, tuple(matching), unmatched)


@dataclass(frozen=True)
class WeakOrder:
    base: int
    elements: tuple[int, ...]
    covers: tuple[tuple[int, int], ...]
    minimum: int
    maximum: int
    hasse_matches_skeleton: bool

    def leq(self, sk: SkeletonGraph, a, b) -> bool:
        arr = sk.arrangement
        return arr.separation(self.base, a) <= arr.separation(self.base, b)


def weak_order(sk: SkeletonGraph, base=None) -> WeakOrder:
    """
    Chambers ordered by containment of separation sets from ``base``.

    Cover relations are found from the definition, by brute force over all
    triples, and compared with the skeleton arrows that move away from base.
    """
    arr = sk.arrangement
    base = arr.chamber(sk.base if base is None else base).id
    sep = {c.id: arr.separation(base, c) for c in arr.chambers}
    elements = tuple(sorted(sep, key=lambda c: (len(sep[c]), c)))
    covers = []
    for a in elements:
        for b in elements:
            if sep[a] < sep[b] and not any(sep[a] < sep[z] < sep[b] for z in elements):
                covers.append((a, b))
    covers.sort()
    minimal = [c for c in elements if not any(sep[d] < sep[c] for d in elements)]
    maximal = [c for c in elements if not any(sep[c] < sep[d] for d in elements)]
    assert len(minimal) == 1 and len(maximal) == 1
    away = sorted(
        (a.source, a.target) for a in sk.arrows
        if len(sep[a.target]) == len(sep[a.source]) + 1
    )
    return WeakOrder(
        base=base,
        elements=elements,
        covers=tuple(covers),
        minimum=minimal[0],
        maximum=maximal[0],
        hasse_matches_skeleton=away == covers,
    )


def atom_chamber_bijection(sk: SkeletonGraph, v, budget: int | None = None) -> dict[int, paths.NormalForm]:
    """
    For every chamber w, the single atom class from v to w, as a normal form.

    Checks with the oracle that all atoms v -> w are equivalent.
    """
    v = sk.chamber(v).id
    out: dict[int, paths.NormalForm] = {}
    for c in sk.arrangement.chambers:
        atoms = paths.enumerate_atoms(sk, v, c.id)
        cls = paths.equiv_class(atoms[0], budget)
        for a in atoms[1:]:
            if a.word not in cls:
                raise AtomClassSplit(f"atoms {atoms[0].word} and {a.word} to {c.sign} are inequivalent")
        out[c.id] = paths.deligne_normal_form(atoms[0], budget)
    if len(out) != len(sk.arrangement.chambers):
        raise AtomClassSplit("atom classes and chambers are not in bijection")
    return out
