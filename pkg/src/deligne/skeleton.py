"""
The oriented skeleton graph of a simplicial arrangement, with mutation labels.

Labels live on chamber rays. The base chamber's rays are numbered 1..n; when
a wall is crossed, the n-1 rays spanning the wall keep their labels and the
one new ray inherits the label of the ray it replaced. An arrow's label is the
label of the ray *not* on the crossed wall, so both directions of an edge
carry the same label.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from . import exact
from .arrangement import Arrangement, Chamber, Vector, chamber_json
from .errors import InconsistentLabeling, NotEssential, NotSimplicial


@dataclass(frozen=True)
class Arrow:
    source: int
    target: int
    wall: int
    label: int

    def to_json(self) -> dict:
        return {"src": self.source, "dst": self.target, "wall": self.wall, "label": self.label}


@dataclass(frozen=True, eq=False)
class SkeletonGraph:
    arrangement: Arrangement
    base: int
    # rays[c][i-1] is the ray of chamber c carrying label i
    rays: tuple[tuple[Vector, ...], ...]
    arrows: tuple[Arrow, ...]
    _out: dict = field(init=False, repr=False)
    cache: dict = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_out", {(a.source, a.label): a for a in self.arrows})

    @property
    def rank(self) -> int:
        return self.arrangement.dim

    @property
    def labels(self) -> range:
        return range(1, self.rank + 1)

    def chamber(self, key) -> Chamber:
        return self.arrangement.chamber(key)

    def cross(self, c: Chamber | int | str, i: int) -> Arrow:
        """The unique arrow leaving ``c`` with label ``i``."""
        if i not in self.labels:
            raise ValueError(f"label {i} outside 1..{self.rank}")
        return self._out[(self.chamber(c).id, i)]

    def out_arrows(self, c) -> list[Arrow]:
        cid = self.chamber(c).id
        return [self._out[(cid, i)] for i in self.labels]

    def labeled_rays(self, c) -> dict[int, Vector]:
        return dict(zip(self.labels, self.rays[self.chamber(c).id]))

    def to_json(self) -> dict:
        arr = self.arrangement
        return {
            "base": self.base,
            "arrows": [a.to_json() for a in self.arrows],
            "chambers": [chamber_json(arr, c, self.rays[c.id]) for c in arr.chambers],
        }


def default_base_labeling(arr: Arrangement, base: Chamber) -> dict[Vector, int]:
    """Rays of the base chamber in descending lexicographic order get labels 1, 2, ..."""
    rays = sorted(arr.chamber_rays(base), reverse=True)
    return {r: i for i, r in enumerate(rays, start=1)}


def _crossing(arr: Arrangement, c: Chamber, labeled: Sequence[Vector], h: int):
    """Neighbour across wall h together with its propagated labeled rays."""
    normal = arr.normals[h]
    off = [i for i, r in enumerate(labeled) if exact.dot(normal, r) != 0]
    if len(off) != 1:
        raise InconsistentLabeling(f"wall {h} of chamber {c.sign} does not omit exactly one ray")
    d = arr.neighbor(c, h)
    new = [r for r in arr.chamber_rays(d) if r not in labeled]
    if len(new) != 1:
        raise InconsistentLabeling(f"crossing wall {h} from {c.sign} does not replace exactly one ray")
    rays = list(labeled)
    rays[off[0]] = new[0]
    return d, off[0] + 1, tuple(rays)


def build_skeleton(
    arr: Arrangement,
    base: Chamber | int | str | None = None,
    base_labeling: Mapping[Sequence[int], int] | Sequence[Sequence[int]] | None = None,
    rng: random.Random | None = None,
) -> SkeletonGraph:
    """
    Propagate ray labels from ``base`` and return the labeled skeleton.

    ``base`` defaults to the chamber whose sign vector is all ``+``, falling
    back to chamber 0. ``base_labeling`` maps each base ray to its label, or
    lists the base rays in label order. With ``rng`` the traversal picks the
    next frontier chamber at random instead of breadth first; the result must
    not depend on it.
    """
    if not arr.is_essential():
        raise NotEssential("normals do not span R^n")
    if not arr.is_simplicial():
        raise NotSimplicial("arrangement is not simplicial")
    n = arr.dim
    if base is None:
        base = arr.chamber("+" * len(arr)) if "+" * len(arr) in _signs(arr) else arr.chambers[0]
    base = arr.chamber(base)

    if base_labeling is None:
        labeling = default_base_labeling(arr, base)
    elif isinstance(base_labeling, Mapping):
        labeling = {exact.primitive(r): int(i) for r, i in base_labeling.items()}
    else:
        labeling = {exact.primitive(r): i for i, r in enumerate(base_labeling, start=1)}
    if sorted(labeling) != sorted(arr.chamber_rays(base)) or sorted(labeling.values()) != list(range(1, n + 1)):
        raise ValueError("base labeling must assign labels 1..n to the rays of the base chamber")
    base_rays = tuple(sorted(labeling, key=labeling.get))

    labeled: dict[int, tuple[Vector, ...]] = {base.id: base_rays}
    frontier = deque([base.id])
    while frontier:
        if rng is None:
            cid = frontier.popleft()
        else:
            k = rng.randrange(len(frontier))
            frontier.rotate(-k)
            cid = frontier.popleft()
        c = arr.chambers[cid]
        for h in sorted(arr.walls(c)):
            d, _, rays = _crossing(arr, c, labeled[cid], h)
            if d.id not in labeled:
                labeled[d.id] = rays
                frontier.append(d.id)

    arrows = []
    for c in arr.chambers:
        for h in sorted(arr.walls(c)):
            d, label, rays = _crossing(arr, c, labeled[c.id], h)
            if rays != labeled[d.id]:
                raise InconsistentLabeling(
                    f"labels on {d.sign} disagree when reached from {c.sign}: {rays} vs {labeled[d.id]}"
                )
            arrows.append(Arrow(c.id, d.id, h, label))
    arrows.sort(key=lambda a: (a.source, a.label))
    for c in arr.chambers:
        if [a.label for a in arrows if a.source == c.id] != list(range(1, n + 1)):
            raise InconsistentLabeling(f"chamber {c.sign} does not have one outgoing arrow per label")
    return SkeletonGraph(
        arrangement=arr,
        base=base.id,
        rays=tuple(labeled[c.id] for c in arr.chambers),
        arrows=tuple(arrows),
    )


def _signs(arr: Arrangement) -> set[str]:
    return {c.sign for c in arr.chambers}


def cross(sk: SkeletonGraph, c, i: int) -> Arrow:
    return sk.cross(c, i)


def export_dot(sk: SkeletonGraph) -> str:
    arr = sk.arrangement
    lines = ["digraph skeleton {"]
    for c in arr.chambers:
        lines.append(f'  "{c.sign}";')
    for a in sk.arrows:
        src, dst = arr.chambers[a.source].sign, arr.chambers[a.target].sign
        lines.append(f'  "{src}" -> "{dst}" [label="s{a.label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
