"""
Central hyperplane arrangements in R^n and their chamber complexes.

A chamber is identified by its sign vector, a string over ``+``/``-`` indexed
in hyperplane order. Chambers are enumerated by locating one generic point on
the moment curve ``(1, t, t^2, ...)`` and then walking across walls, where each
candidate neighbour is confirmed by an exact feasibility test.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import exact
from .errors import (
    DimensionMismatch,
    DuplicateHyperplane,
    NotEssential,
    NotSimplicial,
    ZeroNormal,
)

Vector = tuple[int, ...]


@dataclass(frozen=True)
class Hyperplane:
    normal: Vector

    def __post_init__(self):
        if not any(self.normal):
            raise ZeroNormal("hyperplane normal is zero")
        if exact.canonical(self.normal) != tuple(self.normal):
            raise ValueError(f"normal {self.normal} is not in canonical form")


@dataclass(frozen=True)
class Chamber:
    id: int
    sign: str

    def __str__(self):
        return self.sign


def negate(sign: str) -> str:
    return sign.translate(str.maketrans("+-", "-+"))


def flip(sign: str, h: int) -> str:
    return sign[:h] + ("-" if sign[h] == "+" else "+") + sign[h + 1:]


@dataclass(frozen=True)
class _Complex:
    chambers: tuple[Chamber, ...]
    by_sign: dict[str, Chamber]
    walls: tuple[frozenset[int], ...]


@dataclass(frozen=True, eq=False)
class Arrangement:
    """
    A central arrangement given by primitive, sign-normalized integer normals.

    Chambers are computed on first access and then cached; the cache is filled
    under a lock so concurrent readers see one consistent complex.
    """

    dim: int
    hyperplanes: tuple[Hyperplane, ...]
    _complex: list = field(default_factory=list, init=False, repr=False, compare=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, init=False, repr=False, compare=False)
    _rays: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionMismatch("dimension must be positive")
        if not self.hyperplanes:
            raise ValueError("an arrangement needs at least one hyperplane")
        seen = set()
        for h in self.hyperplanes:
            if len(h.normal) != self.dim:
                raise DimensionMismatch(f"normal {h.normal} does not have length {self.dim}")
            if h.normal in seen:
                raise DuplicateHyperplane(f"duplicate hyperplane {h.normal}")
            seen.add(h.normal)

    @property
    def normals(self) -> list[Vector]:
        return [h.normal for h in self.hyperplanes]

    def __len__(self):
        return len(self.hyperplanes)

    def __eq__(self, other):
        if not isinstance(other, Arrangement):
            return NotImplemented
        return self.dim == other.dim and self.hyperplanes == other.hyperplanes

    def __hash__(self):
        return hash((self.dim, self.hyperplanes))

    # -- chamber complex -------------------------------------------------

    def _get_complex(self) -> _Complex:
        if not self._complex:
            with self._lock:
                if not self._complex:
                    self._complex.append(self._build_complex())
        return self._complex[0]

    def _build_complex(self) -> _Complex:
        seed = self._seed_sign()
        found = {seed: None}
        walls: dict[str, frozenset[int]] = {}
        queue = [seed]
        while queue:
            s = queue.pop()
            ws = []
            for h in range(len(self)):
                t = flip(s, h)
                if t in found or self.feasible(t):
                    ws.append(h)
                    if t not in found:
                        found[t] = None
                        queue.append(t)
            walls[s] = frozenset(ws)
        signs = sorted(found)
        chambers = tuple(Chamber(i, s) for i, s in enumerate(signs))
        return _Complex(
            chambers=chambers,
            by_sign={c.sign: c for c in chambers},
            walls=tuple(walls[c.sign] for c in chambers),
        )

    def _seed_sign(self) -> str:
        t = 1
        while True:
            point = [t**k for k in range(self.dim)]
            values = [exact.dot(n, point) for n in self.normals]
            if all(values):
                return "".join("+" if v > 0 else "-" for v in values)
            t += 1

    @property
    def chambers(self) -> tuple[Chamber, ...]:
        return self._get_complex().chambers

    def chamber(self, key: Chamber | int | str) -> Chamber:
        """Resolve a chamber given as a Chamber, an id, or a sign string."""
        cx = self._get_complex()
        if isinstance(key, Chamber):
            if cx.chambers[key.id] != key:
                raise KeyError(f"{key} is not a chamber of this arrangement")
            return key
        if isinstance(key, str):
            try:
                return cx.by_sign[key]
            except KeyError:
                raise KeyError(f"no chamber with sign {key!r}") from None
        return cx.chambers[key]

    def feasible(self, sign: Chamber | str) -> bool:
        return self.witness(sign) is not None

    def witness(self, sign: Chamber | str) -> Vector | None:
        """An integer interior point of the region with the given signs, or None."""
        if isinstance(sign, Chamber):
            sign = sign.sign
        if len(sign) != len(self):
            raise DimensionMismatch(f"sign vector has length {len(sign)}, expected {len(self)}")
        rows = [
            n if s == "+" else tuple(-x for x in n)
            for n, s in zip(self.normals, sign)
        ]
        return exact.strict_cone_witness(rows, self.dim)

    def walls(self, c: Chamber | int | str) -> frozenset[int]:
        c = self.chamber(c)
        return self._get_complex().walls[c.id]

    def neighbor(self, c: Chamber | int | str, h: int) -> Chamber:
        c = self.chamber(c)
        if h not in self.walls(c):
            raise ValueError(f"hyperplane {h} is not a wall of chamber {c.sign}")
        return self.chamber(flip(c.sign, h))

    def separation(self, v: Chamber | int | str, w: Chamber | int | str) -> frozenset[int]:
        a, b = self.chamber(v).sign, self.chamber(w).sign
        return frozenset(i for i, (x, y) in enumerate(zip(a, b)) if x != y)

    def antipode(self, c: Chamber | int | str) -> Chamber:
        return self.chamber(negate(self.chamber(c).sign))

    # -- simplicial structure --------------------------------------------

    def is_essential(self) -> bool:
        return exact.rank(self.normals) == self.dim

    def is_simplicial(self) -> bool:
        for c in self.chambers:
            ws = self.walls(c)
            if len(ws) != self.dim:
                return False
            if exact.rank([self.normals[h] for h in ws]) != self.dim:
                return False
        return True

    def chamber_rays(self, c: Chamber | int | str) -> list[Vector]:
        """
        Extremal rays of the closed chamber cone, as primitive integer vectors
        sorted lexicographically. Requires a simplicial chamber.
        """
        c = self.chamber(c)
        if c.id in self._rays:
            return list(self._rays[c.id])
        if not self.is_essential():
            raise NotEssential("normals do not span R^n; chambers are not pointed cones")
        ws = sorted(self.walls(c))
        if len(ws) != self.dim or exact.rank([self.normals[h] for h in ws]) != self.dim:
            raise NotSimplicial(f"chamber {c.sign} is not a simplicial cone")
        rays = []
        for omit in ws:
            rest = [self.normals[h] for h in ws if h != omit]
            r = exact.kernel_vector(rest, self.dim)
            if self._side(c, omit, r) < 0:
                r = tuple(-x for x in r)
            rays.append(r)
        for r in rays:
            for h, n in enumerate(self.normals):
                s = exact.sign(exact.dot(n, r))
                if s and s != self._sgn(c, h):
                    raise AssertionError(f"ray {r} leaves chamber {c.sign}")
        self._rays[c.id] = tuple(sorted(rays))
        return sorted(rays)

    def _sgn(self, c: Chamber, h: int) -> int:
        return 1 if c.sign[h] == "+" else -1

    def _side(self, c: Chamber, h: int, vec: Sequence[int]) -> int:
        return exact.sign(exact.dot(self.normals[h], vec)) * self._sgn(c, h)

    def sign_of(self, point: Sequence) -> str | None:
        """Sign string of a point, or None if it lies on some hyperplane."""
        values = [exact.dot(n, point) for n in self.normals]
        if not all(values):
            return None
        return "".join("+" if v > 0 else "-" for v in values)

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        return {"dim": self.dim, "hyperplanes": [list(n) for n in self.normals]}

    @classmethod
    def from_json(cls, data: dict | str) -> Arrangement:
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, dict) or "dim" not in data or "hyperplanes" not in data:
            raise ValueError('arrangement JSON needs keys "dim" and "hyperplanes"')
        return parse_arrangement(data["dim"], data["hyperplanes"])


def parse_arrangement(dim: int, rows: Iterable[Sequence[int]]) -> Arrangement:
    """Canonicalize integer rows into an arrangement, rejecting zero rows and duplicates."""
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise DimensionMismatch(f"invalid dimension {dim!r}")
    hyperplanes = []
    for row in rows:
        row = list(row)
        if len(row) != dim:
            raise DimensionMismatch(f"row {row} does not have length {dim}")
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in row):
            raise ValueError(f"row {row} must contain integers")
        if not any(row):
            raise ZeroNormal(f"row {row} is zero")
        hyperplanes.append(Hyperplane(exact.canonical(row)))
    return Arrangement(dim, tuple(hyperplanes))


def enumerate_chambers(arr: Arrangement) -> list[Chamber]:
    return list(arr.chambers)


def chamber_json(arr: Arrangement, c: Chamber, rays: Sequence[Vector] | None = None) -> dict:
    out = {"id": c.id, "sign": c.sign}
    if rays is not None:
        out["rays"] = [list(r) for r in rays]
    return out


def independent(vectors: Sequence[Sequence[int]]) -> bool:
    return exact.rank(vectors) == len(vectors)
