"""
Words in arrows and formal inverses: morphisms of the Deligne groupoid.

A letter ``(arrow, -1)`` traverses ``arrow`` backwards, from its target to
its source. Word syntax extends the positive one with ``~`` for inversion:
``"s1~.s2.s1"`` is s1 inverse, then s2, then s1, in application order. Since
the reverse of every arrow carries the same label, ``s1~`` at chamber c is
the inverse of the s1-arrow that *enters* c.

Equality of mixed words is only semi-decided here (``equal_bounded``):
equal/unequal verdicts are always sound, and budget exhaustion yields
``INCONCLUSIVE``.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field

from . import paths
from .paths import PositivePath
from .skeleton import Arrow, SkeletonGraph
from .errors import EndpointMismatch

Letter = tuple[Arrow, int]


class Verdict(enum.Enum):
    EQUAL = "equal"
    UNEQUAL = "unequal"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Morphism:
    skeleton: SkeletonGraph = field(compare=False, repr=False)
    start: int
    letters: tuple[Letter, ...]

    def __post_init__(self):
        at = self.start
        for arrow, e in self.letters:
            if e not in (1, -1):
                raise ValueError("exponent must be +1 or -1")
            src, dst = (arrow.source, arrow.target) if e == 1 else (arrow.target, arrow.source)
            if src != at:
                raise EndpointMismatch(f"letter {arrow}^{e} does not start at {at}")
            at = dst

    @property
    def end(self) -> int:
        at = self.start
        for arrow, e in self.letters:
            at = arrow.target if e == 1 else arrow.source
        return at

    def __len__(self):
        return len(self.letters)

    def is_positive(self) -> bool:
        return all(e == 1 for _, e in self.letters)

    def positive_path(self) -> PositivePath:
        if not self.is_positive():
            raise ValueError("morphism has inverse letters")
        return PositivePath(self.skeleton, self.start, tuple(a for a, _ in self.letters))

    def render(self) -> str:
        return ".".join(f"s{a.label}" + ("~" if e == -1 else "") for a, e in self.letters)


def identity_at(sk: SkeletonGraph, v) -> Morphism:
    return Morphism(sk, sk.chamber(v).id, ())


def from_path(p: PositivePath) -> Morphism:
    return Morphism(p.skeleton, p.start, tuple((a, 1) for a in p.arrows))


def parse_morphism(sk: SkeletonGraph, start, text: str) -> Morphism:
    at = sk.chamber(start).id
    letters = []
    for tok in filter(None, (t.strip() for t in text.strip().split("."))):
        inv = tok.endswith("~")
        body = tok[:-1] if inv else tok
        if not body.startswith("s") or not body[1:].isdigit():
            raise ValueError(f"bad letter {tok!r}")
        out = sk.cross(at, int(body[1:]))
        if inv:
            arrow = sk.cross(out.target, out.label)
            letters.append((arrow, -1))
        else:
            letters.append((out, 1))
        at = out.target
    return Morphism(sk, sk.chamber(start).id, tuple(letters))


def compose(m1: Morphism, m2: Morphism) -> Morphism:
    """``m1`` then ``m2``."""
    if m1.end != m2.start:
        raise EndpointMismatch(f"cannot compose: {m1.end} != {m2.start}")
    return Morphism(m1.skeleton, m1.start, m1.letters + m2.letters)


def invert(m: Morphism) -> Morphism:
    return Morphism(m.skeleton, m.end, tuple((a, -e) for a, e in reversed(m.letters)))


def _reduce_letters(letters) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for arrow, e in letters:
        if stack and stack[-1][0] == arrow and stack[-1][1] == -e:
            stack.pop()
        else:
            stack.append((arrow, e))
    return tuple(stack)


def free_reduce(m: Morphism) -> Morphism:
    return Morphism(m.skeleton, m.start, _reduce_letters(m.letters))


def positive_loop(sk: SkeletonGraph, v, w) -> Morphism:
    """Least-word atom v -> w followed by least-word atom w -> v."""
    v, w = sk.chamber(v).id, sk.chamber(w).id
    there = paths.enumerate_atoms(sk, v, w)[0]
    back = paths.enumerate_atoms(sk, w, v)[0]
    return from_path(there + back)


def crossing_vector(m: Morphism) -> tuple[int, ...]:
    """
    Signed number of crossings of each hyperplane.

    Invariant under free reduction and under exchanging atoms, so it is a
    well-defined function on groupoid morphisms.
    """
    counts = [0] * len(m.skeleton.arrangement)
    for arrow, e in m.letters:
        counts[arrow.wall] += e
    return tuple(counts)


def _rewrites(sk: SkeletonGraph, start: int, letters: tuple[Letter, ...], max_len: int):
    """Words reachable in one step: exchange of an atomic block, or insertion of x.x^-1."""
    verts = [start]
    for arrow, e in letters:
        verts.append(arrow.target if e == 1 else arrow.source)
    n = len(letters)
    for i in range(n):
        for j in range(i + 2, n + 1):
            block = letters[i:j]
            exps = {e for _, e in block}
            if len(exps) != 1:
                break
            (e,) = exps
            a, b = (verts[i], verts[j]) if e == 1 else (verts[j], verts[i])
            if j - i != len(sk.arrangement.separation(a, b)):
                continue
            for alt in paths.enumerate_atoms(sk, a, b):
                new = tuple((x, 1) for x in alt.arrows)
                if e == -1:
                    new = tuple((x, -1) for x in reversed(alt.arrows))
                if new != block:
                    yield _reduce_letters(letters[:i] + new + letters[j:])
    if n + 2 <= max_len:
        for i in range(n + 1):
            for out in sk.out_arrows(verts[i]):
                back = sk.cross(out.target, out.label)
                for pair in (((out, 1), (out, -1)), ((back, -1), (back, 1))):
                    yield letters[:i] + pair + letters[i:]


def equal_bounded(m1: Morphism, m2: Morphism, budget: int = 20000, slack: int = 4) -> Verdict:
    """
    Decide whether two groupoid words are equal, within a search budget.

    Positive words are compared exactly through normal forms. Mixed words are
    first separated by the crossing-vector invariant; otherwise a breadth
    first search over atom exchanges and cancelling insertions (length at most
    the longer word plus ``slack``) looks for a common rewriting.
    """
    if (m1.start, m1.end) != (m2.start, m2.end):
        return Verdict.UNEQUAL
    r1, r2 = free_reduce(m1), free_reduce(m2)
    if r1.letters == r2.letters:
        return Verdict.EQUAL
    if crossing_vector(r1) != crossing_vector(r2):
        return Verdict.UNEQUAL
    if r1.is_positive() and r2.is_positive():
        same = paths.equal_positive(r1.positive_path(), r2.positive_path())
        return Verdict.EQUAL if same else Verdict.UNEQUAL

    sk = m1.skeleton
    max_len = max(len(r1), len(r2)) + slack
    target = r2.letters
    seen = {r1.letters}
    queue = deque([r1.letters])
    while queue:
        w = queue.popleft()
        for nw in _rewrites(sk, r1.start, w, max_len):
            if nw == target:
                return Verdict.EQUAL
            if nw not in seen:
                if len(seen) >= budget:
                    return Verdict.INCONCLUSIVE
                seen.add(nw)
                queue.append(nw)
    return Verdict.INCONCLUSIVE
