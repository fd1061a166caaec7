"""
Positive paths in the skeleton graph, atoms, and the Deligne normal form.

Convention: words are stored in *application order*. ``[1, 2, 1]`` means
cross s1 first, then s2, then s1. Composition written right to left,
``s1 s2 s1`` in the usual notation, corresponds to the reversed list.

Equivalence of positive paths is the smallest congruence identifying all
atoms (minimal galleries) with common endpoints. ``equiv_class`` computes a
class by brute force: starting from one word it repeatedly replaces any
contiguous sub-path that is an atom by any other atom with the same
endpoints. Every other routine here (``begins_with``, ``begin_set``,
``deligne_normal_form``) is defined in terms of that oracle.

Why literal prefixes suffice for ``begins_with``: ``p`` begins with an atom
``a`` iff ``p ~ r.a`` for some positive ``r`` (``a`` applied first). If
``p ~ q`` with ``q = r.a`` literally, then ``q`` is a member of the class of
``p`` whose prefix is ``a``. Conversely, if some member ``q`` has a prefix
``b`` with the endpoints of ``a``, then ``b`` is an atom (its length equals
the separation of its endpoints), so ``b ~ a``, and by the congruence rule
``q = r.b ~ r.a``. Hence searching class members for a prefix ending at
``t(a)`` after ``|a|`` steps decides the relation exactly.
"""

from __future__ import annotations

import os
import threading
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .arrangement import Chamber
from .errors import BudgetExceeded, NoClosure, NoJoin, NonUniqueHead
from .skeleton import Arrow, SkeletonGraph

DEFAULT_BUDGET = 10**6
Word = tuple[int, ...]

_cache_lock = threading.Lock()


def default_budget() -> int:
    env = os.environ.get("DELIGNE_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass(frozen=True)
class PositivePath:
    skeleton: SkeletonGraph = field(compare=False, repr=False)
    start: int
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        at = self.start
        for a in self.arrows:
            if a.source != at:
                raise ValueError(f"arrow {a} does not start at chamber {at}")
            at = a.target

    @property
    def end(self) -> int:
        return self.arrows[-1].target if self.arrows else self.start

    @property
    def word(self) -> Word:
        return tuple(a.label for a in self.arrows)

    def __len__(self):
        return len(self.arrows)

    def vertices(self) -> list[int]:
        return [self.start] + [a.target for a in self.arrows]

    def render(self) -> str:
        return render_word(self.word)

    def __getitem__(self, s: slice) -> PositivePath:
        if not isinstance(s, slice) or s.step not in (None, 1):
            raise TypeError("paths support contiguous slicing only")
        i, j, _ = s.indices(len(self))
        return PositivePath(self.skeleton, self.vertices()[i], self.arrows[i:max(i, j)])

    def __add__(self, other: PositivePath) -> PositivePath:
        if other.start != self.end:
            raise ValueError("paths do not compose")
        return PositivePath(self.skeleton, self.start, self.arrows + other.arrows)


@dataclass(frozen=True)
class EquivClass:
    start: int
    end: int
    length: int
    members: frozenset[Word]

    @property
    def representative(self) -> Word:
        return min(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, word) -> bool:
        return tuple(word) in self.members


@dataclass(frozen=True)
class NormalForm:
    """Deligne factors in application order; ``factors[0]`` is applied first."""

    start: int
    factors: tuple[PositivePath, ...]

    def __len__(self):
        return len(self.factors)

    def key(self) -> tuple[tuple[int, int], ...]:
        # atoms with equal endpoints are equivalent, so endpoints determine a factor
        return tuple((f.start, f.end) for f in self.factors)

    def render(self) -> str:
        if not self.factors:
            return "()"
        return "|".join(f"({render_word(f.word)})" for f in self.factors)

    def compose(self, skeleton: SkeletonGraph) -> PositivePath:
        path = PositivePath(skeleton, self.start, ())
        for f in self.factors:
            path = path + f
        return path


def render_word(word: Sequence[int]) -> str:
    return ".".join(f"s{i}" for i in word)


def parse_word(text: str) -> Word:
    """Parse ``"s1.s2.s1"`` (application order). The empty string is the empty word."""
    text = text.strip()
    if not text:
        return ()
    out = []
    for tok in text.split("."):
        tok = tok.strip()
        if not tok.startswith("s") or not tok[1:].isdigit():
            raise ValueError(f"bad letter {tok!r} in word {text!r}")
        out.append(int(tok[1:]))
    return tuple(out)


def _cid(sk: SkeletonGraph, c) -> int:
    return sk.chamber(c).id


def path_from_word(sk: SkeletonGraph, start, word: Iterable[int]) -> PositivePath:
    at = _cid(sk, start)
    arrows = []
    for i in word:
        a = sk.cross(at, i)
        arrows.append(a)
        at = a.target
    return PositivePath(sk, _cid(sk, start), tuple(arrows))


def _walk(sk: SkeletonGraph, start: int, word: Word) -> list[int]:
    verts = [start]
    for i in word:
        verts.append(sk.cross(verts[-1], i).target)
    return verts


def _dist(sk: SkeletonGraph, v: int, w: int) -> int:
    return len(sk.arrangement.separation(v, w))


def is_atom(p: PositivePath) -> bool:
    return len(p) == _dist(p.skeleton, p.start, p.end)


def _atom_words(sk: SkeletonGraph, v: int, w: int) -> tuple[Word, ...]:
    key = ("atoms", v, w)
    hit = sk.cache.get(key)
    if hit is not None:
        return hit
    arr = sk.arrangement
    out: list[Word] = []

    def dfs(c: int, remaining: frozenset[int], word: list[int]):
        if not remaining:
            out.append(tuple(word))
            return
        for i in sk.labels:
            a = sk.cross(c, i)
            if a.wall in remaining:
                word.append(i)
                dfs(a.target, remaining - {a.wall}, word)
                word.pop()

    dfs(v, arr.separation(v, w), [])
    result = tuple(sorted(out))
    sk.cache[key] = result
    return result


def enumerate_atoms(sk: SkeletonGraph, v, w) -> list[PositivePath]:
    """All minimal galleries from v to w, sorted by label word."""
    v, w = _cid(sk, v), _cid(sk, w)
    return [path_from_word(sk, v, word) for word in _atom_words(sk, v, w)]


def _class_words(sk: SkeletonGraph, start: int, word: Word, budget: int) -> frozenset[Word]:
    key = ("class", start, word)
    hit = sk.cache.get(key)
    if hit is not None:
        return hit
    seen = {word}
    queue = deque([word])
    while queue:
        w = queue.popleft()
        verts = _walk(sk, start, w)
        n = len(w)
        for i in range(n - 1):
            for j in range(i + 2, n + 1):
                if j - i != _dist(sk, verts[i], verts[j]):
                    continue
                for alt in _atom_words(sk, verts[i], verts[j]):
                    if alt == w[i:j]:
                        continue
                    nw = w[:i] + alt + w[j:]
                    if nw not in seen:
                        seen.add(nw)
                        if len(seen) > budget:
                            raise BudgetExceeded(f"equivalence class exceeds {budget} words")
                        queue.append(nw)
    members = frozenset(seen)
    with _cache_lock:
        for m in members:
            sk.cache[("class", start, m)] = members
    return members


def equiv_class(p: PositivePath, budget: int | None = None) -> EquivClass:
    budget = default_budget() if budget is None else budget
    members = _class_words(p.skeleton, p.start, p.word, budget)
    return EquivClass(p.start, p.end, len(p), members)


def _prefix_targets(sk: SkeletonGraph, start: int, members: Iterable[Word]) -> dict[int, Word]:
    """Chambers reached by an atomic prefix of some member, with the least such prefix."""
    found: dict[int, Word] = {}
    for m in members:
        verts = _walk(sk, start, m)
        for k, v in enumerate(verts):
            if k != _dist(sk, start, v):
                break  # longer prefixes contain this non-minimal one
            if v not in found or m[:k] < found[v]:
                found[v] = m[:k]
    return found


def begins_with(p: PositivePath, alpha: PositivePath, budget: int | None = None) -> bool:
    if alpha.start != p.start:
        raise ValueError("path and atom must share a source")
    if not is_atom(alpha):
        raise ValueError("second argument must be an atom")
    if len(alpha) > len(p):
        return False
    sk = p.skeleton
    for m in equiv_class(p, budget).members:
        if _walk(sk, p.start, m[: len(alpha)])[-1] == alpha.end:
            return True
    return False


def begin_set(p: PositivePath, budget: int | None = None) -> list[PositivePath]:
    """One representative atom per class in Begin(p), ordered by (length, word)."""
    sk = p.skeleton
    targets = _prefix_targets(sk, p.start, equiv_class(p, budget).members)
    reps = [path_from_word(sk, p.start, _atom_words(sk, p.start, t)[0]) for t in targets]
    return sorted(reps, key=lambda a: (len(a), a.word))


def _head(p: PositivePath, budget: int) -> tuple[int, frozenset[Word]]:
    sk = p.skeleton
    members = _class_words(sk, p.start, p.word, budget)
    targets = _prefix_targets(sk, p.start, members)
    top = max(_dist(sk, p.start, t) for t in targets)
    heads = sorted(t for t in targets if _dist(sk, p.start, t) == top)
    if len(heads) != 1:
        signs = [sk.arrangement.chambers[t].sign for t in heads]
        raise NonUniqueHead(f"inequivalent maximal beginning atoms ending at {signs}")
    head = heads[0]
    atom = _atom_words(sk, p.start, head)[0]
    atom_members = _class_words(sk, p.start, atom, budget)
    if set(_prefix_targets(sk, p.start, atom_members)) != set(targets):
        raise NonUniqueHead("Begin of the path differs from Begin of its head atom")
    return head, members


def deligne_normal_form(p: PositivePath, budget: int | None = None) -> NormalForm:
    """
    Greedy factorization into maximal beginning atoms.

    Each factor is cut from a witnessing member of the current class. The
    input word is used as witness when it already starts with the head atom;
    otherwise the lexicographically least member is taken among those whose
    head is followed by a re-crossing of the head's last wall, falling back
    to any member starting with the head. This makes the consecutive-factor
    property visible on the rendered factors.
    """
    budget = default_budget() if budget is None else budget
    sk = p.skeleton
    factors: list[PositivePath] = []
    current = p
    while len(current):
        head, members = _head(current, budget)
        k = _dist(sk, current.start, head)

        def qualifies(m: Word, recross: bool) -> bool:
            verts = _walk(sk, current.start, m)
            if verts[k] != head:
                return False
            if not recross or k == len(m):
                return True
            last = sk.cross(verts[k - 1], m[k - 1]).wall
            return sk.cross(verts[k], m[k]).wall == last

        if qualifies(current.word, True):
            witness = current.word
        else:
            candidates = sorted(m for m in members if qualifies(m, True))
            if not candidates:
                candidates = sorted(m for m in members if qualifies(m, False))
            witness = candidates[0]
        path = path_from_word(sk, current.start, witness)
        factors.append(path[:k])
        current = path[k:]
    return NormalForm(p.start, tuple(factors))


def equal_positive(p: PositivePath, q: PositivePath, budget: int | None = None) -> bool:
    if (p.start, p.end, len(p)) != (q.start, q.end, len(q)):
        return False
    if p.word == q.word:
        return True
    return deligne_normal_form(p, budget).key() == deligne_normal_form(q, budget).key()


@dataclass(frozen=True)
class BraidRelation:
    m: int
    word_a: Word
    word_b: Word
    equivalent: bool


def braid_relation(sk: SkeletonGraph, v, i: int, j: int, budget: int | None = None) -> BraidRelation:
    """Smallest m at which the alternating words i,j,i,... and j,i,j,... from v close up as atoms."""
    if i == j:
        raise ValueError("braid relation needs two distinct labels")
    v = _cid(sk, v)
    for m in range(2, 2 * len(sk.arrangement) + 1):
        wa = tuple(i if t % 2 == 0 else j for t in range(m))
        wb = tuple(j if t % 2 == 0 else i for t in range(m))
        pa, pb = path_from_word(sk, v, wa), path_from_word(sk, v, wb)
        if pa.end == pb.end and is_atom(pa) and is_atom(pb):
            return BraidRelation(m, wa, wb, equal_positive(pa, pb, budget))
    raise NoClosure(f"labels {i}, {j} never close up from chamber {v}")


def weak_order_join(sk_or_arr, base, w1, w2) -> Chamber:
    """
    Least upper bound of two chambers in the order by separation from ``base``.

    Minimality is certified by comparing against every chamber.
    """
    arr = getattr(sk_or_arr, "arrangement", sk_or_arr)
    base = arr.chamber(base)
    need = arr.separation(base, w1) | arr.separation(base, w2)
    uppers = [c for c in arr.chambers if arr.separation(base, c) >= need]
    minimal = [
        c for c in uppers
        if not any(arr.separation(base, d) < arr.separation(base, c) for d in uppers)
    ]
    if len(minimal) != 1:
        raise NoJoin(f"{len(minimal)} minimal upper bounds")
    return minimal[0]
