"""Invariant suites run by ``deligne verify``."""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass

from . import gfan, paths
from .arrangement import Arrangement
from .errors import BudgetExceeded, DeligneError, NotEssential, NotSimplicial
from .skeleton import SkeletonGraph, build_skeleton


@dataclass
class SuiteResult:
    name: str
    status: str  # "pass", "fail" or "skip"
    detail: str = ""

    def line(self) -> str:
        return f"{self.status.upper():4} {self.name}" + (f": {self.detail}" if self.detail else "")


def check_chambers(arr: Arrangement) -> str:
    signs = {c.sign for c in arr.chambers}
    if len(signs) % 2:
        raise AssertionError(f"odd chamber count {len(signs)}")
    for c in arr.chambers:
        if arr.antipode(c).sign not in signs:
            raise AssertionError(f"antipode of {c.sign} missing")
        for h in arr.walls(c):
            if arr.separation(c, arr.neighbor(c, h)) != {h}:
                raise AssertionError(f"wall {h} of {c.sign} does not separate a neighbour")
    if arr.dim == 2 and arr.is_essential() and len(signs) != 2 * len(arr):
        raise AssertionError("rank-2 arrangement does not have 2k chambers")
    return f"{len(signs)} chambers"


def check_skeleton(sk: SkeletonGraph) -> str:
    arr, n = sk.arrangement, sk.rank
    indeg = defaultdict(int)
    for a in sk.arrows:
        indeg[a.target] += 1
        if arr.separation(a.source, a.target) != {a.wall}:
            raise AssertionError(f"arrow {a} crosses more than its wall")
        if sk.cross(a.target, a.label).target != a.source:
            raise AssertionError(f"reverse of {a} has a different label")
    for c in arr.chambers:
        if sorted(x.label for x in sk.out_arrows(c)) != list(range(1, n + 1)) or indeg[c.id] != n:
            raise AssertionError(f"chamber {c.sign} does not have degree {n}")
    return f"{len(sk.arrows)} arrows"


def check_atoms(sk: SkeletonGraph, budget: int | None = None) -> str:
    arr = sk.arrangement
    for v in arr.chambers:
        classes = gfan.atom_chamber_bijection(sk, v, budget)
        if len(classes) != len(arr.chambers):
            raise AssertionError("atom classes are not in bijection with chambers")
    return f"{len(arr.chambers)} atom classes from every chamber"


def consecutive_factor_ok(sk: SkeletonGraph, nf: paths.NormalForm, budget: int | None = None) -> bool:
    for prev, nxt in zip(nf.factors, nf.factors[1:]):
        wall = prev.arrows[-1].wall
        arrow = next(a for a in sk.out_arrows(nxt.start) if a.wall == wall)
        single = paths.PositivePath(sk, nxt.start, (arrow,))
        if not paths.begins_with(nxt, single, budget):
            return False
    return True


def check_normal_forms(sk: SkeletonGraph, max_length: int, budget: int | None = None) -> str:
    groups = defaultdict(list)
    for v in sk.arrangement.chambers:
        for length in range(max_length + 1):
            for word in itertools.product(sk.labels, repeat=length):
                p = paths.path_from_word(sk, v, word)
                groups[(p.start, p.end, length)].append(p)
    pairs = 0
    for group in groups.values():
        forms = {p.word: paths.deligne_normal_form(p, budget) for p in group}
        for p in group:
            nf = forms[p.word]
            if not consecutive_factor_ok(sk, nf, budget):
                raise AssertionError(f"consecutive-factor property fails for {p.word}")
            if nf.compose(sk).word not in paths.equiv_class(p, budget):
                raise AssertionError(f"normal form of {p.word} is not equivalent to it")
        for p, q in itertools.combinations(group, 2):
            pairs += 1
            by_nf = forms[p.word].key() == forms[q.word].key()
            if by_nf != (q.word in paths.equiv_class(p, budget)):
                raise AssertionError(f"normal forms and oracle disagree on {p.word} vs {q.word}")
    return f"{pairs} pairs up to length {max_length}"


def check_braids(sk: SkeletonGraph, budget: int | None = None) -> str:
    ms = set()
    for c in sk.arrangement.chambers:
        for i, j in itertools.combinations(sk.labels, 2):
            rel = paths.braid_relation(sk, c, i, j, budget)
            if not rel.equivalent or rel.m < 2:
                raise AssertionError(f"braid relation fails at {c.sign} for s{i}, s{j}")
            ms.add(rel.m)
    return "m in " + ",".join(map(str, sorted(ms)))


def check_gfan(sk: SkeletonGraph) -> str:
    arr = sk.arrangement
    mats = [gfan.g_matrix(sk, c) for c in arr.chambers]
    if any(r != tuple(int(i == j) for j in range(arr.dim)) for i, r in enumerate(mats[sk.base].rows)):
        raise AssertionError("base g-matrix is not the identity")
    for g in mats:
        for i in sk.labels:
            if gfan.mutate_g(sk, g, i).chamber != sk.cross(g.chamber, i).target:
                raise AssertionError("mutation does not follow the skeleton")
    rec = gfan.arrangement_from_g_matrices(arr.dim, [g.rows for g in mats])
    expected = {gfan.normal_to_base_coordinates(sk, n) for n in arr.normals}
    if set(rec.arrangement.normals) != expected or len(rec.arrangement) != len(arr):
        raise AssertionError("reconstructed hyperplanes differ")
    if not rec.complete or len(set(rec.matching)) != len(mats):
        raise AssertionError("chamber matching is not bijective")
    return f"{len(mats)} g-matrices round-trip"


def check_weak_order(sk: SkeletonGraph) -> str:
    wo = gfan.weak_order(sk)
    if not wo.hasse_matches_skeleton:
        raise AssertionError("Hasse diagram differs from away-from-base arrows")
    return f"{len(wo.covers)} covers"


def run_all(arr: Arrangement, base=None, labeling=None, max_length: int = 4,
            budget: int | None = None) -> list[SuiteResult]:
    results = []

    def run(name, fn, *args):
        try:
            results.append(SuiteResult(name, "pass", fn(*args)))
        except AssertionError as exc:
            results.append(SuiteResult(name, "fail", str(exc)))
        except BudgetExceeded:
            raise
        except DeligneError as exc:
            results.append(SuiteResult(name, "fail", f"{type(exc).__name__}: {exc}"))

    run("chambers", check_chambers, arr)
    try:
        sk = build_skeleton(arr, base, labeling)
    except (NotEssential, NotSimplicial) as exc:
        for name in ("skeleton", "atoms", "normal-forms", "braids", "gfan", "weak-order"):
            results.append(SuiteResult(name, "skip", f"{type(exc).__name__}: {exc}"))
        return results
    run("skeleton", check_skeleton, sk)
    run("atoms", check_atoms, sk, budget)
    run("normal-forms", check_normal_forms, sk, max_length, budget)
    run("braids", check_braids, sk, budget)
    run("gfan", check_gfan, sk)
    run("weak-order", check_weak_order, sk)
    return results
