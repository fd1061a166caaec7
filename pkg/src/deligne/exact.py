"""
Exact integer/rational linear algebra used by the geometry layer.

Nothing here touches floating point. Vectors are tuples of Python ints (or
Fractions where a rational intermediate is unavoidable); every sign decision
is made on exact values.

The feasibility test for open polyhedral cones is Fourier-Motzkin elimination
over the integers: a homogeneous system ``a_i . x > 0`` is feasible iff
elimination never produces the contradiction ``0 > 0``, and back-substitution
through the stored elimination levels recovers a rational witness.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[int, ...]


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def sign(x) -> int:
    return (x > 0) - (x < 0)


def primitive(vec: Iterable) -> Vector:
    """Scale a nonzero rational vector by a positive factor to a primitive integer vector."""
    vals = [Fraction(x) for x in vec]
    denom = math.lcm(*(v.denominator for v in vals)) if vals else 1
    ints = [int(v * denom) for v in vals]
    g = math.gcd(*ints)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(x // g for x in ints)


def canonical(vec: Iterable) -> Vector:
    """Primitive representative whose first nonzero entry is positive."""
    p = primitive(vec)
    for x in p:
        if x:
            return p if x > 0 else tuple(-y for y in p)
    raise AssertionError("unreachable")


def rank(rows: Sequence[Sequence]) -> int:
    """Rank over the rationals by fraction-free Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(r + 1, len(m)):
            if m[i][col]:
                f = m[i][col] / m[r][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def kernel_vector(rows: Sequence[Sequence], n: int) -> Vector:
    """
    Primitive generator of the kernel of ``rows`` (n-1 independent rows in Q^n).

    Uses signed maximal minors (generalized cross product), so the result is
    exact and needs no pivoting choices.
    """
    if len(rows) != n - 1:
        raise ValueError(f"need {n - 1} rows to span a hyperplane in dimension {n}")
    if n == 1:
        return (1,)
    comps = []
    for j in range(n):
        minor = [[row[c] for c in range(n) if c != j] for row in rows]
        comps.append((-1) ** j * det(minor))
    if all(c == 0 for c in comps):
        raise ValueError("rows are linearly dependent")
    return primitive(comps)


def det(mat: Sequence[Sequence]) -> Fraction | int:
    m = [[Fraction(x) for x in row] for row in mat]
    n = len(m)
    result = Fraction(1)
    for col in range(n):
        pivot = next((i for i in range(col, n) if m[i][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            result = -result
        result *= m[col][col]
        for i in range(col + 1, n):
            if m[i][col]:
                f = m[i][col] / m[col][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[col])]
    if result.denominator == 1:
        return int(result)
    return result


def solve(mat: Sequence[Sequence], rhs: Sequence) -> tuple[Fraction, ...]:
    """Solve the square nonsingular system ``mat @ x = rhs`` exactly."""
    n = len(mat)
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(mat, rhs)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if pivot is None:
            raise ValueError("singular system")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [a / p for a in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return tuple(row[n] for row in aug)


def _normalize(row: Sequence[int]) -> Vector:
    g = math.gcd(*row)
    return tuple(row) if g in (0, 1) else tuple(x // g for x in row)


def strict_cone_witness(rows: Sequence[Sequence[int]], n: int) -> Vector | None:
    """
    Find an integer x with ``row . x > 0`` for every row, or None if the open
    cone is empty. Exact Fourier-Motzkin elimination, last variable first.
    """
    system = {_normalize(r) for r in rows}
    levels: list[set[Vector]] = [set() for _ in range(n)]
    for j in range(n - 1, -1, -1):
        if any(not any(r) for r in system):
            return None  # 0 > 0
        levels[j] = system
        if j == 0:
            break
        pos = [r for r in system if r[j] > 0]
        neg = [r for r in system if r[j] < 0]
        nxt = {r for r in system if r[j] == 0}
        for p in pos:
            for q in neg:
                comb = [p[k] * -q[j] + q[k] * p[j] for k in range(n)]
                nxt.add(_normalize(comb))
        system = nxt

    lows = [r[0] for r in levels[0] if r[0] > 0]
    highs = [r[0] for r in levels[0] if r[0] < 0]
    if lows and highs:
        return None
    x: list[Fraction] = [Fraction(1 if lows else -1 if highs else 0)]
    for j in range(1, n):
        lo: Fraction | None = None
        hi: Fraction | None = None
        for r in levels[j]:
            c = r[j]
            if c == 0:
                continue
            bound = -sum(Fraction(r[k]) * x[k] for k in range(j)) / c
            if c > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is not None and hi is not None:
            if lo >= hi:
                # elimination guarantees an open interval
                raise AssertionError("Fourier-Motzkin back-substitution failed")
            x.append((lo + hi) / 2)
        elif lo is not None:
            x.append(Fraction(math.floor(lo) + 1))
        elif hi is not None:
            x.append(Fraction(math.ceil(hi) - 1))
        else:
            x.append(Fraction(0))
    return primitive(x) if any(x) else None
