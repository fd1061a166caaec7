"""
Exact combinatorics of simplicial hyperplane arrangements.

Chambers and walls (``arrangement``), the labeled oriented skeleton graph
(``skeleton``), positive paths, atoms and Deligne normal forms (``paths``),
groupoid words (``groupoid``) and the g-vector model of chambers (``gfan``).
All arithmetic is exact.
"""

from .arrangement import Arrangement, Chamber, Hyperplane, enumerate_chambers, parse_arrangement
from .skeleton import Arrow, SkeletonGraph, build_skeleton, cross, export_dot
from .paths import (
    EquivClass,
    NormalForm,
    PositivePath,
    begin_set,
    begins_with,
    braid_relation,
    deligne_normal_form,
    enumerate_atoms,
    equal_positive,
    equiv_class,
    is_atom,
    path_from_word,
    weak_order_join,
)
from .groupoid import Morphism, Verdict, compose, equal_bounded, free_reduce, invert, positive_loop
from .gfan import (
    GMatrix,
    arrangement_from_g_matrices,
    atom_chamber_bijection,
    g_matrix,
    mutate_g,
    weak_order,
)

__version__ = "0.1.0"
