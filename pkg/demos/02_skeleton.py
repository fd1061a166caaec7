"""
Labeled skeleton graph
======================

Each chamber gets its rays labeled 1..n. Crossing a wall keeps the shared
rays' labels, and the arrow carries the label of the ray left behind.
"""

import random

from deligne import catalog
from deligne.skeleton import build_skeleton, export_dot

arr = catalog.get("EX8")
sk = build_skeleton(arr, "++++", {(1, 0): 1, (0, 1): 2})

for c in arr.chambers:
    print(c.sign, sk.rays[c.id], [(a.label, arr.chambers[a.target].sign) for a in sk.out_arrows(c)])

# the labeling does not depend on the traversal order
other = build_skeleton(arr, "++++", {(1, 0): 1, (0, 1): 2}, rng=random.Random(7))
print(other.rays == sk.rays)

# Graphviz output, ready for `dot -Tpng`
print(export_dot(sk))
