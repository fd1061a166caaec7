"""
g-matrices and the weak order
=============================

Writing each chamber's labeled rays in the base chamber's ray coordinates
gives an integer matrix per chamber. The matrices alone determine the
arrangement again.
"""

from deligne import catalog
from deligne.gfan import arrangement_from_g_matrices, g_matrix, mutate_g, weak_order
from deligne.skeleton import build_skeleton

sk = build_skeleton(catalog.get("EX8"), "++++", {(1, 0): 1, (0, 1): 2})
mats = [g_matrix(sk, c) for c in sk.arrangement.chambers]
for g in mats:
    print(sk.arrangement.chambers[g.chamber].sign, g.rows)

# crossing wall i changes only row i
print(mutate_g(sk, mats[0], 1).rows)

rec = arrangement_from_g_matrices(2, [g.rows for g in mats])
print(rec.arrangement.normals, rec.complete)

# separation sets ordered by inclusion; covers are exactly the arrows leaving the base
wo = weak_order(sk)
print(wo.covers, wo.hasse_matches_skeleton)
