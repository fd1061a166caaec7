"""
Atoms, equivalence and normal forms
===================================

Words are written in application order: s1.s2 crosses the wall labeled 1
first. Atoms are shortest galleries; two positive paths are equivalent when
one becomes the other by exchanging atoms with the same endpoints.
"""

from deligne import catalog
from deligne.groupoid import compose, equal_bounded, invert, parse_morphism
from deligne.paths import (
    begin_set,
    braid_relation,
    deligne_normal_form,
    enumerate_atoms,
    equiv_class,
    path_from_word,
)
from deligne.skeleton import build_skeleton

sk = build_skeleton(catalog.get("EX8"), "++++", {(1, 0): 1, (0, 1): 2})

# the two atoms to the opposite chamber
for a in enumerate_atoms(sk, "++++", "----"):
    print(a.render())

p = path_from_word(sk, "++++", [1, 2, 1, 2, 1])
print(sorted(equiv_class(p).members))
print([a.render() or "()" for a in begin_set(p)])

# greedy factorization into maximal beginning atoms
print(deligne_normal_form(p).render())

# braid relation at the base chamber
print(braid_relation(sk, "++++", 1, 2))

# words with inverse letters (written s1~) live in the groupoid
a = parse_morphism(sk, "++++", "s2.s1.s2.s1")
b = parse_morphism(sk, "++++", "s1.s2.s1.s2")
print(equal_bounded(compose(a, invert(b)), parse_morphism(sk, "++++", "")))
