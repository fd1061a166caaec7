import itertools

import pytest

from deligne import catalog
from deligne.errors import BudgetExceeded
from deligne.paths import (
    begin_set,
    begins_with,
    braid_relation,
    deligne_normal_form,
    enumerate_atoms,
    equal_positive,
    equiv_class,
    is_atom,
    parse_word,
    path_from_word,
    render_word,
    weak_order_join,
)
from deligne.skeleton import build_skeleton

from oracles import closure, shortest_words

M, M1, M2, M12, M21, M121, M212, M2121 = (
    "++++", "-+++", "+-++", "+-+-", "-+-+", "-+--", "+---", "----",
)


def sign(sk, cid):
    return sk.arrangement.chambers[cid].sign


def test_word_syntax():
    assert parse_word("s1.s2.s1") == (1, 2, 1)
    assert parse_word("") == ()
    assert render_word((2, 1)) == "s2.s1"
    with pytest.raises(ValueError):
        parse_word("s1.x2")


def test_path_from_word(ex8_sk):
    p = path_from_word(ex8_sk, M, [1, 2, 1, 2, 1])
    assert [sign(ex8_sk, v) for v in p.vertices()] == [M, M1, M21, M121, M2121, M212]
    e = path_from_word(ex8_sk, M, [])
    assert len(e) == 0 and e.end == e.start
    q = path_from_word(ex8_sk, M, [2, 1, 2, 1])
    assert sign(ex8_sk, q.end) == M2121
    assert [sign(ex8_sk, v) for v in q.vertices()] == [M, M2, M12, M212, M2121]


def test_is_atom(ex8_sk):
    assert is_atom(path_from_word(ex8_sk, M, [2, 1, 2, 1]))
    assert is_atom(path_from_word(ex8_sk, M, []))
    assert not is_atom(path_from_word(ex8_sk, M, [1, 1]))


def test_enumerate_atoms(ex8_sk, skeletons):
    assert [a.word for a in enumerate_atoms(ex8_sk, M, M2121)] == [(1, 2, 1, 2), (2, 1, 2, 1)]
    assert [a.word for a in enumerate_atoms(ex8_sk, M1, M1)] == [()]
    a2 = skeletons["A2"]
    atoms = enumerate_atoms(a2, a2.base, a2.arrangement.antipode(a2.base))
    assert len(atoms) == 2 and all(len(a) == 3 for a in atoms)


@pytest.mark.parametrize("name", ["EX8", "A2", "B2", "G2", "A3"])
def test_atoms_are_shortest_paths(skeletons, name):
    sk = skeletons[name]
    chambers = sk.arrangement.chambers
    for v in chambers[:4]:
        for w in chambers:
            words = [a.word for a in enumerate_atoms(sk, v, w)]
            assert words == shortest_words(sk, v.id, w.id)


def test_equiv_class_examples(ex8_sk):
    cls = equiv_class(path_from_word(ex8_sk, M, [2, 1, 2, 1]))
    assert cls.members == {(2, 1, 2, 1), (1, 2, 1, 2)}
    assert cls.representative == (1, 2, 1, 2)
    assert equiv_class(path_from_word(ex8_sk, M, [])).members == {()}
    big = equiv_class(path_from_word(ex8_sk, M, [1, 2, 1, 2, 1]))
    # frozen from the rewriting oracle: swap the length-4 atomic prefix, or the
    # length-4 atomic suffix M1 -> M212
    assert big.members == {(1, 2, 1, 2, 1), (2, 1, 2, 1, 1), (1, 1, 2, 1, 2)}


def test_equiv_class_budget(ex8_sk):
    with pytest.raises(BudgetExceeded):
        equiv_class(path_from_word(build_skeleton(catalog.get("EX8")), M, [1, 2, 1, 2, 1]), budget=2)


@pytest.mark.parametrize("name", ["EX8", "A2"])
def test_equiv_class_matches_naive_closure(skeletons, name):
    sk = skeletons[name]
    table = {}

    def atoms(v, w):
        if (v, w) not in table:
            table[(v, w)] = shortest_words(sk, v, w)
        return table[(v, w)]

    for v in sk.arrangement.chambers:
        for length in range(5):
            for word in itertools.product(sk.labels, repeat=length):
                p = path_from_word(sk, v, word)
                cls = equiv_class(p)
                assert set(cls.members) == closure(sk, v.id, word, atoms)
                for m in cls.members:
                    q = path_from_word(sk, v, m)
                    assert (q.end, len(q)) == (p.end, len(p))


def test_equal_positive(ex8_sk):
    a = path_from_word(ex8_sk, M, [2, 1, 2, 1])
    b = path_from_word(ex8_sk, M, [1, 2, 1, 2])
    assert equal_positive(a, b)
    assert equal_positive(a, a)
    assert not equal_positive(path_from_word(ex8_sk, M, [1, 2]), path_from_word(ex8_sk, M, [2, 1]))


def test_begins_with(ex8_sk):
    p = path_from_word(ex8_sk, M, [1, 2, 1, 2, 1])
    assert begins_with(p, path_from_word(ex8_sk, M, [1]))
    assert begins_with(p, path_from_word(ex8_sk, M, [2, 1, 2, 1]))
    # (2, 1, 2, 1, 1) is in the class, so p also begins with s2
    assert begins_with(p, path_from_word(ex8_sk, M, [2]))
    assert not begins_with(path_from_word(ex8_sk, M, [1, 1]), path_from_word(ex8_sk, M, [2]))


def test_begin_set(ex8_sk):
    single = begin_set(path_from_word(ex8_sk, M, [1]))
    assert [a.word for a in single] == [(), (1,)]
    p = path_from_word(ex8_sk, M, [1, 2, 1, 2, 1])
    # Begin(p) = Begin(atom to the antipode) = every atom out of M
    assert {a.end for a in begin_set(p)} == {c.id for c in ex8_sk.arrangement.chambers}
    x = begin_set(path_from_word(ex8_sk, M, [2, 1, 2, 1]))
    y = begin_set(path_from_word(ex8_sk, M, [1, 2, 1, 2]))
    assert [a.word for a in x] == [a.word for a in y]


def test_normal_form_example(ex8_sk):
    nf = deligne_normal_form(path_from_word(ex8_sk, M, [1, 2, 1, 2, 1]))
    assert len(nf) == 2
    head, tail = nf.factors
    assert (sign(ex8_sk, head.start), sign(ex8_sk, head.end), len(head)) == (M, M2121, 4)
    assert head.word == (2, 1, 2, 1)
    assert tail.word == (1,) and sign(ex8_sk, tail.end) == M212
    assert nf.render() == "(s2.s1.s2.s1)|(s1)"


def test_normal_form_small_cases(ex8_sk):
    atom = path_from_word(ex8_sk, M, [2, 1, 2, 1])
    nf = deligne_normal_form(atom)
    assert len(nf) == 1 and nf.factors[0] == atom
    back = deligne_normal_form(path_from_word(ex8_sk, M, [1, 1]))
    assert [f.word for f in back.factors] == [(1,), (1,)]
    assert sign(ex8_sk, back.factors[1].end) == M
    assert deligne_normal_form(path_from_word(ex8_sk, M, [])).render() == "()"


@pytest.mark.parametrize("name", ["EX8", "A2", "B2"])
def test_normal_form_invariant_across_class(skeletons, name):
    sk = skeletons[name]
    for v in sk.arrangement.chambers[:3]:
        for word in itertools.product(sk.labels, repeat=5):
            p = path_from_word(sk, v, word)
            nf = deligne_normal_form(p)
            assert nf.compose(sk).word in equiv_class(p)
            for m in equiv_class(p).members:
                assert deligne_normal_form(path_from_word(sk, v, m)).key() == nf.key()


def test_braid_relation(skeletons):
    ex8 = skeletons["EX8"]
    rel = braid_relation(ex8, M, 1, 2)
    assert (rel.m, rel.word_a, rel.word_b, rel.equivalent) == (4, (1, 2, 1, 2), (2, 1, 2, 1), True)
    for name, m in (("A2", 3), ("G2", 6), ("B2", 4)):
        sk = skeletons[name]
        for c in sk.arrangement.chambers:
            rel = braid_relation(sk, c, 1, 2)
            assert rel.m == m and rel.equivalent
    a3 = skeletons["A3"]
    assert {braid_relation(a3, c, i, j).m for c in a3.arrangement.chambers
            for i, j in ((1, 2), (1, 3), (2, 3))} == {2, 3}
    with pytest.raises(ValueError):
        braid_relation(ex8, M, 1, 1)


def test_weak_order_join(ex8, skeletons):
    assert weak_order_join(ex8, M, M1, M2).sign == M2121
    for w in ex8.chambers:
        assert weak_order_join(ex8, M, w, w) == w
        assert weak_order_join(ex8, M, M, w) == w
    a3 = skeletons["A3"].arrangement
    for w1, w2 in itertools.combinations(a3.chambers, 2):
        j = weak_order_join(a3, 0, w1, w2)
        assert a3.separation(0, j) >= a3.separation(0, w1) | a3.separation(0, w2)
