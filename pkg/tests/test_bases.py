"""Basis enumeration counts, conversions, the automorphism and its
triangularity, and the structural lemmas about products in the block basis."""
from fractions import Fraction

from plyalg.bases import (alpha_count, beta_count, enumerate_Bhat,
                          enumerate_S, enumerate_Shat, enumerate_T,
                          from_shat, phi, phi_inv, shat_to_t, t_to_shat,
                          t_value, to_shat)
from plyalg.orders import cmp_shat
from plyalg.terms import (SYMGRAFT, TRIPLE, Alphabet, LinComb, graft, ograft,
                          osbb_word)

A1 = Alphabet.of_size(1)
A2 = Alphabet.of_size(2)
a = A1.gens[0]


def test_counts_one_generator():
    assert [len(enumerate_S(n, A1)) for n in range(1, 6)] == [1, 1, 2, 5, 14]
    for n in range(1, 6):
        assert len(enumerate_S(n, A1)) == alpha_count(n, 1)
        assert len(enumerate_Shat(n, A1)) == beta_count(n, 1)
        assert len(enumerate_Bhat(n, A1)) == beta_count(n, 1)
        assert len(enumerate_T(n, A1)) == beta_count(n, 1)
    assert [beta_count(n, 1) for n in range(1, 6)] == [1, 2, 8, 40, 224]


def test_counts_two_generators():
    for n in range(1, 5):
        assert len(enumerate_Shat(n, A2)) == beta_count(n, 2)
        assert len(enumerate_Bhat(n, A2)) == beta_count(n, 2)
        assert len(enumerate_T(n, A2)) == beta_count(n, 2)


def test_to_from_shat_roundtrip():
    for n in range(1, 6):
        for t in enumerate_Bhat(n, A1):
            x = LinComb.of(t)
            assert from_shat(to_shat(x)) == x
    for n in range(1, 4):
        for t in enumerate_Bhat(n, A2):
            x = LinComb.of(t)
            assert from_shat(to_shat(x)) == x


def test_to_shat_fixes_block_shapes():
    # an element already of block shape converts to itself
    g2 = graft((a,), a)
    assert to_shat(LinComb.of(g2)) == LinComb.of(ograft(osbb_word((), (a,)), a))


def test_to_shat_splits_unordered_word():
    # branches (x, y) with x > y: s(x·y) plus half the bracket block
    from plyalg.terms import block
    x, y = graft((a,), a), a
    sx = ograft(osbb_word((), (a,)), a)
    t = graft((x, y), a)
    got = to_shat(LinComb.of(t))
    want = (LinComb.of(ograft(osbb_word((), (sx, a)), a))
            + LinComb.of(ograft(osbb_word((block((), sx, a),), ()), a),
                         Fraction(1, 2)))
    assert got == want


def test_phi_fixes_generators():
    assert phi(a) is a
    assert phi_inv(a) is a


def test_phi_on_bracket_block():
    # the block [g2, a] grafted on a maps to the bare triple-bracket
    from plyalg.terms import block
    sx = ograft(osbb_word((), (a,)), a)
    s = ograft(osbb_word((block((), sx, a),), ()), a)
    t = phi(s)
    assert t.kind == TRIPLE and not t.sym
    assert t.y == phi(sx) and t.z is a and t.w is a


def test_phi_on_pure_symmetric():
    sx = ograft(osbb_word((), (a,)), a)
    s = ograft(osbb_word((), (sx, a)), a)
    t = phi(s)
    assert t.kind == SYMGRAFT
    assert t.root is a


def test_phi_bijection_and_inverse():
    for n in range(1, 6):
        shat = enumerate_Shat(n, A1)
        ts = enumerate_T(n, A1)
        assert len(set(ts)) == len(shat)
        for s, t in zip(shat, ts):
            assert phi(s) is t
            assert phi_inv(t) is s


def test_phi_triangularity():
    # expanding the value of phi(s) in block coordinates gives s plus
    # strictly smaller terms with coefficient 1 on s
    for n in range(1, 6):
        for s in enumerate_Shat(n, A1):
            coords = to_shat(t_value(phi(s)))
            assert coords.coeff(s) == 1
            for u in coords:
                if u is not s:
                    assert cmp_shat(u, s) < 0


def test_phi_on_A():
    from plyalg.bases import phi_on_A
    from plyalg.tensor import letters_to_words, lie_word, word_act_trees
    # generators are fixed
    assert phi_on_A(LinComb.of(a)) == LinComb.of(a)
    # the commutator word (g2·a − a·g2) grafted on a maps to a triple-bracket
    g2 = graft((a,), a)
    word = lie_word(letters_to_words(LinComb.of(g2)),
                    letters_to_words(LinComb.of(a)))
    out = phi_on_A(word_act_trees(word, LinComb.of(a)))
    assert len(out) == 1
    (t, c), = out.items()
    assert c == 1 and t.kind == TRIPLE and not t.sym


def test_shat_to_t_roundtrip():
    for n in range(1, 5):
        for s in enumerate_Shat(n, A1):
            x = LinComb.of(s)
            assert t_to_shat(shat_to_t(x)) == x
        for t in enumerate_T(n, A1):
            x = LinComb.of(t)
            assert shat_to_t(t_to_shat(x)) == x


# -- structural lemmas over the block basis -------------------------------------

import lemmas


def test_lemma_product_structure():
    assert lemmas.check_product_structure(A1, 200, seed=20) == 200


def test_corollary_triple_bracket_structure():
    assert lemmas.check_triple_bracket_structure(A1, 200, seed=21) == 200


def test_corollary_word_action_structure():
    assert lemmas.check_word_action_structure(A1, 200, seed=22) == 200


def test_lemma_symmetric_action_on_triple_bracket():
    assert lemmas.check_symmetric_action_leading_term(A1, 200, seed=23) == 200


def test_lemmas_two_generators():
    assert lemmas.check_product_structure(A2, 60, seed=24, max_total=5) == 60
    assert lemmas.check_triple_bracket_structure(A2, 60, seed=25, max_total=5) == 60
