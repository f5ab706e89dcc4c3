"""Tensor algebra operations: concatenation, the extended triangle product,
the word commutator, the triple-bracket, and symmetrization."""
import random
from fractions import Fraction

from plyalg.bases import enumerate_Bhat
from plyalg.tensor import (graft_product, letters_to_words, lie_word,
                           symmetrize, tensor_mul, tree_mul, triangle,
                           triple_bracket, unit, word_act_trees)
from plyalg.terms import Alphabet, LinComb, graft

A = Alphabet.of_size(3)
a, b, c = A.gens


def olc(*letters):
    return LinComb.of(tuple(letters))


def olc_trees(t):
    return LinComb.of(t)


def test_unit_and_concat():
    w = olc(a, b)
    assert tensor_mul(unit(), w) == w
    assert tensor_mul(olc(a), olc(b)) == olc(a, b)


def test_bilinearity():
    assert tensor_mul(olc(a) + olc(b), olc(c)) == olc(a, c) + olc(b, c)


def _tri(u, v):
    return triangle(u, v, graft_product)


def test_associator_rule():
    # (x · y) ▷ z  =  x ▷ (y ▷ z) − (x ▷ y) ▷ z
    lhs = _tri(olc(a, b), olc(c))
    rhs = _tri(olc(a), _tri(olc(b), olc(c))) - _tri(_tri(olc(a), olc(b)), olc(c))
    assert lhs == rhs


def test_forest_graft_is_tree():
    # (t1 ... tn) ▷ c builds the planar tree directly
    t1, t2 = graft((a,), a), b
    lhs = _tri(olc(t1, t2), olc(c))
    assert lhs == olc(graft((t1, t2), c))


def test_unit_rules():
    assert _tri(unit(), olc(a, b)) == olc(a, b)
    assert _tri(olc(a), unit()) == LinComb.zero()


def test_lie_word():
    x, y = olc(a), olc(b)
    assert lie_word(x, x) == LinComb.zero()
    assert lie_word(x, y) == olc(a, b) - olc(b, a)


def test_lie_word_jacobi():
    x, y, z = olc(a), olc(b), olc(c)
    total = (lie_word(lie_word(x, y), z) + lie_word(lie_word(y, z), x)
             + lie_word(lie_word(z, x), y))
    assert total == LinComb.zero()


def test_commutator_acts_as_triple_bracket():
    # [x,y] ▷ z = [x,y,z]
    x, y, z = LinComb.of(a), LinComb.of(b), LinComb.of(c)
    lhs = word_act_trees(lie_word(letters_to_words(x), letters_to_words(y)), z)
    assert lhs == triple_bracket(x, y, z)


def test_triple_bracket_antisymmetry():
    x, z = LinComb.of(a), LinComb.of(c)
    assert triple_bracket(x, x, z) == LinComb.zero()
    y = LinComb.of(b)
    assert triple_bracket(x, y, z) + triple_bracket(y, x, z) == LinComb.zero()


def test_triple_bracket_expansion():
    # [a,b,c] = a▷(b▷c) − (a▷b)▷c − b▷(a▷c) + (b▷a)▷c; in the planar-tree
    # basis the nested-product summands cancel down to (ab − ba) ▷ c
    x, y, z = LinComb.of(a), LinComb.of(b), LinComb.of(c)
    out = triple_bracket(x, y, z)
    expected = (tree_mul(x, tree_mul(y, z)) - tree_mul(tree_mul(x, y), z)
                - tree_mul(y, tree_mul(x, z)) + tree_mul(tree_mul(y, x), z))
    assert out == expected
    assert out == olc_trees(graft((a, b), c)) - olc_trees(graft((b, a), c))


def test_symmetrize_small():
    assert symmetrize(olc(a)) == olc(a)
    assert symmetrize(olc(a, b)) == (olc(a, b) + olc(b, a)).scale(Fraction(1, 2))
    assert symmetrize(olc(a, a)) == olc(a, a)


def test_symmetrize_idempotent():
    w = olc(a, b, c) + olc(a, a, b).scale(Fraction(2, 5))
    assert symmetrize(symmetrize(w)) == symmetrize(w)


def test_derivation_rule_sampled(A2):
    # x ▷ (w1 · w2) = (x ▷ w1) · w2 + w1 · (x ▷ w2) for single letters x
    rng = random.Random(3)
    pool = [t for n in range(1, 3) for t in enumerate_Bhat(n, A2)]
    for _ in range(40):
        x = rng.choice(pool)
        w1 = tuple(rng.choice(pool) for _ in range(rng.randint(1, 2)))
        w2 = tuple(rng.choice(pool) for _ in range(rng.randint(1, 2)))
        if x.vc + sum(t.vc for t in w1 + w2) > 6:
            continue
        lhs = _tri(olc(x), olc(*(w1 + w2)))
        rhs = (tensor_mul(_tri(olc(x), olc(*w1)), olc(*w2))
               + tensor_mul(olc(*w1), _tri(olc(x), olc(*w2))))
        assert lhs == rhs
