"""Tensor algebra over a basis, with the triangle product extended by the
derivation rule (single letter on a product) and the associator rule (word of
length >= 2 acting), plus the word commutator, the triple-bracket, and the
symmetrization map.

Tensor words are plain tuples of basis elements; the empty tuple is the unit.
``triangle`` is parameterized by the base product on single letters so the
same engine serves the one-operator algebra, the two-operator algebra, and
test doubles.
"""
from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction

from .terms import (BRK, GEN, GRAFT, LinComb, brk, graft)

EMPTY = ()


def word_of(*letters):
    return tuple(letters)


def word_vc(w):
    return sum(t.vc for t in w)


def unit():
    return LinComb.of(EMPTY)


def letters_to_words(x):
    """Embed a combination over letters as length-1 tensor words."""
    return LinComb({(t,): c for t, c in x.items()})


def words_to_letters(x):
    """Inverse embedding; every word must have length exactly one."""
    out = {}
    for w, c in x.items():
        assert len(w) == 1, "not a letter-graded element: %r" % (w,)
        out[w[0]] = c
    return LinComb(out)


def tensor_mul(u, v):
    """Bilinear concatenation of tensor words."""
    out = LinComb()
    for wu, cu in u.items():
        for wv, cv in v.items():
            out.add_in(LinComb.of(wu + wv), cu * cv)
    return out


def lie_word(u, v):
    """Word commutator u·v - v·u."""
    return tensor_mul(u, v) - tensor_mul(v, u)


def word_lincomb(parts):
    """Concatenate a sequence of letter-combinations into a word combination."""
    out = unit()
    for p in parts:
        out = tensor_mul(out, letters_to_words(p))
    return out


def symmetrize(x):
    """Average a word combination over all letter permutations (weight 1/n!)."""
    out = LinComb()
    for w, c in x.items():
        n = len(w)
        if n <= 1:
            out.add_in(LinComb.of(w), c)
            continue
        scale = c * Fraction(1, _factorial(n))
        for perm, mult in Counter(itertools.permutations(w)).items():
            out.add_in(LinComb.of(perm), scale * mult)
    return out


def _factorial(n):
    r = 1
    for i in range(2, n + 1):
        r *= i
    return r


def triangle(u, v, base):
    """Triangle product of word combinations.

    ``base(x, y) -> LinComb over letters`` is the product of two single
    letters. The empty word acts as the identity on the left; a nonempty word
    acting on the empty word gives 0.
    """
    out = LinComb()
    for wu, cu in u.items():
        for wv, cv in v.items():
            out.add_in(_tri_words(wu, wv, base), cu * cv)
    return out


def _tri_words(wu, wv, base):
    if not wu:
        return LinComb.of(wv)
    if not wv:
        return LinComb()
    if len(wu) == 1:
        return _derive(wu[0], wv, base)
    # (x · rest) ▷ v  =  x ▷ (rest ▷ v)  -  (x ▷ rest) ▷ v
    x, rest = wu[0], wu[1:]
    inner = _tri_words(rest, wv, base)
    out = LinComb()
    for w, c in inner.items():
        out.add_in(_tri_words((x,), w, base), c)
    deriv = _derive(x, rest, base)
    for w, c in deriv.items():
        out.add_in(_tri_words(w, wv, base), -c)
    return out


def _derive(x, w, base):
    """Single letter acting on a word as a derivation."""
    if len(w) == 1:
        return letters_to_words(base(x, w[0]))
    out = LinComb()
    for i in range(len(w)):
        for t, c in base(x, w[i]).items():
            out.add_in(LinComb.of(w[:i] + (t,) + w[i + 1:]), c)
    return out


# -- the free product on the planar-tree basis --------------------------------

_PROD = {}


def graft_product(x, y):
    """Free triangle product of two tree-basis terms, expanded in the basis."""
    key = (x, y)
    out = _PROD.get(key)
    if out is not None:
        return out
    if y.kind in (GEN, BRK):
        out = LinComb.of(graft((x,), y))
    else:
        assert y.kind == GRAFT
        # x ▷ (w ▷ r) = (x·w) ▷ r + (x ▷ w) ▷ r
        out = LinComb.of(graft((x,) + y.branches, y.root))
        bs = y.branches
        for i in range(len(bs)):
            for t, c in graft_product(x, bs[i]).items():
                out.add_in(LinComb.of(graft(bs[:i] + (t,) + bs[i + 1:], y.root)), c)
    _PROD[key] = out
    return out


def tree_mul(u, v):
    """Bilinear free product on tree-basis combinations."""
    out = LinComb()
    for x, cx in u.items():
        for y, cy in v.items():
            out.add_in(graft_product(x, y), cx * cy)
    return out


def tree_brk(u, v):
    """Bilinear bracket on tree-basis combinations."""
    out = LinComb()
    for x, cx in u.items():
        for y, cy in v.items():
            out.add_in(LinComb.of(brk(x, y)), cx * cy)
    return out


def associator(x, y, z, mul=tree_mul):
    """a(x,y,z) = x ▷ (y ▷ z) − (x ▷ y) ▷ z."""
    return mul(x, mul(y, z)) - mul(mul(x, y), z)


def triple_bracket(x, y, z, mul=tree_mul):
    """[x,y,z] = a(x,y,z) − a(y,x,z); antisymmetric in the first two slots."""
    return associator(x, y, z, mul) - associator(y, x, z, mul)


def word_act_trees(w, v):
    """A word combination of tree-basis letters acting on a tree combination."""
    return words_to_letters(triangle(w, letters_to_words(v),
                                     lambda a, b: graft_product(a, b)))
