"""Bases of the free algebras and the maps between them.

Four bases appear: the planar-tree basis (Graft nodes), the symmetric-block
basis (OGraft nodes, OSBB words over itself), the triple basis (SymGraft and
Triple nodes, image of the block basis under the automorphism ``phi``), and
for the one-operator algebra the bracket-free restriction of the block
basis. Conversions are exact; ``shat_to_t`` uses the triangularity of
``phi`` (the value of phi(s) re-expanded in block coordinates is s plus
strictly smaller terms).
"""
from __future__ import annotations

import math
from . import osbb
from .orders import cmp_hall_words, cmp_shat, sort_by
from .terms import (BRK, GEN, GRAFT, OGRAFT, SYMGRAFT, TRIPLE, LinComb, block,
                    brk, canon_key, graft, ograft, osbb_word, symgraft, triple)
from .tensor import (symmetrize, tree_brk, triple_bracket, word_act_trees,
                     word_lincomb)


class BasisError(AssertionError):
    pass


# -- tree basis <-> symmetric-block basis -------------------------------------

_TO_SHAT = {}


def to_shat_term(t):
    out = _TO_SHAT.get(t)
    if out is not None:
        return out
    if t.kind == GEN:
        out = LinComb.of(t)
    elif t.kind == BRK:
        out = tree_brk(to_shat_term(t.x), to_shat_term(t.y))
    elif t.kind == GRAFT:
        word = word_lincomb([to_shat_term(b) for b in t.branches])
        dec = osbb.decompose(word, cmp_shat)
        root = to_shat_term(t.root)
        out = LinComb()
        for w, cw in dec.items():
            for r, cr in root.items():
                out.add_in(LinComb.of(ograft(w, r)), cw * cr)
    else:
        raise BasisError("to_shat expects a tree-basis term, got %r" % t)
    _TO_SHAT[t] = out
    return out


def to_shat(x):
    if not isinstance(x, LinComb):
        return to_shat_term(x)
    return x.map_terms(to_shat_term)


_FROM_SHAT = {}


def from_shat_term(s):
    out = _FROM_SHAT.get(s)
    if out is not None:
        return out
    if s.kind == GEN:
        out = LinComb.of(s)
    elif s.kind == BRK:
        out = tree_brk(from_shat_term(s.x), from_shat_term(s.y))
    elif s.kind == OGRAFT:
        root = from_shat_term(s.root)
        out = LinComb()
        for w, cw in osbb.expand(s.word).items():
            branch_words = word_lincomb([from_shat_term(l) for l in w])
            for bw, cb in branch_words.items():
                for r, cr in root.items():
                    out.add_in(LinComb.of(graft(bw, r)), cw * cb * cr)
    else:
        raise BasisError("from_shat expects a block-basis term, got %r" % s)
    _FROM_SHAT[s] = out
    return out


def from_shat(x):
    if not isinstance(x, LinComb):
        return from_shat_term(x)
    return x.map_terms(from_shat_term)


# -- the automorphism between the block basis and the triple basis ------------

_PHI, _PHI_INV = {}, {}


def phi(s):
    """Basis bijection: block-basis element -> triple-basis element."""
    t = _PHI.get(s)
    if t is not None:
        return t
    if s.kind == GEN:
        t = s
    elif s.kind == BRK:
        t = brk(phi(s.x), phi(s.y))
    elif s.kind == OGRAFT:
        w = s.word
        if w.is_symmetric:
            t = symgraft(tuple(phi(l) for l in w.tail), phi(s.root))
        else:
            b0 = w.blocks[0]
            rest = osbb_word(w.blocks[1:], w.tail)
            inner = phi(ograft(rest, s.root)) if rest.length else phi(s.root)
            t = triple(tuple(phi(x) for x in b0.sym), phi(b0.y), phi(b0.z), inner)
    else:
        raise BasisError("phi expects a block-basis term, got %r" % s)
    _PHI[s] = t
    _PHI_INV[t] = s
    return t


def phi_inv(t):
    """Inverse of ``phi``: triple-basis element -> block-basis element."""
    s = _PHI_INV.get(t)
    if s is not None:
        return s
    if t.kind == GEN:
        s = t
    elif t.kind == BRK:
        s = brk(phi_inv(t.x), phi_inv(t.y))
    elif t.kind == SYMGRAFT:
        s = ograft(osbb_word((), tuple(phi_inv(b) for b in t.sym)), phi_inv(t.root))
    elif t.kind == TRIPLE:
        b0 = block(tuple(phi_inv(b) for b in t.sym), phi_inv(t.y), phi_inv(t.z))
        w = phi_inv(t.w)
        if w.kind == OGRAFT:
            s = ograft(osbb_word((b0,) + w.word.blocks, w.word.tail), w.root)
        else:
            s = ograft(osbb_word((b0,), ()), w)
    else:
        raise BasisError("phi_inv expects a triple-basis term, got %r" % t)
    _PHI_INV[t] = s
    _PHI[s] = t
    return s


def phi_lin(x):
    return x.map_terms(lambda s: LinComb.of(phi(s)))


def phi_inv_lin(x):
    return x.map_terms(lambda t: LinComb.of(phi_inv(t)))


def phi_on_A(x):
    """The automorphism applied to a tree-basis combination, in triple-basis
    coordinates of the image."""
    return phi_lin(to_shat(x))


# -- orders on the triple basis ------------------------------------------------

_CMP_T = {}


def cmp_t(x, y):
    """Pullback of the block-basis order along phi."""
    if x is y:
        return 0
    key = (x, y)
    r = _CMP_T.get(key)
    if r is None:
        r = cmp_shat(phi_inv(x), phi_inv(y))
        _CMP_T[key] = r
        _CMP_T[(y, x)] = -r
    return r


_FOLIAGE = {}


def foliage_t(t):
    """Leaf word of a triple-basis element in the ternary magma over the
    non-triple elements (a bare triple-bracket splits, everything else is a
    single letter)."""
    f = _FOLIAGE.get(t)
    if f is None:
        if t.kind == TRIPLE and not t.sym:
            f = foliage_t(t.y) + foliage_t(t.z) + foliage_t(t.w)
        else:
            f = (t,)
        _FOLIAGE[t] = f
    return f


def cmp_hall_t(x, y):
    """Hall order on the triple basis: foliage words compared length-first,
    letters by cmp_t; equal foliages fall back to cmp_t (total)."""
    if x is y:
        return 0
    r = cmp_hall_words(foliage_t(x), foliage_t(y), cmp_t)
    if r:
        return r
    return cmp_t(x, y)


# -- evaluation and coordinate changes ----------------------------------------

_T_VALUE = {}


def t_value(t):
    """The tree-basis value of a triple-basis element."""
    v = _T_VALUE.get(t)
    if v is not None:
        return v
    if t.kind == GEN:
        v = LinComb.of(t)
    elif t.kind == BRK:
        v = tree_brk(t_value(t.x), t_value(t.y))
    elif t.kind == SYMGRAFT:
        w = symmetrize(word_lincomb([t_value(b) for b in t.sym]))
        v = word_act_trees(w, t_value(t.root))
    elif t.kind == TRIPLE:
        tb = triple_bracket(t_value(t.y), t_value(t.z), t_value(t.w))
        if t.sym:
            w = symmetrize(word_lincomb([t_value(b) for b in t.sym]))
            v = word_act_trees(w, tb)
        else:
            v = tb
    else:
        raise BasisError("t_value expects a triple-basis term, got %r" % t)
    _T_VALUE[t] = v
    return v


def t_value_lin(x):
    return x.map_terms(t_value)


_S2T = {}


def shat_elem_to_t(s):
    """Triple-basis coordinates of a block-basis element (triangular solve)."""
    out = _S2T.get(s)
    if out is not None:
        return out
    t = phi(s)
    delta = to_shat(t_value(t)) - LinComb.of(s)
    for u in delta:
        if cmp_shat(u, s) >= 0:
            raise BasisError("triangularity violated: %r appears in phi(%r)" % (u, s))
    out = LinComb.of(t)
    for u, c in delta.items():
        out.add_in(shat_elem_to_t(u), -c)
    _S2T[s] = out
    return out


def shat_to_t(x):
    return x.map_terms(shat_elem_to_t)


def t_to_shat(x):
    return to_shat(t_value_lin(x))


def term_basis(t):
    """Which basis family a term belongs to, by its node kinds."""
    kinds = set()

    def walk(u):
        kinds.add(u.kind)
        if u.kind == BRK:
            walk(u.x)
            walk(u.y)
        elif u.kind == GRAFT:
            for b in u.branches:
                walk(b)
            walk(u.root)
        elif u.kind == OGRAFT:
            for l in u.word.letters():
                walk(l)
            walk(u.root)
        elif u.kind == SYMGRAFT:
            for b in u.sym:
                walk(b)
            walk(u.root)
        elif u.kind == TRIPLE:
            for b in u.sym:
                walk(b)
            walk(u.y)
            walk(u.z)
            walk(u.w)

    walk(t)
    has = {GRAFT: GRAFT in kinds, OGRAFT: OGRAFT in kinds,
           TRIPLE: (SYMGRAFT in kinds or TRIPLE in kinds)}
    n = sum(has.values())
    if n > 1:
        raise BasisError("term mixes basis families: %r" % t)
    if has[GRAFT]:
        return "bhat"
    if has[OGRAFT]:
        return "shat"
    if has[TRIPLE]:
        return "t"
    return "plain"


def any_to_t(x):
    """Triple-basis coordinates of a combination given in any basis."""
    if not isinstance(x, LinComb):
        x = LinComb.of(x)

    def conv(t):
        b = term_basis(t)
        if b == "t":
            return LinComb.of(t)
        if b == "shat":
            return shat_elem_to_t(t)
        return to_shat_term(t).map_terms(shat_elem_to_t)

    return x.map_terms(conv)


def any_to_bhat(x):
    """Tree-basis value of a combination given in any basis."""
    if not isinstance(x, LinComb):
        x = LinComb.of(x)

    def conv(t):
        b = term_basis(t)
        if b == "t":
            return t_value(t)
        if b == "shat":
            return from_shat_term(t)
        return LinComb.of(t)

    return x.map_terms(conv)


# -- graded enumeration ---------------------------------------------------------

def alpha_count(n, k):
    """Trees with n vertices over k colors: Catalan(n-1) * k^n."""
    return k ** n * math.comb(2 * n - 2, n - 1) // n


def beta_count(n, k):
    """Two-operator basis elements with n vertices over k colors."""
    return 2 ** (n - 1) * alpha_count(n, k)


def _multisets_with_vc(m, pool):
    """All multisets (tuples, pool order) of pool elements with total vc m."""
    pool = [t for t in pool if t.vc <= m]
    out = []

    def rec(i, rem, acc):
        if rem == 0:
            out.append(tuple(acc))
            return
        for j in range(i, len(pool)):
            if pool[j].vc <= rem:
                acc.append(pool[j])
                rec(j, rem - pool[j].vc, acc)
                acc.pop()

    rec(0, m, [])
    return out


def _sequences_with_vc(m, pool):
    """All ordered sequences of pool elements with total vc m."""
    pool = [t for t in pool if t.vc <= m]
    out = []

    def rec(rem, acc):
        if rem == 0:
            out.append(tuple(acc))
            return
        for t in pool:
            if t.vc <= rem:
                acc.append(t)
                rec(rem - t.vc, acc)
                acc.pop()

    rec(m, [])
    return out


_S_GRADE, _SHAT_GRADE, _BHAT_GRADE = {}, {}, {}


def enumerate_S(n, alphabet):
    """One-operator basis elements with n vertices, in increasing order."""
    assert n >= 1
    key = (n, alphabet.key())
    out = _S_GRADE.get(key)
    if out is not None:
        return out
    if n == 1:
        out = tuple(alphabet.gens)
    else:
        pool = [t for k in range(1, n) for t in enumerate_S(k, alphabet)]
        items = []
        for ms in _multisets_with_vc(n - 1, pool):
            for w in osbb.words_for_multiset(ms, cmp_shat):
                for c in alphabet.gens:
                    items.append(ograft(w, c))
        out = tuple(sort_by(items, cmp_shat))
    _S_GRADE[key] = out
    return out


def enumerate_Shat(n, alphabet):
    """Two-operator block-basis elements with n vertices, in increasing order."""
    assert n >= 1
    key = (n, alphabet.key())
    out = _SHAT_GRADE.get(key)
    if out is not None:
        return out
    if n == 1:
        out = tuple(alphabet.gens)
    else:
        items = []
        for i in range(1, n):
            for x in enumerate_Shat(i, alphabet):
                for y in enumerate_Shat(n - i, alphabet):
                    items.append(brk(x, y))
        pool = [t for k in range(1, n) for t in enumerate_Shat(k, alphabet)]
        for rvc in range(1, n):
            roots = (alphabet.gens if rvc == 1 else
                     [t for t in enumerate_Shat(rvc, alphabet) if t.kind == BRK])
            if not roots:
                continue
            for ms in _multisets_with_vc(n - rvc, pool):
                for w in osbb.words_for_multiset(ms, cmp_shat):
                    for r in roots:
                        items.append(ograft(w, r))
        out = tuple(sort_by(items, cmp_shat))
    _SHAT_GRADE[key] = out
    return out


def enumerate_Bhat(n, alphabet):
    """Two-operator tree-basis elements with n vertices (canonical order)."""
    assert n >= 1
    key = (n, alphabet.key())
    out = _BHAT_GRADE.get(key)
    if out is not None:
        return out
    if n == 1:
        out = tuple(alphabet.gens)
    else:
        items = []
        for i in range(1, n):
            for x in enumerate_Bhat(i, alphabet):
                for y in enumerate_Bhat(n - i, alphabet):
                    items.append(brk(x, y))
        pool = [t for k in range(1, n) for t in enumerate_Bhat(k, alphabet)]
        for rvc in range(1, n):
            roots = (alphabet.gens if rvc == 1 else
                     [t for t in enumerate_Bhat(rvc, alphabet) if t.kind == BRK])
            if not roots:
                continue
            for seq in _sequences_with_vc(n - rvc, pool):
                for r in roots:
                    items.append(graft(seq, r))
        out = tuple(sorted(items, key=canon_key))
    _BHAT_GRADE[key] = out
    return out


def enumerate_T(n, alphabet):
    """Triple-basis elements with n vertices, in increasing order."""
    return tuple(phi(s) for s in enumerate_Shat(n, alphabet))
