"""OSBB words: expansion into plain tensor words and the inverse
decomposition, which writes any tensor word uniquely as a combination of
ordered symmetric-bracket-block words over a totally ordered letter basis.

The decomposition works per (length, letter-multiset) component: enumerate
every OSBB word with that multiset, expand each, and solve the exact linear
system. Components are cached keyed by the sorted letter multiset.
"""
from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction

from . import linalg
from .terms import LinComb, block, canon_key, osbb_word
from .tensor import symmetrize, tensor_mul


def expand(word):
    """Expand one OSBB word into a combination of plain tensor words."""
    out = LinComb.of(())
    for b in word.blocks:
        part = symmetrize(LinComb.of(b.sym)) if b.sym else LinComb.of(())
        pair = LinComb.of((b.y, b.z)) - LinComb.of((b.z, b.y))
        out = tensor_mul(out, tensor_mul(part, pair))
    if word.tail:
        out = tensor_mul(out, symmetrize(LinComb.of(word.tail)))
    return out


def expand_lincomb(x):
    out = LinComb()
    for w, c in x.items():
        out.add_in(expand(w), c)
    return out


def _submultisets(counter):
    items = sorted(counter, key=canon_key)
    ranges = [range(counter[t] + 1) for t in items]
    for picks in itertools.product(*ranges):
        yield tuple(t for t, k in zip(items, picks) for _ in range(k))


_WORDS_CACHE = {}


def words_for_multiset(letters, cmp):
    """Every OSBB word over the given letter multiset, as a tuple."""
    ms = tuple(sorted(letters, key=canon_key))
    key = (id(cmp), ms)
    res = _WORDS_CACHE.get(key)
    if res is not None:
        return res
    out = [osbb_word((), ms)]
    cnt = Counter(ms)
    distinct = sorted(cnt, key=canon_key)
    for y in distinct:
        for z in distinct:
            if cmp(y, z) <= 0:
                continue
            rem = cnt.copy()
            rem[y] -= 1
            rem[z] -= 1
            rem = +rem
            eligible = Counter({t: k for t, k in rem.items() if cmp(t, z) >= 0})
            for sym in _submultisets(eligible):
                rest = rem.copy()
                rest.subtract(Counter(sym))
                blk = block(sym, y, z)
                rest_tuple = tuple(t for t, k in rest.items() for _ in range(k))
                for tail_word in words_for_multiset(rest_tuple, cmp):
                    out.append(osbb_word((blk,) + tail_word.blocks, tail_word.tail))
    res = tuple(out)
    _WORDS_CACHE[key] = res
    return res


_COMPONENTS = {}


def _component(ms, cmp):
    key = (id(cmp), ms)
    comp = _COMPONENTS.get(key)
    if comp is not None:
        return comp
    words = words_for_multiset(ms, cmp)
    perms = sorted(set(itertools.permutations(ms)),
                   key=lambda w: tuple(canon_key(t) for t in w))
    if len(words) != len(perms):
        raise linalg.SingularSolveError(
            "OSBB component is not square: %d words vs %d permutations for %r"
            % (len(words), len(perms), ms))
    index = {w: i for i, w in enumerate(perms)}
    mat = [[Fraction(0)] * len(words) for _ in perms]
    for j, ow in enumerate(words):
        for w, c in expand(ow).items():
            mat[index[w]][j] = c
    inv = linalg.invert(mat)
    comp = (words, index, inv)
    _COMPONENTS[key] = comp
    return comp


def decompose(x, cmp):
    """Write a combination of tensor words in the OSBB basis (exact)."""
    out = LinComb()
    for w, c in x.items():
        if len(w) == 0:
            out.add_in(LinComb.of(osbb_word((), ())), c)
            continue
        ms = tuple(sorted(w, key=canon_key))
        words, index, inv = _component(ms, cmp)
        col = index[w]
        for i, ow in enumerate(words):
            coeff = inv[i][col]
            if coeff:
                out.add_in(LinComb.of(ow), c * coeff)
    return out
