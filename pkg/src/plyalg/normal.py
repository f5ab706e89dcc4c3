"""Normalization of free two-operator algebra elements onto the basis of the
free post-Lie-Yamaguti algebra, with replayable rewrite traces.

The working representation is the triple basis. A worklist loop picks a term
outside the target basis (per strategy), locates its innermost reducible
subterm, and applies the lowest-numbered applicable rule:

  PLY1        reorder or kill a bracket
  PLY2        push a symmetric word through a bracket root
  PLY3        push a symmetric word through a triple-bracket
  TB-antisym  reorder the first two triple-bracket slots
  PLY4        weak Jacobi for the triple-bracket (plus bracket terms)
  PLY6        derived derivation rule for nested triple-brackets
  PLY5        move a large bracket second-component out of a triple-bracket

Each rule application is one trace step whose replacement is a deterministic
function of the redex, so traces can be checked by recomputation.
"""
from __future__ import annotations

import random
from fractions import Fraction
from dataclasses import dataclass

from . import hall
from .bases import (any_to_t, cmp_hall_t, cmp_t, enumerate_T, shat_to_t,
                    t_value_lin, to_shat)
from .tensor import tree_mul, word_lincomb, word_act_trees
from .terms import (BRK, GEN, SYMGRAFT, TRIPLE, LinComb, brk, canon_key,
                    has_bracket, symgraft, triple)

DEFAULT_FUEL = 10 ** 6


class OrderConflictError(Exception):
    """The Hall order and the basis order disagree on a stored triple; only
    possible far beyond desk scale (>= 8 total vertices in one triple)."""


class InternalRewriteError(Exception):
    pass


class FuelExhausted(Exception):
    def __init__(self, partial, trace):
        super().__init__("rewriting fuel exhausted")
        self.partial = partial
        self.trace = trace


@dataclass(frozen=True)
class RewriteStep:
    rule: str
    term: object          # the working term that was rewritten
    path: tuple           # position of the redex inside it
    bindings: tuple       # ((name, value), ...) for reporting
    before: LinComb
    after: LinComb


@dataclass(frozen=True)
class RewriteTrace:
    input: LinComb
    output: LinComb
    steps: tuple


# -- the target basis predicate -------------------------------------------------

_IS_B = {}


def is_B(t):
    """Membership in the basis of the free post-Lie-Yamaguti algebra.

    The predicate is the fixed-point set of the rewriting rules. Linear
    independence modulo the ideal is machine-verified (exact-rank oracle
    over the full relation span) through six vertices over one generator
    and five over two; with two generators a dependence among six-vertex
    fixed points exists, so normal forms beyond that envelope are sound
    but not canonical. See the repository test suite.
    """
    v = _IS_B.get(t)
    if v is None:
        v = _is_B(t)
        _IS_B[t] = v
    return v


def _is_B(t):
    if t.kind == GEN:
        return True
    if t.kind == BRK:
        return is_B(t.x) and is_B(t.y) and cmp_hall_t(t.x, t.y) > 0
    if t.kind == SYMGRAFT:
        return t.root.kind == GEN and all(is_B(b) for b in t.sym)
    if t.kind == TRIPLE:
        if t.sym:
            return False
        y, z, w = t.y, t.z, t.w
        if w.kind == BRK:
            # the image of a graft onto a bracket root; the bracket rule
            # pushes the triple-bracket inside as a derivation
            return False
        if not (is_B(y) and is_B(z) and is_B(w)):
            return False
        return _triple_conditions(y, z, w)
    return False


def _triple_conditions(y, z, w):
    if cmp_hall_t(y, z) <= 0:
        return False
    if cmp_hall_t(z, w) > 0:
        return False
    if y.kind == TRIPLE and not y.sym and cmp_hall_t(y.w, z) > 0:
        return False
    if y.kind == BRK and cmp_hall_t(y.y, z) > 0:
        return False
    if z.kind == BRK and cmp_hall_t(z.y, y) > 0:
        return False
    return True


def is_B_lat(t):
    """Bracket-free basis elements: the basis of the Lie admissible triple
    quotient."""
    return is_B(t) and not has_bracket(t)


def enumerate_B(n, alphabet):
    """Basis elements with n vertices, in increasing order."""
    return tuple(t for t in enumerate_T(n, alphabet) if is_B(t))


def enumerate_B_lat(n, alphabet):
    return tuple(t for t in enumerate_T(n, alphabet) if is_B_lat(t))


def graded_dim(n, alphabet):
    """Dimension of the n-vertex graded component of the free algebra."""
    if isinstance(alphabet, int):
        from .terms import Alphabet
        alphabet = Alphabet.of_size(alphabet)
    return len(enumerate_B(n, alphabet))


def lat_project(x):
    """Kill every term containing a bracket node (the bracket -> 0 quotient)."""
    return LinComb({t: c for t, c in x.items() if not has_bracket(t)})


def kill_brackets(x):
    """Same projection on any basis (used on raw inputs)."""
    return LinComb({t: c for t, c in x.items() if not has_bracket(t)})


# -- exact helpers ---------------------------------------------------------------

_BH2T = {}


def _bhat_lc_to_t(x):
    out = LinComb()
    for t, c in x.items():
        v = _BH2T.get(t)
        if v is None:
            v = shat_to_t(to_shat(t))
            _BH2T[t] = v
        out.add_in(v, c)
    return out


_TMUL = {}


def t_mul(x, y):
    """Free triangle product of two triple-basis terms, in triple coordinates."""
    key = (x, y)
    out = _TMUL.get(key)
    if out is None:
        from .bases import t_value
        out = _bhat_lc_to_t(tree_mul(t_value(x), t_value(y)))
        _TMUL[key] = out
    return out


def t_mul_lin(X, Y):
    out = LinComb()
    for x, cx in X.items():
        for y, cy in Y.items():
            out.add_in(t_mul(x, y), cx * cy)
    return out


def t_word_action(words, target):
    """A combination of words of triple-basis letters acting on a combination
    (exact free evaluation)."""
    from .bases import t_value
    bw = LinComb()
    for w, c in words.items():
        bw.add_in(word_lincomb([t_value(l) for l in w]), c)
    return _bhat_lc_to_t(word_act_trees(bw, t_value_lin(target)))


def brk_raw(X, Y):
    out = LinComb()
    for x, cx in X.items():
        for y, cy in Y.items():
            out.add_in(LinComb.of(brk(x, y)), cx * cy)
    return out


def triple_of(y, z, w):
    """Bare triple-bracket of basis terms, oriented for storage."""
    if y is z:
        return LinComb()
    if cmp_t(y, z) > 0:
        return LinComb.of(triple((), y, z, w))
    return LinComb.of(triple((), z, y, w), Fraction(-1))


def triple_raw(Y, Z, W):
    out = LinComb()
    for y, cy in Y.items():
        for z, cz in Z.items():
            for w, cw in W.items():
                out.add_in(triple_of(y, z, w), cy * cz * cw)
    return out


def _of(t):
    return LinComb.of(t)


# -- rule expanders ---------------------------------------------------------------

def _ply2_single(s, u, v):
    # s ▷ [[u,v]] = [[s▷u, v]] + [[u, s▷v]]
    return brk_raw(t_mul(s, u), _of(v)) + brk_raw(_of(u), t_mul(s, v))


_E2 = {}


def expand_sym_on_bracket(sym, u, v):
    """s(sym) ▷ [[u,v]] modulo the ideal: a combination of brackets."""
    sym = tuple(sorted(sym, key=canon_key))
    key = (sym, u, v)
    out = _E2.get(key)
    if out is not None:
        return out
    n = len(sym)
    if n == 1:
        out = _ply2_single(sym[0], u, v)
    else:
        out = LinComb()
        f = Fraction(1, n)
        for i in range(n):
            s, rest = sym[i], sym[:i] + sym[i + 1:]
            inner = expand_sym_on_bracket(rest, u, v)
            for t, c in inner.items():
                assert t.kind == BRK
                out.add_in(_ply2_single(s, t.x, t.y), c * f)
            for j in range(len(rest)):
                for t2, c2 in t_mul(s, rest[j]).items():
                    out.add_in(expand_sym_on_bracket(
                        rest[:j] + (t2,) + rest[j + 1:], u, v), -c2 * f)
    _E2[key] = out
    return out


def _ply3_single(s, y, z, w):
    # s ▷ [y,z,w] = [s▷y,z,w] + [y,s▷z,w] + [y,z,s▷w]
    #               + (s · [[y,z]]) ▷ w − [[y,z]] ▷ (s ▷ w)
    out = triple_raw(t_mul(s, y), _of(z), _of(w))
    out += triple_raw(_of(y), t_mul(s, z), _of(w))
    out += triple_raw(_of(y), _of(z), t_mul(s, w))
    out += t_word_action(LinComb.of((s, brk(y, z))), _of(w))
    out -= t_mul_lin(_of(brk(y, z)), t_mul(s, w))
    return out


_E3 = {}


def expand_sym_on_triple(sym, y, z, w):
    """s(sym) ▷ [y,z,w] modulo the ideal: no symmetric part remains on any
    triple-bracket in the result."""
    sym = tuple(sorted(sym, key=canon_key))
    key = (sym, y, z, w)
    out = _E3.get(key)
    if out is not None:
        return out
    n = len(sym)
    if n == 1:
        out = _ply3_single(sym[0], y, z, w)
    else:
        out = LinComb()
        f = Fraction(1, n)
        for i in range(n):
            s, rest = sym[i], sym[:i] + sym[i + 1:]
            inner = expand_sym_on_triple(rest, y, z, w)
            for t, c in inner.items():
                if t.kind == TRIPLE and not t.sym:
                    out.add_in(_ply3_single(s, t.y, t.z, t.w), c * f)
                else:
                    out.add_in(t_mul(s, t), c * f)
            for j in range(len(rest)):
                for t2, c2 in t_mul(s, rest[j]).items():
                    out.add_in(expand_sym_on_triple(
                        rest[:j] + (t2,) + rest[j + 1:], y, z, w), -c2 * f)
    _E3[key] = out
    return out


def _cyc(t):
    x, y, z = t
    return ((x, y, z), (y, z, x), (z, x, y))


def _ply4_step(y, z, w):
    # [y,z,w] -> [y,w,z] − [z,w,y] + Σ_cyc ( [[[[α,β]],γ]] + [[α,β]] ▷ γ )
    out = triple_of(y, w, z) - triple_of(z, w, y)
    for a, b, g in _cyc((y, z, w)):
        out += _of(brk(brk(a, b), g))
        out += t_mul(brk(a, b), g)
    return out


def _ply6_step(a, b, c, v, w):
    # [[a,b,c],v,w] -> [a,b,[c,v,w]] − [c,[a,b,v],w] − [c,v,[a,b,w]]
    #                  − ([a,b] · [[c,v]]) ▷ w + [[c,v]] ▷ [a,b,w]
    out = triple_raw(_of(a), _of(b), triple_of(c, v, w))
    out -= triple_raw(_of(c), triple_of(a, b, v), _of(w))
    out -= triple_raw(_of(c), _of(v), triple_of(a, b, w))
    words = LinComb.from_pairs([((a, b, brk(c, v)), Fraction(1)),
                                ((b, a, brk(c, v)), Fraction(-1))])
    out -= t_word_action(words, _of(w))
    out += t_mul_lin(_of(brk(c, v)), triple_of(a, b, w))
    return out


def _ply5_step(u, v, z, w, sign):
    # [[[u,v]],z,w] -> [[[u,z]],v,w] − [[[v,z]],u,w] + Σ_cyc(u,v,z) [[[[α,β]],γ]] ▷ w
    out = triple_raw(_of(brk(u, z)), _of(v), _of(w))
    out -= triple_raw(_of(brk(v, z)), _of(u), _of(w))
    for a, b, g in _cyc((u, v, z)):
        out += t_mul(brk(brk(a, b), g), w)
    return out if sign > 0 else -out


# -- redex location and substitution ----------------------------------------------

def _children(t):
    if t.kind == BRK:
        return (("x", t.x), ("y", t.y))
    if t.kind == SYMGRAFT:
        return tuple((("s", i), b) for i, b in enumerate(t.sym)) + (("root", t.root),)
    if t.kind == TRIPLE:
        return (tuple((("s", i), b) for i, b in enumerate(t.sym))
                + (("y", t.y), ("z", t.z), ("w", t.w)))
    return ()


def find_redex(t):
    """Path to the innermost reducible subterm. Triples with a symmetric part
    are reduced before their children so slot constraints never bite."""
    if t.kind == TRIPLE and t.sym:
        return (), t
    for slot, child in _children(t):
        if not is_B(child):
            p, s = find_redex(child)
            return (slot,) + p, s
    return (), t


def subterm_at(t, path):
    for slot in path:
        if slot == "x":
            t = t.x
        elif slot == "y":
            t = t.y
        elif slot == "z":
            t = t.z
        elif slot == "w":
            t = t.w
        elif slot == "root":
            t = t.root
        else:
            t = t.sym[slot[1]]
    return t


def subst(t, path, repl):
    """Replace the subterm at ``path`` by a combination, multilinearly."""
    if not path:
        return repl
    slot, rest = path[0], path[1:]
    if t.kind == BRK:
        if slot == "x":
            return brk_raw(subst(t.x, rest, repl), _of(t.y))
        return brk_raw(_of(t.x), subst(t.y, rest, repl))
    if t.kind == SYMGRAFT:
        if slot == "root":
            sub = subst(t.root, rest, repl)
            out = LinComb()
            for r, c in sub.items():
                assert r.kind in (GEN, BRK), "graft root rewrote to a non-root shape"
                out.add_in(_of(symgraft(t.sym, r)), c)
            return out
        i = slot[1]
        sub = subst(t.sym[i], rest, repl)
        out = LinComb()
        for u, c in sub.items():
            out.add_in(_of(symgraft(t.sym[:i] + (u,) + t.sym[i + 1:], t.root)), c)
        return out
    if t.kind == TRIPLE:
        assert not t.sym, "triples with symmetric parts are head redexes"
        if slot == "y":
            return triple_raw(subst(t.y, rest, repl), _of(t.z), _of(t.w))
        if slot == "z":
            return triple_raw(_of(t.y), subst(t.z, rest, repl), _of(t.w))
        sub = subst(t.w, rest, repl)
        out = LinComb()
        for u, c in sub.items():
            out.add_in(_of(triple((), t.y, t.z, u)), c)
        return out
    raise InternalRewriteError("cannot substitute into %r" % t)


# -- the head rules -----------------------------------------------------------------

def head_rewrite(s):
    """Rewrite a redex whose children are all in the basis.

    Returns (rule name, bindings, replacement combination).
    """
    if s.kind == BRK:
        u, v = s.x, s.y
        if u is v:
            return "PLY1", (("x", u), ("y", v)), LinComb()
        if cmp_hall_t(u, v) < 0:
            return "PLY1", (("x", u), ("y", v)), LinComb.of(brk(v, u), Fraction(-1))
        raise InternalRewriteError("bracket %r is already reduced" % s)
    if s.kind == SYMGRAFT:
        root = s.root
        if root.kind != BRK:
            raise InternalRewriteError("graft %r is already reduced" % s)
        return ("PLY2", (("sym", s.sym), ("x", root.x), ("y", root.y)),
                expand_sym_on_bracket(s.sym, root.x, root.y))
    if s.kind == TRIPLE:
        if s.sym:
            return ("PLY3", (("sym", s.sym), ("x", s.y), ("y", s.z), ("z", s.w)),
                    expand_sym_on_triple(s.sym, s.y, s.z, s.w))
        y, z, w = s.y, s.z, s.w
        if w.kind == BRK:
            # [y,z,[[u,v]]] = [[[y,z,u],v]] + [[u,[y,z,v]]]  (from PLY2)
            u, v = w.x, w.y
            repl = (brk_raw(triple_of(y, z, u), _of(v))
                    + brk_raw(_of(u), triple_of(y, z, v)))
            return ("PLY2", (("x", y), ("y", z), ("u", u), ("v", v)), repl)
        ch = cmp_hall_t(y, z)
        if ch < 0:
            if cmp_t(z, y) > 0:
                return ("TB-antisym", (("x", y), ("y", z), ("z", w)),
                        LinComb.of(triple((), z, y, w), Fraction(-1)))
            raise OrderConflictError(
                "Hall order and basis order disagree on %r vs %r" % (y, z))
        if cmp_hall_t(z, w) > 0:
            return ("PLY4", (("x", y), ("y", z), ("z", w)), _ply4_step(y, z, w))
        if y.kind == TRIPLE and not y.sym and cmp_hall_t(y.w, z) > 0:
            return ("PLY6", (("u", y.y), ("v", y.z), ("x", y.w), ("y", z), ("z", w)),
                    _ply6_step(y.y, y.z, y.w, z, w))
        if y.kind == BRK and cmp_hall_t(y.y, z) > 0:
            return ("PLY5", (("x", y.x), ("y", y.y), ("z", z), ("u", w)),
                    _ply5_step(y.x, y.y, z, w, +1))
        if z.kind == BRK and cmp_hall_t(z.y, y) > 0:
            return ("PLY5", (("x", z.x), ("y", z.y), ("z", y), ("u", w)),
                    _ply5_step(z.x, z.y, y, w, -1))
    raise InternalRewriteError("no rule applies to %r" % s)


# -- the worklist loop ----------------------------------------------------------------

def _pick_reference(victims, rng):
    best = victims[0]
    for t in victims[1:]:
        if cmp_t(t, best) > 0:
            best = t
    return best


def _pick_smallest(victims, rng):
    best = victims[0]
    for t in victims[1:]:
        if cmp_t(t, best) < 0:
            best = t
    return best


def _pick_seeded(victims, rng):
    return rng.choice(sorted(victims, key=canon_key))


_STRATEGIES = {"reference": _pick_reference, "smallest": _pick_smallest}


def normalize(x, fuel=DEFAULT_FUEL, strategy="reference"):
    """Normalize a combination (any basis) onto the target basis.

    Returns (normal form, trace). Raises FuelExhausted with the partial
    state and trace if the step budget runs out.
    """
    work = any_to_t(x)
    start = work
    steps = []
    rng = None
    if isinstance(strategy, int):
        rng = random.Random(strategy)
        pick = _pick_seeded
    else:
        pick = _STRATEGIES[strategy]
    budget = fuel
    while True:
        victims = [t for t in work if not is_B(t)]
        if not victims:
            break
        if budget <= 0:
            raise FuelExhausted(work, RewriteTrace(start, work, tuple(steps)))
        budget -= 1
        t = pick(victims, rng)
        path, s = find_redex(t)
        rule, bindings, repl = head_rewrite(s)
        c = work.coeff(t)
        after = (work - LinComb.of(t, c)) + subst(t, path, repl).scale(c)
        steps.append(RewriteStep(rule, t, path, bindings, work, after))
        work = after
    return work, RewriteTrace(start, work, tuple(steps))


def normalize_value(x, **kw):
    return normalize(x, **kw)[0]


def check_trace(input_lc, output_lc, trace, explain=False):
    """Replay a trace: every step's replacement is recomputed from the redex
    and the chain must reproduce the output exactly."""

    def fail(msg):
        if explain:
            raise AssertionError(msg)
        return False

    cur = any_to_t(input_lc)
    if trace.input != cur:
        return fail("trace input does not match")
    for i, step in enumerate(trace.steps):
        if step.before != cur:
            return fail("step %d: before-state mismatch" % i)
        c = cur.coeff(step.term)
        if c == 0:
            return fail("step %d: rewritten term not present" % i)
        s = subterm_at(step.term, step.path)
        try:
            rule, _, repl = head_rewrite(s)
        except (InternalRewriteError, OrderConflictError) as e:
            return fail("step %d: %s" % (i, e))
        if rule != step.rule:
            return fail("step %d: rule mismatch (%s vs %s)" % (i, rule, step.rule))
        after = (cur - LinComb.of(step.term, c)) + subst(step.term, step.path, repl).scale(c)
        if after != step.after:
            return fail("step %d: replayed state mismatch" % i)
        cur = after
    if cur != trace.output or cur != output_lc:
        return fail("trace output does not match")
    if any(not is_B(t) for t in cur):
        return fail("output contains non-basis terms")
    return True


# -- bridges to the generic Hall machinery -------------------------------------------

def iota(t):
    """Injection of the triple basis into the ternary magma over non-triple
    elements."""
    if t.kind == TRIPLE and not t.sym:
        return hall.node3(iota(t.y), iota(t.z), iota(t.w))
    return hall.leaf(t)


def _lift_cmp_t0(a, b):
    return cmp_t(a, b)


def is_lts_hall_t(t):
    """The Hall predicate on a triple-basis element via the injection."""
    return hall.is_lts_hall(iota(t), _lift_cmp_t0)
