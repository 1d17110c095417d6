"""
Truncated simplicial sets, the nerve of a finite category and decalage.

A k-simplex of a nerve is a composable k-tuple of arrows written in diagrammatic order
(f1, ..., fk); 0-simplices are objects. Face d_0 drops the first arrow, d_k drops the last and
an inner face d_i composes f_i with f_{i+1}. Degeneracy s_i inserts the identity at the i-th
vertex.
"""
from functools import lru_cache

import pandas as pd

import customlogger as logger
from exceptions import DepthTooSmall, NotSimplicial
from logic.category import Functor, cat_coproduct, coslice, untag_coproduct
from logic.finset import FinFn, FinSet, fn_compose
from logic.report import ValidationReport
from settings import DEFAULT_DEPTH, UNIT_ELEMENT


class TruncSimplicialSet:
    def __init__(self, levels, faces, degeneracies, name=None):
        self.levels = list(levels)
        self.faces = dict(faces)
        self.degeneracies = dict(degeneracies)
        self.name = name

    @property
    def depth(self):
        return len(self.levels) - 1

    def face(self, k, i):
        return self.faces[(k, i)]

    def degeneracy(self, k, i):
        return self.degeneracies[(k, i)]

    def level_sizes(self):
        return pd.Series([len(level) for level in self.levels], name=self.name or "S")

    def __repr__(self):
        return "TruncSimplicialSet({}: {})".format(self.name or "S", [len(level) for level in self.levels])


class SimplicialMap:
    def __init__(self, source, target, components, name=None):
        self.source = source
        self.target = target
        self.components = list(components)
        self.name = name


def _composite_equal(report, law, witness_level, lhs, rhs):
    for x in witness_level:
        if lhs(x) != rhs(x):
            report.add(law, x)
            return


def simp_validate(S):
    report = ValidationReport("simplicial set {}".format(S.name or ""))
    n = S.depth
    for k in range(1, n + 1):
        for i in range(k + 1):
            d = S.faces.get((k, i))
            if d is None or d.domain != S.levels[k] or d.codomain != S.levels[k - 1]:
                report.add("face d_{} on level {} is typed".format(i, k), (k, i))
    for k in range(n):
        for i in range(k + 1):
            s = S.degeneracies.get((k, i))
            if s is None or s.domain != S.levels[k] or s.codomain != S.levels[k + 1]:
                report.add("degeneracy s_{} on level {} is typed".format(i, k), (k, i))
    if not report.ok:
        return report
    d, s = S.face, S.degeneracy
    for k in range(2, n + 1):
        for j in range(k + 1):
            for i in range(j):
                law = "d_{} d_{} = d_{} d_{} on level {}".format(i, j, j - 1, i, k)
                _composite_equal(report, law, S.levels[k],
                                 lambda x: d(k - 1, i)(d(k, j)(x)), lambda x: d(k - 1, j - 1)(d(k, i)(x)))
    for k in range(n - 1):
        for j in range(k + 1):
            for i in range(j + 1):
                law = "s_{} s_{} = s_{} s_{} on level {}".format(i, j, j + 1, i, k)
                _composite_equal(report, law, S.levels[k],
                                 lambda x: s(k + 1, i)(s(k, j)(x)), lambda x: s(k + 1, j + 1)(s(k, i)(x)))
    for k in range(n):
        for j in range(k + 1):
            for i in range(k + 2):
                law = "d_{} s_{} on level {}".format(i, j, k)
                if i < j:
                    if k == 0:
                        continue
                    rhs = (lambda x: s(k - 1, j - 1)(d(k, i)(x)))
                elif i in (j, j + 1):
                    rhs = (lambda x: x)
                else:
                    if k == 0:
                        continue
                    rhs = (lambda x: s(k - 1, j)(d(k, i - 1)(x)))
                _composite_equal(report, law, S.levels[k], lambda x: d(k + 1, i)(s(k, j)(x)), rhs)
    return report


def constant_simplicial_set(depth=DEFAULT_DEPTH, point=UNIT_ELEMENT):
    level = FinSet([point])
    levels = [level] * (depth + 1)
    faces = {(k, i): FinFn.identity(level) for k in range(1, depth + 1) for i in range(k + 1)}
    degeneracies = {(k, i): FinFn.identity(level) for k in range(depth) for i in range(k + 1)}
    return TruncSimplicialSet(levels, faces, degeneracies, "point")


def _paths(c, depth):
    levels = [list(c.objects)]
    if depth >= 1:
        levels.append([(f,) for f in c.arrows])
    for _ in range(2, depth + 1):
        levels.append([p + (g,) for p in levels[-1] for g in c.out_arrows(c.cod(p[-1]))])
    return [FinSet(level) for level in levels]


def _vertex(c, path, i):
    return c.dom(path[0]) if i == 0 else c.cod(path[i - 1])


def _nerve_face(c, path, k, i):
    if k == 1:
        return c.cod(path[0]) if i == 0 else c.dom(path[0])
    if i == 0:
        return path[1:]
    if i == k:
        return path[:-1]
    return path[:i - 1] + (c.compose(path[i], path[i - 1]),) + path[i + 1:]


def _nerve_degeneracy(c, simplex, k, i):
    if k == 0:
        return (c.identity(simplex),)
    return simplex[:i] + (c.identity(_vertex(c, simplex, i)),) + simplex[i:]


def nerve(c, depth=DEFAULT_DEPTH):
    if depth < 0:
        raise DepthTooSmall("Nerve depth must be at least 0, got {}".format(depth))
    levels = _paths(c, depth)
    faces = {
        (k, i): FinFn(levels[k], levels[k - 1], {x: _nerve_face(c, x, k, i) for x in levels[k]})
        for k in range(1, depth + 1) for i in range(k + 1)
    }
    degeneracies = {
        (k, i): FinFn(levels[k], levels[k + 1], {x: _nerve_degeneracy(c, x, k, i) for x in levels[k]})
        for k in range(depth) for i in range(k + 1)
    }
    logger.debug("Nerve of {!r} to depth {}: {}".format(c, depth, [len(level) for level in levels]))
    return TruncSimplicialSet(levels, faces, degeneracies, "N({})".format(c.name or "C"))


def simplicial_map_validate(F):
    report = ValidationReport("simplicial map {}".format(F.name or ""))
    S, T = F.source, F.target
    for k in range(1, S.depth + 1):
        for i in range(k + 1):
            report.check(fn_compose(T.face(k, i), F.components[k]) == fn_compose(F.components[k - 1], S.face(k, i)),
                         "commutes with d_{}".format(i), (k, i))
    for k in range(S.depth):
        for i in range(k + 1):
            report.check(fn_compose(T.degeneracy(k, i), F.components[k])
                         == fn_compose(F.components[k + 1], S.degeneracy(k, i)),
                         "commutes with s_{}".format(i), (k, i))
    return report


def dec_simplicial(S):
    """Dec(S) together with the discarded face d_0: Dec(S) -> S."""
    if S.depth < 1:
        raise DepthTooSmall("Decalage needs depth at least 1, got {}".format(S.depth))
    n = S.depth - 1
    levels = S.levels[1:]
    faces = {(k, i): S.face(k + 1, i + 1) for k in range(1, n + 1) for i in range(k + 1)}
    degeneracies = {(k, i): S.degeneracy(k + 1, i + 1) for k in range(n) for i in range(k + 1)}
    dec = TruncSimplicialSet(levels, faces, degeneracies, "Dec({})".format(S.name or "S"))
    truncated = TruncSimplicialSet(S.levels[:n + 1],
                                   {key: v for key, v in S.faces.items() if key[0] <= n},
                                   {key: v for key, v in S.degeneracies.items() if key[0] < n},
                                   S.name)
    d0 = SimplicialMap(dec, truncated, [S.face(k + 1, 0) for k in range(n + 1)], "d0")
    report = simplicial_map_validate(d0)
    if not report.ok:
        raise NotSimplicial(report)
    return dec, d0


def dec_cat(c):
    """Dec(c) as the coproduct of the coslices of c, with Cod: Dec(c) -> c."""
    return _dec_cat(c, c.name)


# keyed on the name too, FinCat equality ignores it
@lru_cache(maxsize=128)
def _dec_cat(c, name):
    total, _ = cat_coproduct([coslice(c, x).cat for x in c.objects])
    dec = untag_coproduct(total, "Dec({})".format(c.name or "C"))
    cod = Functor(dec, c,
                  FinFn(dec.objects, c.objects, {f: c.cod(f) for f in dec.objects}, "Cod_0"),
                  FinFn(dec.arrows, c.arrows, {(f, g): g for (f, g) in dec.arrows}, "Cod_1"),
                  "Cod")
    return dec, cod


def dec_functor(F):
    source, _ = dec_cat(F.source)
    target, _ = dec_cat(F.target)
    return Functor(source, target,
                   FinFn(source.objects, target.objects, {f: F.arr(f) for f in source.objects}),
                   FinFn(source.arrows, target.arrows, {(f, g): (F.arr(f), F.arr(g)) for (f, g) in source.arrows}),
                   "Dec({})".format(F.name or "F"))


def _relabel(simplex, level):
    """A simplex of N(Dec c) on the given level as a simplex of N(c) one level up."""
    if level == 0:
        return (simplex,)
    first = simplex[0]
    return (first[0],) + tuple(g for (_, g) in simplex)


def nerve_dec_compat(c, depth=2):
    if depth < 1:
        raise DepthTooSmall("Comparison depth must be at least 1, got {}".format(depth))
    dec, cod = dec_cat(c)
    left = nerve(dec, depth)
    right, d0 = dec_simplicial(nerve(c, depth + 1))
    report = ValidationReport("N(Dec {}) vs Dec(N {})".format(c.name or "C", c.name or "C"))
    relabel = list()
    for k in range(depth + 1):
        mapping = {x: _relabel(x, k) for x in left.levels[k]}
        relabel.append(mapping)
        image = FinSet(dict.fromkeys(mapping.values()))
        if image != right.levels[k] or len(image) != len(left.levels[k]):
            report.add("relabeling is a bijection", k)
    if not report.ok:
        return report
    for k in range(1, depth + 1):
        for i in range(k + 1):
            for x in left.levels[k]:
                if relabel[k - 1][left.face(k, i)(x)] != right.face(k, i)(relabel[k][x]):
                    report.add("faces agree: d_{} on level {}".format(i, k), x)
                    break
    for k in range(depth):
        for i in range(k + 1):
            for x in left.levels[k]:
                if relabel[k + 1][left.degeneracy(k, i)(x)] != right.degeneracy(k, i)(relabel[k][x]):
                    report.add("degeneracies agree: s_{} on level {}".format(i, k), x)
                    break
    for f in dec.objects:
        report.check(cod.obj(f) == d0.components[0](relabel[0][f]), "Cod agrees with d0 on objects", f)
    for (f, g) in dec.arrows:
        report.check((cod.arr((f, g)),) == d0.components[1](relabel[1][((f, g),)]), "Cod agrees with d0 on arrows", (f, g))
    return report
