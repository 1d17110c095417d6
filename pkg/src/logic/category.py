"""
Finite categories given by explicit tables, functors between them, coslice categories
and coproducts. Composition is keyed (g, f) -> g.f and is only defined when cod(f) = dom(g).
"""
from itertools import permutations

import customlogger as logger
from exceptions import DomainMismatch, InvalidCategory, UnknownArrow, UnknownObject
from logic.finset import FinFn, FinSet
from logic.report import ValidationReport


class FinCat:
    def __init__(self, objects, arrows, dom, cod, identity, comp, name=None):
        self.objects = objects
        self.arrows = arrows
        self.dom = dom
        self.cod = cod
        self.identity = identity
        self.comp = dict(comp)
        self.name = name

    @classmethod
    def from_tables(cls, objects, arrows, dom, cod, identity, comp, name=None):
        objects = FinSet(objects)
        arrows = FinSet(arrows)
        return cls(objects, arrows,
                   FinFn(arrows, objects, dom, "dom"),
                   FinFn(arrows, objects, cod, "cod"),
                   FinFn(objects, arrows, identity, "id"),
                   comp, name)

    def compose(self, g, f):
        try:
            return self.comp[(g, f)]
        except KeyError:
            raise DomainMismatch("{!r} and {!r} are not composable in {}".format(g, f, self.name or "category"))

    def out_arrows(self, x):
        return [f for f in self.arrows if self.dom(f) == x]

    def hom(self, x, y):
        return [f for f in self.arrows if self.dom(f) == x and self.cod(f) == y]

    def composable_pairs(self):
        """Pairs (f, g) with cod(f) = dom(g), in diagrammatic order."""
        return [(f, g) for f in self.arrows for g in self.out_arrows(self.cod(f))]

    def composable_triples(self):
        return [(f, g, h) for (f, g) in self.composable_pairs() for h in self.out_arrows(self.cod(g))]

    def __eq__(self, other):
        if not isinstance(other, FinCat):
            return False
        return (self.objects == other.objects and self.arrows == other.arrows
                and self.dom == other.dom and self.cod == other.cod
                and self.identity == other.identity and self.comp == other.comp)

    def __hash__(self):
        return hash((self.objects, self.arrows))

    def __repr__(self):
        return "FinCat({}: {} objects, {} arrows)".format(self.name or "C", len(self.objects), len(self.arrows))


class Functor:
    def __init__(self, source, target, on_objects, on_arrows, name=None):
        self.source = source
        self.target = target
        self.on_objects = on_objects
        self.on_arrows = on_arrows
        self.name = name

    @classmethod
    def from_tables(cls, source, target, on_objects, on_arrows, name=None):
        return cls(source, target,
                   FinFn(source.objects, target.objects, on_objects, "{}_0".format(name or "F")),
                   FinFn(source.arrows, target.arrows, on_arrows, "{}_1".format(name or "F")),
                   name)

    def obj(self, x):
        return self.on_objects(x)

    def arr(self, f):
        return self.on_arrows(f)

    def __eq__(self, other):
        if not isinstance(other, Functor):
            return False
        return (self.source == other.source and self.target == other.target
                and self.on_objects == other.on_objects and self.on_arrows == other.on_arrows)

    def __hash__(self):
        return hash((self.on_objects, self.on_arrows))

    def __repr__(self):
        return "Functor({}: {!r} -> {!r})".format(self.name or "F", self.source, self.target)


class CosliceCat:
    def __init__(self, base, vertex, cat, witnesses):
        self.base = base
        self.vertex = vertex
        self.cat = cat
        self.witnesses = witnesses


def cat_validate(c):
    report = ValidationReport("category {}".format(c.name or ""))
    report.check(c.dom.domain == c.arrows and c.dom.codomain == c.objects, "dom: arrows -> objects", "dom")
    report.check(c.cod.domain == c.arrows and c.cod.codomain == c.objects, "cod: arrows -> objects", "cod")
    report.check(c.identity.domain == c.objects and c.identity.codomain == c.arrows,
                 "id: objects -> arrows", "id")
    if not report.ok:
        return report
    for x in c.objects:
        i = c.identity(x)
        report.check(c.dom(i) == x and c.cod(i) == x, "dom(1_x) = cod(1_x) = x", x)
    for (g, f), h in c.comp.items():
        if f not in c.arrows or g not in c.arrows:
            report.add("composability", (g, f), "unknown arrow")
            continue
        if c.cod(f) != c.dom(g):
            report.add("composability", (g, f), "cod(f) != dom(g)")
            continue
        if h not in c.arrows:
            report.add("closure", (g, f), "composite {!r} is not an arrow".format(h))
            continue
        report.check(c.dom(h) == c.dom(f) and c.cod(h) == c.cod(g), "dom/cod of composite", (g, f))
    for f, g in c.composable_pairs():
        report.check((g, f) in c.comp, "closure", (g, f), "composite missing")
    for f in c.arrows:
        report.check(c.comp.get((f, c.identity(c.dom(f)))) == f, "f.1 = f", f)
        report.check(c.comp.get((c.identity(c.cod(f)), f)) == f, "1.f = f", f)
    for f, g, h in c.composable_triples():
        gf, hg = c.comp.get((g, f)), c.comp.get((h, g))
        if gf is None or hg is None:
            continue
        report.check(c.comp.get((h, gf)) == c.comp.get((hg, f)), "h(gf) = (hg)f", (f, g, h))
    return report


def functor_validate(F):
    src, tgt = F.source, F.target
    report = ValidationReport("functor {}".format(F.name or ""))
    report.check(F.on_objects.domain == src.objects and F.on_objects.codomain == tgt.objects,
                 "object part typed", "objects")
    report.check(F.on_arrows.domain == src.arrows and F.on_arrows.codomain == tgt.arrows,
                 "arrow part typed", "arrows")
    if not report.ok:
        return report
    for f in src.arrows:
        report.check(tgt.dom(F.arr(f)) == F.obj(src.dom(f)), "dom(Ff) = F(dom f)", f)
        report.check(tgt.cod(F.arr(f)) == F.obj(src.cod(f)), "cod(Ff) = F(cod f)", f)
    for x in src.objects:
        report.check(F.arr(src.identity(x)) == tgt.identity(F.obj(x)), "F(1_x) = 1_Fx", x)
    for (g, f), h in src.comp.items():
        if f not in src.arrows or g not in src.arrows or h not in src.arrows:
            continue
        report.check(tgt.comp.get((F.arr(g), F.arr(f))) == F.arr(h), "F(gf) = Fg Ff", (f, g))
    return report


def functor_identity(c):
    return Functor(c, c, FinFn.identity(c.objects), FinFn.identity(c.arrows), "1")


def functor_compose(G, F):
    """G after F."""
    if F.target != G.source:
        raise DomainMismatch("Cannot compose functor {} after {}".format(G.name, F.name))
    return Functor(F.source, G.target,
                   FinFn(F.source.objects, G.target.objects, {x: G.obj(F.obj(x)) for x in F.source.objects}),
                   FinFn(F.source.arrows, G.target.arrows, {f: G.arr(F.arr(f)) for f in F.source.arrows}),
                   "{}{}".format(G.name or "G", F.name or "F"))


def coslice(c, x):
    if x not in c.objects:
        raise UnknownObject("{!r} is not an object of {}".format(x, c.name or "category"))
    objects = FinSet(c.out_arrows(x))
    arrows = FinSet((f, g) for f in objects for g in c.out_arrows(c.cod(f)))
    dom = {(f, g): f for (f, g) in arrows}
    cod = {(f, g): c.compose(g, f) for (f, g) in arrows}
    identity = {f: (f, c.identity(c.cod(f))) for f in objects}
    comp = dict()
    for (f, g) in arrows:
        gf = cod[(f, g)]
        for h in c.out_arrows(c.cod(g)):
            comp[((gf, h), (f, g))] = (f, c.compose(h, g))
    cat = FinCat.from_tables(objects, arrows, dom, cod, identity, comp, "({}|{})".format(x, c.name or "C"))
    witnesses = FinFn(arrows, c.arrows, {(f, g): g for (f, g) in arrows}, "triangle side")
    return CosliceCat(c, x, cat, witnesses)


def coslice_cod(c, x):
    cs = coslice(c, x)
    return Functor(cs.cat, c,
                   FinFn(cs.cat.objects, c.objects, {f: c.cod(f) for f in cs.cat.objects}, "Cod_0"),
                   cs.witnesses.renamed("Cod_1"),
                   "Cod_{}".format(x))


def induced_coslice_functor(T, x):
    source = coslice(T.source, x).cat
    target = coslice(T.target, T.obj(x)).cat
    return Functor(source, target,
                   FinFn(source.objects, target.objects, {f: T.arr(f) for f in source.objects}),
                   FinFn(source.arrows, target.arrows, {(f, g): (T.arr(f), T.arr(g)) for (f, g) in source.arrows}),
                   "({}|{})".format(x, T.name or "T"))


def coslice_of_coslice_iso(c, f):
    """
    (f | (x|C)) -> (y|C) for f: x -> y, sending an object (f, g) to g, with its inverse.
    Both composites are checked to be identity functors.
    """
    if f not in c.arrows:
        raise UnknownArrow("{!r} is not an arrow of {}".format(f, c.name or "category"))
    outer = coslice(c, c.dom(f)).cat
    inner = coslice(outer, f).cat
    target = coslice(c, c.cod(f)).cat
    forward = Functor(inner, target,
                      FinFn(inner.objects, target.objects, {(f_, g): g for (f_, g) in inner.objects}),
                      FinFn(inner.arrows, target.arrows, {((f_, g), (gf, h)): (g, h) for ((f_, g), (gf, h)) in inner.arrows}),
                      "forward")
    inverse = Functor(target, inner,
                      FinFn(target.objects, inner.objects, {g: (f, g) for g in target.objects}),
                      FinFn(target.arrows, inner.arrows, {(g, h): ((f, g), (c.compose(g, f), h)) for (g, h) in target.arrows}),
                      "inverse")
    if functor_compose(inverse, forward) != functor_identity(inner) \
            or functor_compose(forward, inverse) != functor_identity(target):
        raise InvalidCategory("Coslice comparison at {!r} is not invertible".format(f))
    return forward, inverse


def cat_coproduct(cs):
    objects, arrows, dom, cod, identity, comp = [], [], {}, {}, {}, {}
    for i, c in enumerate(cs):
        tag = str(i)
        for x in c.objects:
            objects.append((tag, x))
            identity[(tag, x)] = (tag, c.identity(x))
        for f in c.arrows:
            arrows.append((tag, f))
            dom[(tag, f)] = (tag, c.dom(f))
            cod[(tag, f)] = (tag, c.cod(f))
        for (g, f), h in c.comp.items():
            comp[((tag, g), (tag, f))] = (tag, h)
    total = FinCat.from_tables(objects, arrows, dom, cod, identity, comp, "coproduct")
    injections = list()
    for i, c in enumerate(cs):
        tag = str(i)
        injections.append(Functor(c, total,
                                  FinFn(c.objects, total.objects, {x: (tag, x) for x in c.objects}),
                                  FinFn(c.arrows, total.arrows, {f: (tag, f) for f in c.arrows}),
                                  "in_{}".format(i)))
    return total, injections


def untag_coproduct(c, name=None):
    objects = [x for _, x in c.objects]
    arrows = [f for _, f in c.arrows]
    if len(set(objects)) != len(objects) or len(set(arrows)) != len(arrows):
        raise InvalidCategory("Summands share labels; tags cannot be discarded")
    return FinCat.from_tables(
        objects, arrows,
        {f: c.dom((t, f))[1] for t, f in c.arrows},
        {f: c.cod((t, f))[1] for t, f in c.arrows},
        {x: c.identity((t, x))[1] for t, x in c.objects},
        {(g[1], f[1]): h[1] for (g, f), h in c.comp.items()},
        name)


def find_category_iso(a, b):
    """Searches for an isomorphism a -> b; None when there is none."""
    if len(a.objects) != len(b.objects) or len(a.arrows) != len(b.arrows):
        return None
    a_arrows = a.arrows.elements
    for image in permutations(b.objects.elements):
        on_objects = dict(zip(a.objects.elements, image))
        on_arrows = _match_arrows(a, b, on_objects, a_arrows, 0, dict(), set())
        if on_arrows is not None:
            logger.debug("Found isomorphism {!r} -> {!r}".format(a, b))
            return Functor.from_tables(a, b, on_objects, on_arrows, "iso")
    return None


def _match_arrows(a, b, on_objects, a_arrows, idx, assigned, used):
    if idx == len(a_arrows):
        for (g, f), h in a.comp.items():
            if b.comp.get((assigned[g], assigned[f])) != assigned[h]:
                return None
        return dict(assigned)
    f = a_arrows[idx]
    src, tgt = on_objects[a.dom(f)], on_objects[a.cod(f)]
    if f == a.identity(a.dom(f)):
        candidates = [b.identity(src)]
    else:
        candidates = [g for g in b.hom(src, tgt) if g != b.identity(src)]
    for g in candidates:
        if g in used:
            continue
        assigned[f] = g
        used.add(g)
        found = _match_arrows(a, b, on_objects, a_arrows, idx + 1, assigned, used)
        if found is not None:
            return found
        used.discard(g)
        del assigned[f]
    return None
