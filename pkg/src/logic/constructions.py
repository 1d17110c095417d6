"""
Skew monoidales and categories coming from monoids and from small categories.
"""
import customlogger as logger
from exceptions import InvalidCategory, MonoidLawsFail, NotAMonoidMorphism
from logic.category import FinCat, Functor, cat_validate, find_category_iso, functor_validate
from logic.characterization import build, cod_rstructure, extract
from logic.finset import FinFn, FinSet, product, pullback
from logic.report import ValidationReport
from logic.simplicial import dec_cat, dec_functor
from logic.skew_monoidale import SkewMonoidaleData
from settings import UNIT_ELEMENT

POINT = "•"


class FinMonoid:
    def __init__(self, carrier, mul, unit, name=None):
        self.carrier = carrier
        self.mul = mul
        self.unit = unit
        self.name = name

    @classmethod
    def from_table(cls, elements, table, unit, name=None):
        carrier = FinSet(elements)
        pairs = product(carrier, carrier).apex
        return cls(carrier, FinFn(pairs, carrier, table, "mul"), unit, name)

    def __call__(self, a, b):
        return self.mul((a, b))

    def validate(self):
        report = ValidationReport("monoid {}".format(self.name or ""))
        if self.unit not in self.carrier:
            report.add("unit is an element", self.unit)
            return report
        for a in self.carrier:
            report.check(self(self.unit, a) == a, "e a = a", a)
            report.check(self(a, self.unit) == a, "a e = a", a)
            for b in self.carrier:
                for c in self.carrier:
                    report.check(self(self(a, b), c) == self(a, self(b, c)), "(ab)c = a(bc)", (a, b, c))
        return report

    def __repr__(self):
        return "FinMonoid({}: {} elements)".format(self.name or "M", len(self.carrier))


class MonoidMorphism:
    def __init__(self, source, target, fn, name=None):
        self.source = source
        self.target = target
        self.fn = fn
        self.name = name

    def validate(self):
        report = ValidationReport("monoid morphism {}".format(self.name or ""))
        report.check(self.fn(self.source.unit) == self.target.unit, "f(e) = e", self.source.unit)
        for a in self.source.carrier:
            for b in self.source.carrier:
                report.check(self.fn(self.source(a, b)) == self.target(self.fn(a), self.fn(b)),
                             "f(ab) = f(a)f(b)", (a, b))
        return report


def cyclic_monoid(n):
    elements = [str(i) for i in range(n)]
    table = {(str(a), str(b)): str((a + b) % n) for a in range(n) for b in range(n)}
    return FinMonoid.from_table(elements, table, "0", "Z/{}".format(n))


def trivial_monoid():
    return FinMonoid.from_table(["e"], {("e", "e"): "e"}, "e", "1")


def left_absorbing_monoid():
    elements = ["1", "a", "b"]
    table = dict()
    for x in elements:
        for y in elements:
            table[(x, y)] = y if x == "1" else x
    return FinMonoid.from_table(elements, table, "1", "left-absorbing")


def reduction_morphism(source, target):
    """Z/n -> Z/m, k -> k mod m, for cyclic monoids with m dividing n."""
    m = len(target.carrier)
    return MonoidMorphism(source, target,
                          FinFn(source.carrier, target.carrier, {a: str(int(a) % m) for a in source.carrier}),
                          "mod {}".format(m))


def _require_monoid(M):
    report = M.validate()
    if not report.ok:
        raise MonoidLawsFail(report.summary())


def monoid_to_monoidale(M):
    _require_monoid(M)
    C = M.carrier
    E = product(C, C).apex
    U = FinSet([UNIT_ELEMENT])
    t = FinFn(E, C, {(a, b): M(a, b) for (a, b) in E}, "mul")
    X = pullback(t, FinFn(E, C, {(a, b): a for (a, b) in E})).apex
    return SkewMonoidaleData(
        C=C, E=E,
        s=FinFn(E, C, {(a, b): a for (a, b) in E}, "pi1"),
        r=FinFn(E, C, {(a, b): b for (a, b) in E}, "pi2"),
        t=t,
        U=U,
        j=FinFn(U, C, {UNIT_ELEMENT: M.unit}, "eta"),
        phi=FinFn(C, E, {a: (a, M.unit) for a in C}, "(1,eta)"),
        psi=FinFn.to_terminal(C),
        tau=FinFn(X, E, {((a, b), (_, c)): (b, c) for ((a, b), (_, c)) in X}, "tau"),
        delta=FinFn(X, E, {((a, b), (_, c)): (a, M(b, c)) for ((a, b), (_, c)) in X}, "delta"),
        name="monoidale({})".format(M.name or "M"),
    )


def monoid_category(M):
    """T(M): objects the elements, an arrow (a, b): a -> ab for every pair."""
    _require_monoid(M)
    arrows = product(M.carrier, M.carrier).apex
    comp = dict()
    for (a, b) in arrows:
        for c in M.carrier:
            comp[((M(a, b), c), (a, b))] = (a, M(b, c))
    return FinCat.from_tables(M.carrier, arrows,
                              {(a, b): a for (a, b) in arrows},
                              {(a, b): M(a, b) for (a, b) in arrows},
                              {a: (a, M.unit) for a in M.carrier},
                              comp, "T({})".format(M.name or "M"))


def delooping(M):
    """BM, with g.f = f g so that composing in diagrammatic order multiplies left to right."""
    _require_monoid(M)
    return FinCat.from_tables([POINT], M.carrier,
                              {a: POINT for a in M.carrier},
                              {a: POINT for a in M.carrier},
                              {POINT: M.unit},
                              {(g, f): M(f, g) for f in M.carrier for g in M.carrier},
                              "B{}".format(M.name or "M"))


def _require_morphism(f):
    report = f.validate()
    if not report.ok:
        raise NotAMonoidMorphism(report.summary())


def delooping_functor(f):
    _require_morphism(f)
    return Functor.from_tables(delooping(f.source), delooping(f.target),
                               {POINT: POINT}, f.fn.as_dict(), "B{}".format(f.name or "f"))


def mon_functor_T(f):
    _require_morphism(f)
    source, target = monoid_category(f.source), monoid_category(f.target)
    functor = Functor.from_tables(source, target,
                                  f.fn.as_dict(),
                                  {(a, b): (f.fn(a), f.fn(b)) for (a, b) in source.arrows},
                                  "T({})".format(f.name or "f"))
    report = functor_validate(functor)
    if not report.ok:
        logger.warning("T({}) is not functorial: {}".format(f.name, report.summary()))
    return functor


def category_to_monoidale(c):
    report = cat_validate(c)
    if not report.ok:
        raise InvalidCategory(report.summary())
    C = c.arrows
    composable = pullback(c.cod, c.dom)
    E = composable.apex
    t = FinFn(E, C, {(f, g): c.compose(g, f) for (f, g) in E}, "comp")
    s = composable.proj1.renamed("pi1")
    X = pullback(t, s).apex
    return SkewMonoidaleData(
        C=C, E=E, s=s,
        r=composable.proj2.renamed("pi2"),
        t=t,
        U=c.objects,
        j=c.identity.renamed("id"),
        phi=FinFn(C, E, {a: (a, c.identity(c.cod(a))) for a in C}, "phi"),
        psi=FinFn(C, c.objects, {a: c.cod(a) for a in C}, "cod"),
        tau=FinFn(X, E, {((f, g), (gf, h)): (g, h) for ((f, g), (gf, h)) in X}, "tau"),
        delta=FinFn(X, E, {((f, g), (gf, h)): (f, c.compose(h, g)) for ((f, g), (gf, h)) in X}, "delta"),
        name="monoidale({})".format(c.name or "C"),
    )


def restricted_unit_monoidale(c):
    """The skew monoidale with unit C <- C -> C whose category is c and R = Cod."""
    return build(cod_rstructure(c))


def terminal_monoidale():
    point = FinSet([POINT])
    X = FinSet([(POINT, POINT)])
    return SkewMonoidaleData(point, point, FinFn.identity(point), FinFn.identity(point), FinFn.identity(point),
                             point, FinFn.identity(point), FinFn.identity(point), FinFn.identity(point),
                             FinFn(X, point, {(POINT, POINT): POINT}), FinFn(X, point, {(POINT, POINT): POINT}),
                             "terminal")


def alpha_is_identity(M):
    """alpha read through X = M^3 = Y, ((a,b),(ab,c)) -> (a,b,c) <- ((a,(b,c)),(a,bc))."""
    m = monoid_to_monoidale(M)
    alpha = m.alpha_cell()
    for fc, g in alpha.source.apex:
        (a, b), c = fc[0], g[1]
        (_, (b_, c_)), (a_, _) = alpha.map((fc, g))
        if (a_, b_, c_) != (a, b, c):
            return False
    return True


def dec_comparison(M, morphism=None):
    _require_monoid(M)
    report = ValidationReport("T({0}) vs Dec(B{0})".format(M.name or "M"))
    T = monoid_category(M)
    BM = delooping(M)
    dec, _ = dec_cat(BM)
    report.check(T == dec, "T(M) = Dec(BM)", M.name or "M")
    if T != dec:
        report.check(find_category_iso(T, dec) is not None, "T(M) isomorphic to Dec(BM)", M.name or "M")
    report.check(extract(monoid_to_monoidale(M)).cat == T, "extracted category is T(M)", M.name or "M")
    if morphism is not None:
        report.check(mon_functor_T(morphism) == dec_functor(delooping_functor(morphism)),
                     "T(f) = Dec(Bf)", morphism.name or "f")
    return report


def category_dec_comparison(c):
    """The skew monoidale of a category c has category Dec(c) and R = Dec(Cod)."""
    report = ValidationReport("category_to_monoidale({}) vs Dec".format(c.name or "C"))
    rs = extract(category_to_monoidale(c))
    dec, cod = dec_cat(c)
    report.check(rs.cat == dec, "extracted category is Dec(C)", c.name or "C")
    if rs.cat == dec:
        report.check(rs.R == dec_functor(cod), "R = Dec(Cod)", c.name or "C")
    return report


def monoidale_comparison(a, b):
    """Equal in every component once the two unit sets are identified along j."""
    report = ValidationReport("{} vs {}".format(a.name or "m", b.name or "m"))
    for label in ("C", "E", "s", "r", "t", "phi", "tau", "delta"):
        report.check(getattr(a, label) == getattr(b, label), "{} equal".format(label), label)
    if not report.ok:
        return report
    k = dict()
    for u in a.U:
        matches = [v for v in b.U if b.j(v) == a.j(u)]
        if len(matches) != 1:
            report.add("U identified along j", u, "{} matches".format(len(matches)))
        else:
            k[u] = matches[0]
    if not report.ok or len(set(k.values())) != len(b.U):
        report.check(report.ok, "U identified along j", "U", "not onto")
        return report
    for x in a.C:
        report.check(k[a.psi(x)] == b.psi(x), "psi agrees under U = U'", x)
    return report


def delooping_monoidale_comparison(M):
    """The skew monoidale of BM against the one of M."""
    return monoidale_comparison(category_to_monoidale(delooping(M)), monoid_to_monoidale(M))


def walking_arrow():
    return FinCat.from_tables(["a", "b"], ["1a", "1b", "u"],
                              {"1a": "a", "1b": "b", "u": "a"},
                              {"1a": "a", "1b": "b", "u": "b"},
                              {"a": "1a", "b": "1b"},
                              {("1a", "1a"): "1a", ("1b", "1b"): "1b", ("u", "1a"): "u", ("1b", "u"): "u"},
                              "2")


def terminal_category():
    return FinCat.from_tables([POINT], ["1"], {"1": POINT}, {"1": POINT}, {POINT: "1"}, {("1", "1"): "1"}, "1")

