"""
Skew monoidales in Span as categories C with a functor R: Dec(C) -> C.

extract reads the category and R off the components of a skew monoidale; build goes back,
splitting the idempotent x -> R(1_x) canonically with U a subset of the objects and j the
inclusion.
"""
import pandas as pd

import customlogger as logger
from exceptions import AxiomsFail, CapExceeded, ConditionsFail
from logic.category import FinCat, Functor, cat_validate, functor_validate
from logic.finset import FinFn, FinSet, count_functions, enumerate_functions
from logic.report import ValidationReport
from logic.simplicial import dec_cat
from logic.skew_monoidale import SkewMonoidaleData, verify, wellformed
from settings import DEFAULT_CAP
from static.condition import Condition
from utils.misc import powerset


class RStructure:
    def __init__(self, cat, R, name=None):
        self.cat = cat
        self.R = R
        self.name = name

    @classmethod
    def from_parts(cls, cat, r_objects, r_arrows, name=None):
        dec, _ = dec_cat(cat)
        return cls(cat, Functor(dec, cat,
                                FinFn(dec.objects, cat.objects, r_objects, "R_0"),
                                FinFn(dec.arrows, cat.arrows, r_arrows, "R_1"), "R"), name)

    def r(self, f):
        return self.R.obj(f)

    def tau(self, f, g):
        return self.R.arr((f, g))

    def idempotent(self, x):
        return self.R.obj(self.cat.identity(x))

    @property
    def U(self):
        return FinSet(x for x in self.cat.objects if self.idempotent(x) == x)

    @property
    def psi(self):
        return FinFn(self.cat.objects, self.U, {x: self.idempotent(x) for x in self.cat.objects}, "psi")

    def __eq__(self, other):
        return isinstance(other, RStructure) and self.cat == other.cat and self.R == other.R

    def __hash__(self):
        return hash(self.R)

    def __repr__(self):
        return "RStructure({}: {!r})".format(self.name or "R", self.cat)


class ConditionReport:
    def __init__(self, subject, sections):
        self.subject = subject
        self.sections = sections

    def __getitem__(self, condition):
        return self.sections[condition]

    @property
    def ok(self):
        return all(section.ok for section in self.sections.values())

    def failing(self):
        return [condition for condition, section in self.sections.items() if not section.ok]

    def summary(self):
        if self.ok:
            return "{}: all conditions hold".format(self.subject)
        return "{}: failing {}".format(self.subject, ", ".join(c.value for c in self.failing()))

    def to_frame(self):
        rows = list()
        for condition, section in self.sections.items():
            witness = "" if section.ok else str(section.violations[0])
            rows.append([condition.value, "PASS" if section.ok else "FAIL", witness])
        return pd.DataFrame(rows, columns=["condition", "verdict", "first violation"])

    def to_dict(self):
        return {
            "subject": self.subject,
            "ok": self.ok,
            "conditions": {c.name: s.to_dict() for c, s in self.sections.items()},
        }

    def __str__(self):
        return "{}\n{}".format(self.summary(), self.to_frame().to_string(index=False))


def check_conditions(rs):
    c, R = rs.cat, rs.R
    sections = {condition: ValidationReport(condition.value) for condition in Condition}
    result = ConditionReport(rs.name or "R-structure", sections)

    sections[Condition.CATEGORY].extend(cat_validate(c))
    if not sections[Condition.CATEGORY].ok:
        return result
    dec, cod = dec_cat(c)

    functor = sections[Condition.FUNCTOR]
    if R.source != dec or R.target != c:
        functor.add("R is a functor Dec(C) -> C", "R")
        return result
    functor.extend(functor_validate(R))

    r, tau = rs.r, rs.tau

    def transported(f, g, h):
        """(h^{gf})^{g^f}, or None when g^f and h^{gf} are not composable."""
        first, second = tau(f, g), tau(c.compose(g, f), h)
        if (first, second) not in dec.arrows:
            return None
        return tau(first, second)

    square = sections[Condition.DEC_SQUARE]
    for f, g in dec.arrows:
        square.check(r(g) == r(tau(f, g)), "r(g^f) = r(g)", (f, g))
    for f, g, h in c.composable_triples():
        value = transported(f, g, h)
        if value is None:
            square.add("g^f and h^{gf} composable", (f, g, h))
        else:
            square.check(tau(g, h) == value, "h^g = (h^{gf})^{g^f}", (f, g, h))

    vertex = sections[Condition.RESTRICTED_VERTEX]
    units = rs.U
    for f in dec.objects:
        if c.dom(f) in units:
            vertex.check(r(f) == cod.obj(f), "R_x = Cod_x on objects", f)
    for f, g in dec.arrows:
        if c.dom(f) in units:
            vertex.check(tau(f, g) == cod.arr((f, g)), "R_x = Cod_x on arrows", (f, g))

    factor = sections[Condition.FACTOR]
    for f in c.arrows:
        for g in c.out_arrows(c.cod(f)):
            if not factor.check(r(tau(f, g)) == r(g), "(factor) on objects", f, "at {!r}".format(g)):
                break
            broken = False
            for h in c.out_arrows(c.cod(g)):
                value = transported(f, g, h)
                if value is None or value != tau(g, h):
                    factor.add("(factor) on arrows", f, "at {!r}".format((g, h)))
                    broken = True
                    break
            if broken:
                break

    ee = sections[Condition.EE]
    for f in dec.objects:
        ee.check(rs.idempotent(c.cod(f)) == rs.idempotent(r(f)), "E(cod f) = E(r f)", f)

    idempotent = sections[Condition.IDEMPOTENT]
    splitting = sections[Condition.SPLITTING]
    for x in c.objects:
        e = rs.idempotent(x)
        idempotent.check(rs.idempotent(e) == e, "E E = E", x)
        splitting.check(e in units, "j psi_x = R(1_x) lands in U", x)
    for u in units:
        splitting.check(rs.idempotent(u) == u, "psi j = 1", u)

    if functor.ok and factor.ok:
        sections[Condition.FACTOR_IMPLIES_EE].check(ee.ok, "(factor) implies (ee)", rs.name or "R")
    return result


def cod_rstructure(c):
    dec, cod = dec_cat(c)
    return RStructure(c, Functor(dec, c, cod.on_objects, cod.on_arrows, "Cod"), "Cod")


def _extract_unchecked(m):
    cat = FinCat(m.C, m.E, m.s.renamed("dom"), m.t.renamed("cod"), m.phi.renamed("id"),
                 {(g, f): m.delta((f, g)) for (f, g) in m.X}, m.name)
    dec, _ = dec_cat(cat)
    return RStructure(cat, Functor(dec, cat,
                                   FinFn(dec.objects, cat.objects, {f: m.r(f) for f in dec.objects}, "R_0"),
                                   FinFn(dec.arrows, cat.arrows, {fg: m.tau(fg) for fg in dec.arrows}, "R_1"),
                                   "R"), m.name)


def extract(m):
    report = verify(m)
    if not report.all_pass:
        raise AxiomsFail(report)
    return _extract_unchecked(m)


def build(rs):
    report = check_conditions(rs)
    if not report.ok:
        raise ConditionsFail(report)
    c = rs.cat
    dec, _ = dec_cat(c)
    U = rs.U
    m = SkewMonoidaleData(
        C=c.objects,
        E=c.arrows,
        s=c.dom.renamed("s"),
        r=rs.R.on_objects.renamed("r"),
        t=c.cod.renamed("t"),
        U=U,
        j=FinFn.inclusion(U, c.objects).renamed("j"),
        phi=c.identity.renamed("phi"),
        psi=rs.psi,
        tau=FinFn(dec.arrows, c.arrows, rs.R.on_arrows.as_dict(), "tau"),
        delta=FinFn(dec.arrows, c.arrows, {(f, g): c.compose(g, f) for (f, g) in dec.arrows}, "delta"),
        name=rs.name,
    )
    logger.debug("Built {!r} from {!r}".format(m, rs))
    return m


def roundtrip(m):
    before = verify(m)
    if not before.all_pass:
        raise AxiomsFail(before)
    rebuilt = build(_extract_unchecked(m))
    report = ValidationReport("round trip {}".format(m.name or ""))
    report.check(rebuilt.C == m.C, "C unchanged", "C")
    report.check(rebuilt.E == m.E, "E unchanged", "E")
    for label in ("s", "r", "t", "phi", "tau", "delta"):
        report.check(getattr(rebuilt, label) == getattr(m, label), "{} unchanged".format(label), label)
    units = {u: m.j(u) for u in m.U}
    if len(set(units.values())) != len(m.U) or FinSet(set(units.values())) != rebuilt.U:
        report.add("j: U -> U' is a bijection", "U")
    else:
        for x in m.C:
            report.check(rebuilt.psi(x) == units[m.psi(x)], "psi' = j psi", x)
    report.check(verify(rebuilt).all_pass, "rebuilt instance verifies", "build")
    return report


def _candidate_count(c):
    dec, _ = dec_cat(c)
    return count_functions(dec.objects, c.objects) * count_functions(dec.arrows, c.arrows)


def enumerate_rstructures(c, cap=DEFAULT_CAP):
    total = _candidate_count(c)
    if total > cap:
        raise CapExceeded("{} candidate functors exceed the cap of {}".format(total, cap))
    dec, _ = dec_cat(c)
    found = 0
    for r in enumerate_functions(dec.objects, c.objects, cap):
        for tau in enumerate_functions(dec.arrows, c.arrows, cap):
            rs = RStructure(c, Functor(dec, c, r, tau, "R"))
            if check_conditions(rs).ok:
                found += 1
                yield rs
    logger.debug("{} of {} candidate functors on {!r} satisfy the conditions".format(found, total, c))


def enumerate_monoidale_structures(c, cap=DEFAULT_CAP):
    """Verified skew monoidales with C, E, s, t, phi, delta fixed by c; r, tau, U and psi vary."""
    dec, _ = dec_cat(c)
    subsets = [FinSet(subset) for subset in powerset(c.objects)]
    total = (count_functions(c.arrows, c.objects) * count_functions(dec.arrows, c.arrows)
             * sum(count_functions(c.objects, u) for u in subsets))
    if total > cap:
        raise CapExceeded("{} candidate structures exceed the cap of {}".format(total, cap))
    delta = FinFn(dec.arrows, c.arrows, {(f, g): c.compose(g, f) for (f, g) in dec.arrows}, "delta")
    found = 0
    for r in enumerate_functions(c.arrows, c.objects, cap):
        for tau in enumerate_functions(dec.arrows, c.arrows, cap):
            for U in subsets:
                j = FinFn.inclusion(U, c.objects)
                for psi in enumerate_functions(c.objects, U, cap):
                    m = SkewMonoidaleData(c.objects, c.arrows, c.dom, r, c.cod, U, j, c.identity, psi, tau, delta)
                    if wellformed(m).ok and verify(m).all_pass:
                        found += 1
                        yield m
    logger.debug("{} of {} candidate structures on {!r} verify".format(found, total, c))
