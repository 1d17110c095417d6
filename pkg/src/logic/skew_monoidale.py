"""
Skew monoidales in Span, stored by components.

The tensor p: C x C -|-> C is the span C x C <-(s, r)- E -t-> C and the unit j: 1 -|-> C is
1 <- U -j-> C. The 2-cells are stored through their components: rho by (phi, psi), alpha by
(tau, delta) on the set X of pairs (f, g) with t(f) = s(g). lambda is not stored, it is forced
to be (u, f) -> t(f) on the pullback P of j against s and exists exactly when r = t on P.

In the usual arrow notation gf = delta(f, g), g^f = tau(f, g) and 1_x = phi(x).
"""
from concurrent.futures import ThreadPoolExecutor

import pandas as pd

import customlogger as logger
from exceptions import DomainMismatch, NotWellFormed
from logic.finset import FinFn, ONE, enumerate_functions, pullback
from logic.report import ValidationReport, render_element
from logic.span import (Span, SpanTwoCell, chain, flatten, span_identity,
                        structural_iso, tensor, tensor_objects, twocell_identity, twocell_tensor, twocell_vcompose,
                        whisker_left, whisker_right)
from settings import MAX_WORKERS
from static.axiom import AXIOM_EQUATIONS, AXIOM_TITLES, PASTING_LAW, Axiom
from static.verdict import Verdict

COMPONENTS = ("s", "r", "t", "j", "phi", "psi", "tau", "delta")

_right_reading_logged = False


class SkewMonoidaleData:
    def __init__(self, C, E, s, r, t, U, j, phi, psi, tau, delta, name=None):
        self.C = C
        self.E = E
        self.s = s
        self.r = r
        self.t = t
        self.U = U
        self.j = j
        self.phi = phi
        self.psi = psi
        self.name = name
        for label, fn, dom, cod in (("s", s, E, C), ("r", r, E, C), ("t", t, E, C), ("j", j, U, C),
                                    ("phi", phi, C, E), ("psi", psi, C, U)):
            if fn.domain != dom or fn.codomain != cod:
                raise DomainMismatch("{} has the wrong domain or codomain".format(label))
        self.composable = pullback(t, s)
        for label, fn in (("tau", tau), ("delta", delta)):
            if fn.domain != self.composable.apex or fn.codomain != E:
                raise DomainMismatch("{} must be a function X -> E on the pairs with t(f) = s(g)".format(label))
        self.tau = tau
        self.delta = delta
        self.unit_pullback = pullback(j, s)

    @property
    def X(self):
        return self.composable.apex

    @property
    def P(self):
        return self.unit_pullback.apex

    def replace(self, **components):
        name = components.pop("name", self.name)
        fields = {k: getattr(self, k) for k in ("C", "E", "U") + COMPONENTS}
        fields.update(components)
        return SkewMonoidaleData(name=name, **fields)

    def __eq__(self, other):
        if not isinstance(other, SkewMonoidaleData):
            return False
        return all(getattr(self, k) == getattr(other, k) for k in ("C", "E", "U") + COMPONENTS)

    def __hash__(self):
        return hash((self.C, self.E, self.U))

    def __repr__(self):
        return "SkewMonoidaleData({}: |C|={}, |E|={}, |U|={})".format(
            self.name or "m", len(self.C), len(self.E), len(self.U))

    def lambda_map(self):
        return FinFn(self.P, self.C, {(u, f): self.t(f) for (u, f) in self.P}, "lambda")

    def tensor_span(self):
        CC = tensor_objects(self.C, 1, self.C, 1)
        left = FinFn(self.E, CC, {f: (self.s(f), self.r(f)) for f in self.E}, "(s,r)")
        return Span.generator("p", CC, self.C, self.E, left, self.t.renamed("t"), 2, 1)

    def unit_span(self):
        return Span.generator("j", ONE, self.C, self.U, FinFn.to_terminal(self.U), self.j.renamed("j"), 0, 1)

    def alpha_cell(self):
        p, one = self.tensor_span(), span_identity(self.C)
        source = chain(tensor(p, one), p)
        target = chain(tensor(one, p), p)
        mapping = {(fc, g): ((self.s(fc[0]), self.tau((fc[0], g))), self.delta((fc[0], g))) for (fc, g) in source.apex}
        return SpanTwoCell(source, target, FinFn(source.apex, target.apex, mapping), "alpha")

    def lambda_cell(self):
        p, one = self.tensor_span(), span_identity(self.C)
        source = chain(tensor(self.unit_span(), one), p)
        mapping = {(uc, f): self.t(f) for (uc, f) in source.apex}
        return SpanTwoCell(source, one, FinFn(source.apex, one.apex, mapping), "lambda")

    def rho_cell(self):
        p, one = self.tensor_span(), span_identity(self.C)
        target = chain(tensor(one, self.unit_span()), p)
        mapping = {x: ((x, self.psi(x)), self.phi(x)) for x in self.C}
        return SpanTwoCell(one, target, FinFn(one.apex, target.apex, mapping), "rho")


class AxiomReport:
    def __init__(self, subject, wellformedness, pointwise=None, bicategorical=None, lambda_map=None):
        self.subject = subject
        self.wellformedness = wellformedness
        self.pointwise = pointwise
        self.bicategorical = bicategorical
        self.lambda_map = lambda_map

    @property
    def wellformed(self):
        return self.wellformedness.ok

    @staticmethod
    def _verdicts(section):
        if section is None:
            return {axiom: Verdict.SKIPPED for axiom in Axiom}
        return {axiom: Verdict.of(section[axiom].ok) for axiom in Axiom}

    def pointwise_verdicts(self):
        return self._verdicts(self.pointwise)

    def bicategorical_verdicts(self):
        return self._verdicts(self.bicategorical)

    def verdicts(self):
        """Single verdict set; a checker that did not run defers to the other."""
        if self.pointwise is not None:
            return self.pointwise_verdicts()
        return self.bicategorical_verdicts()

    @property
    def cross_check(self):
        return self.pointwise_verdicts() == self.bicategorical_verdicts()

    @property
    def all_pass(self):
        return self.wellformed and self.cross_check and all(v == Verdict.PASS for v in self.verdicts().values())

    def failing_axioms(self):
        return [axiom for axiom, verdict in self.verdicts().items() if verdict == Verdict.FAIL]

    def witnesses(self, axiom, checker="pointwise"):
        section = self.pointwise if checker == "pointwise" else self.bicategorical
        if section is None:
            return []
        return section[axiom].witnesses()

    def summary(self):
        if not self.wellformed:
            return "{}: not well-formed ({})".format(self.subject, ", ".join(self.wellformedness.laws()))
        failing = self.failing_axioms()
        return "{}: {}; checkers {}".format(
            self.subject,
            "all axioms pass" if not failing else "failing " + ", ".join(AXIOM_TITLES[a] for a in failing),
            "agree" if self.cross_check else "DISAGREE")

    def to_frame(self):
        pointwise, bicategorical = self.pointwise_verdicts(), self.bicategorical_verdicts()
        rows = list()
        for axiom in Axiom:
            witness = ""
            if self.pointwise is not None and not self.pointwise[axiom].ok:
                witness = render_element(self.pointwise[axiom].violations[0].witness)
            rows.append([AXIOM_TITLES[axiom], pointwise[axiom].value, bicategorical[axiom].value,
                         "AGREE" if pointwise[axiom] == bicategorical[axiom] else "DISAGREE", witness])
        return pd.DataFrame(rows, columns=["axiom", "pointwise", "bicategorical", "cross-check", "witness"])

    def to_dict(self):
        return {
            "subject": self.subject,
            "wellformed": self.wellformedness.to_dict(),
            "pointwise": {a.name: v.value for a, v in self.pointwise_verdicts().items()},
            "bicategorical": {a.name: v.value for a, v in self.bicategorical_verdicts().items()},
            "cross_check": self.cross_check,
            "all_pass": self.all_pass,
            "failures": {
                a.name: self.pointwise[a].to_dict()["violations"]
                for a in Axiom if self.pointwise is not None and not self.pointwise[a].ok
            },
        }

    def __str__(self):
        lines = [self.summary(), self.to_frame().to_string(index=False)]
        if not self.wellformed:
            lines.append(str(self.wellformedness))
        for section in (self.pointwise or {}).values():
            if not section.ok:
                lines.append(str(section))
        return "\n".join(lines)


def wellformed(m):
    report = ValidationReport("well-formedness")
    for x in m.C:
        f = m.phi(x)
        report.check(m.t(f) == x, "t phi = 1", x)
        report.check(m.s(f) == x, "s phi = 1", x)
        report.check(m.r(f) == m.j(m.psi(x)), "r(1_x) = j(psi_x)", x)
    for f, g in m.X:
        gf, gf_ = m.delta((f, g)), m.tau((f, g))
        report.check(m.t(gf) == m.t(g), "t delta = t l", (f, g))
        report.check(m.s(gf) == m.s(f), "s delta = s h", (f, g))
        report.check(m.s(gf_) == m.r(f), "s tau = r h", (f, g))
        report.check(m.r(gf_) == m.r(g), "r(g^f) = r(g)", (f, g))
        report.check(m.r(gf) == m.t(gf_), "r delta = t tau", (f, g))
    for u, f in m.P:
        report.check(m.r(f) == m.t(f), "rq = tq", (u, f))
    if report.ok:
        logger.debug("{!r} is well-formed".format(m))
    return report


def _require_wellformed(m):
    report = wellformed(m)
    if not report.ok:
        raise NotWellFormed(report.summary())
    return report


def _axiom_sections():
    return {axiom: ValidationReport(AXIOM_TITLES[axiom]) for axiom in Axiom}


def _log_right_reading():
    global _right_reading_logged
    if not _right_reading_logged:
        logger.warning("Axiom (3) uses tau(f, 1_y) = 1_r(f); the variant with r(g) in the subscript is not checked")
        _right_reading_logged = True


def axioms_pointwise(m):
    well = _require_wellformed(m)
    sections = _axiom_sections()
    delta, tau, phi, psi = m.delta, m.tau, m.phi, m.psi
    eq = AXIOM_EQUATIONS

    unit_unit = sections[Axiom.UNIT_UNIT]
    for u in m.U:
        unit_unit.check(psi(m.j(u)) == u, eq[Axiom.UNIT_UNIT][0], u)

    _log_right_reading()
    right = sections[Axiom.RIGHT]
    for f in m.E:
        y = phi(m.t(f))
        right.check(psi(m.t(f)) == psi(m.r(f)), eq[Axiom.RIGHT][0], f)
        right.check(tau((f, y)) == phi(m.r(f)), eq[Axiom.RIGHT][1], f)
        right.check(delta((f, y)) == f, eq[Axiom.RIGHT][2], f)

    image_j = set(m.j(u) for u in m.U)
    left = sections[Axiom.LEFT]
    for f, g in m.X:
        if m.s(f) in image_j:
            left.check(tau((f, g)) == g, eq[Axiom.LEFT][0], (f, g))

    middle = sections[Axiom.MIDDLE]
    for f in m.E:
        middle.check(delta((phi(m.s(f)), f)) == f, eq[Axiom.MIDDLE][0], f)

    pentagon = sections[Axiom.PENTAGON]
    by_source = dict()
    for h in m.E:
        by_source.setdefault(m.s(h), []).append(h)
    for f, g in m.X:
        gf, g_f = delta((f, g)), tau((f, g))
        for h in by_source.get(m.t(g), ()):
            hg, h_gf = delta((g, h)), tau((gf, h))
            pentagon.check(delta((gf, h)) == delta((f, hg)), eq[Axiom.PENTAGON][0], (f, g, h))
            pentagon.check(tau((f, hg)) == delta((g_f, h_gf)), eq[Axiom.PENTAGON][1], (f, g, h))
            pentagon.check(tau((g, h)) == tau((g_f, h_gf)), eq[Axiom.PENTAGON][2], (f, g, h))

    return AxiomReport(m.name, well, pointwise=sections, lambda_map=m.lambda_map())


class _Pasting:
    """Both sides of each axiom as pasted 2-cells in Span."""

    def __init__(self, m):
        self.p = m.tensor_span()
        self.j = m.unit_span()
        self.one = span_identity(m.C)
        self.alpha = m.alpha_cell()
        self.lam = m.lambda_cell()
        self.rho = m.rho_cell()
        self.one_cell = twocell_identity(self.one)

    @staticmethod
    def then(*cells):
        """Vertical composite in the order given, bridging boundaries with structural isos."""
        result = cells[0]
        for cell in cells[1:]:
            if result.target != cell.source:
                result = twocell_vcompose(structural_iso(result.target, cell.source), result)
            result = twocell_vcompose(cell, result)
        return result

    def pentagon(self):
        p, one, a = self.p, self.one, self.alpha
        lhs = self.then(whisker_left(tensor(p, one, one), a),
                        whisker_left(tensor(one, one, p), a))
        rhs = self.then(whisker_right(twocell_tensor(a, self.one_cell), p),
                        whisker_left(tensor(one, p, one), a),
                        whisker_right(twocell_tensor(self.one_cell, a), p))
        return lhs, rhs

    def left(self):
        p, one, j = self.p, self.one, self.j
        lhs = self.then(whisker_left(tensor(j, one, one), self.alpha),
                        whisker_left(p, self.lam))
        rhs = whisker_right(twocell_tensor(self.lam, self.one_cell), p)
        return lhs, rhs

    def right(self):
        p, one, j = self.p, self.one, self.j
        lhs = self.then(whisker_left(p, self.rho),
                        whisker_left(tensor(one, one, j), self.alpha))
        rhs = whisker_right(twocell_tensor(self.one_cell, self.rho), p)
        return lhs, rhs

    def middle(self):
        p, one, j = self.p, self.one, self.j
        lhs = self.then(whisker_right(twocell_tensor(self.rho, self.one_cell), p),
                        whisker_left(tensor(one, j, one), self.alpha),
                        whisker_right(twocell_tensor(self.one_cell, self.lam), p))
        return lhs, twocell_identity(p)

    def unit_unit(self):
        j = self.j
        lhs = self.then(whisker_left(j, self.rho), whisker_left(j, self.lam))
        return lhs, twocell_identity(j)

    def sides(self, axiom):
        return {
            Axiom.PENTAGON: self.pentagon,
            Axiom.LEFT: self.left,
            Axiom.RIGHT: self.right,
            Axiom.MIDDLE: self.middle,
            Axiom.UNIT_UNIT: self.unit_unit,
        }[axiom]()


def _flat_map(cell):
    _, source_iso = flatten(cell.source)
    _, target_iso = flatten(cell.target)
    return {source_iso.map(x): target_iso.map(cell.map(x)) for x in cell.source.apex}


def compare_pastings(lhs, rhs, report):
    """Compares two 2-cells with structurally isomorphic boundaries in normal form."""
    structural_iso(lhs.source, rhs.source)
    structural_iso(lhs.target, rhs.target)
    left_map, right_map = _flat_map(lhs), _flat_map(rhs)
    for x, y in left_map.items():
        other = right_map[x]
        report.check(y == other, PASTING_LAW, x, "{} != {}".format(render_element(y), render_element(other)))
    return report


def axioms_bicategorical(m):
    well = _require_wellformed(m)
    pasting = _Pasting(m)
    sections = _axiom_sections()
    for axiom in Axiom:
        with logger.timed("pasting {}".format(AXIOM_TITLES[axiom])):
            lhs, rhs = pasting.sides(axiom)
            compare_pastings(lhs, rhs, sections[axiom])
    return AxiomReport(m.name, well, bicategorical=sections, lambda_map=m.lambda_map())


def verify(m):
    well = wellformed(m)
    if not well.ok:
        logger.debug("{!r} is not well-formed; axioms skipped".format(m))
        return AxiomReport(m.name, well)
    with ThreadPoolExecutor(max_workers=MAX_WORKERS) as executor:
        pointwise = executor.submit(axioms_pointwise, m)
        bicategorical = executor.submit(axioms_bicategorical, m)
        pointwise, bicategorical = pointwise.result(), bicategorical.result()
    report = AxiomReport(m.name, well, pointwise.pointwise, bicategorical.bicategorical, pointwise.lambda_map)
    if not report.cross_check:
        logger.warning("Checkers disagree on {!r}: {} vs {}".format(
            m, report.pointwise_verdicts(), report.bicategorical_verdicts()))
    return report


def constraint_invertibility(m):
    _require_wellformed(m)
    return {
        "alpha": m.alpha_cell().map.is_bijective(),
        "lambda": m.lambda_cell().map.is_bijective(),
        "rho": m.rho_cell().map.is_bijective(),
    }


def surjective_unit_forces_r_eq_t(m):
    """If j is surjective then r = t."""
    if not m.j.is_surjective():
        return True
    return all(m.r(f) == m.t(f) for f in m.E)


def lambda_is_unique(m):
    """Counts the 2-cells with lambda's boundary; the derived one must be the only one."""
    cell = m.lambda_cell()
    count = 0
    for candidate in enumerate_functions(cell.source.apex, cell.target.apex):
        if all(cell.target.left(candidate(x)) == cell.source.left(x)
               and cell.target.right(candidate(x)) == cell.source.right(x) for x in cell.source.apex):
            count += 1
            if candidate != cell.map:
                return False
    return count == 1

