import unittest

from exceptions import AxiomsFail, CapExceeded, ConditionsFail
from logic.category import FinCat, Functor
from logic.characterization import (RStructure, build, check_conditions, cod_rstructure,
                                    enumerate_monoidale_structures, enumerate_rstructures, extract, roundtrip)
from logic.constructions import (cyclic_monoid, delooping, monoid_category, restricted_unit_monoidale,
                                 terminal_category, terminal_monoidale, walking_arrow)
from logic.finset import FinFn, enumerate_functions
from logic.simplicial import dec_cat
from logic.skew_monoidale import verify
from serialization import instance_file
from settings import FIXTURES_PATH
from static.condition import Condition

# Valid R-structures on the walking arrow 2 and on the terminal category, counted by brute force.
TWO_RSTRUCTURES = 3
ONE_RSTRUCTURES = 1


def fixture(name):
    return instance_file.load(FIXTURES_PATH / name).value


def rstructure(c, r_objects, r_arrows):
    return RStructure.from_parts(c, r_objects, r_arrows)


def non_associative_category():
    """One object, arrows e, a, b with e the identity and (aa)a = b != a = a(aa)."""
    arrows = ["e", "a", "b"]
    comp = {(x, "e"): x for x in arrows}
    comp.update({("e", x): x for x in arrows})
    comp.update({("a", "a"): "b", ("a", "b"): "a", ("b", "a"): "b", ("b", "b"): "a"})
    return FinCat.from_tables(["*"], arrows, {x: "*" for x in arrows}, {x: "*" for x in arrows}, {"*": "e"}, comp, "M")


class TestExtract(unittest.TestCase):
    def test_zmod2(self):
        rs = extract(fixture("zmod2.json"))
        self.assertEqual(rs.cat, monoid_category(cyclic_monoid(2)))
        for f in rs.cat.arrows:
            self.assertEqual(rs.r(f), f[1])
        self.assertTrue(check_conditions(rs).ok)

    def test_broken_instance(self):
        with self.assertRaises(AxiomsFail) as ctx:
            extract(fixture("broken_pentagon.json"))
        self.assertFalse(ctx.exception.report.all_pass)

    def test_terminal(self):
        rs = extract(terminal_monoidale())
        self.assertEqual(len(rs.cat.objects), 1)
        self.assertEqual(len(rs.cat.arrows), 1)

    def test_restricted_unit_recovers_cod(self):
        for c in (terminal_category(), walking_arrow(), delooping(cyclic_monoid(2))):
            m = restricted_unit_monoidale(c)
            self.assertEqual(m.U, c.objects)
            rs = extract(m)
            self.assertEqual(rs.R, cod_rstructure(c).R)
            for f, g in m.X:
                self.assertEqual(rs.tau(f, g), g)


class TestConditions(unittest.TestCase):
    def test_cod_is_valid(self):
        for c in (terminal_category(), walking_arrow(), delooping(cyclic_monoid(3))):
            report = check_conditions(cod_rstructure(c))
            self.assertTrue(report.ok, report.summary())

    def test_constant_functor_fails_restricted_vertex(self):
        c = walking_arrow()
        dec, _ = dec_cat(c)
        rs = rstructure(c, {f: "a" for f in dec.objects}, {fg: "1a" for fg in dec.arrows})
        report = check_conditions(rs)
        self.assertTrue(report[Condition.FUNCTOR].ok)
        self.assertEqual(report.failing(), [Condition.RESTRICTED_VERTEX])

    def test_factor_and_ee_fail_together(self):
        c = walking_arrow()
        dec, _ = dec_cat(c)
        rs = rstructure(c, {"1a": "b", "u": "b", "1b": "a"}, {fg: "1a" for fg in dec.arrows})
        report = check_conditions(rs)
        self.assertFalse(report[Condition.FACTOR].ok)
        self.assertFalse(report[Condition.EE].ok)
        with self.assertRaises(ConditionsFail):
            build(rs)

    def test_factor_implies_ee_on_every_candidate(self):
        c = walking_arrow()
        dec, _ = dec_cat(c)
        for r in enumerate_functions(dec.objects, c.objects):
            for tau in enumerate_functions(dec.arrows, c.arrows):
                report = check_conditions(RStructure(c, Functor(dec, c, r, tau)))
                self.assertTrue(report[Condition.FACTOR_IMPLIES_EE].ok)
                if report[Condition.FUNCTOR].ok and report[Condition.FACTOR].ok:
                    self.assertTrue(report[Condition.EE].ok)

    def test_underlying_table_must_be_a_category(self):
        rs = cod_rstructure(non_associative_category())
        report = check_conditions(rs)
        self.assertEqual(report.failing(), [Condition.CATEGORY])
        self.assertIn("h(gf) = (hg)f", report[Condition.CATEGORY].laws())
        with self.assertRaises(ConditionsFail):
            build(rs)

    def test_report_table(self):
        frame = check_conditions(cod_rstructure(walking_arrow())).to_frame()
        self.assertEqual(set(frame["verdict"]), {"PASS"})
        self.assertEqual(len(frame), len(Condition))


class TestBuild(unittest.TestCase):
    def test_build_cod(self):
        m = build(cod_rstructure(walking_arrow()))
        self.assertEqual(len(m.U), 2)
        self.assertTrue(verify(m).all_pass)

    def test_bundled_rstructure(self):
        rs = fixture("two-cod.json")
        self.assertEqual(rs, cod_rstructure(walking_arrow()))
        self.assertTrue(verify(build(rs)).all_pass)

    def test_splitting_uses_fixed_points(self):
        c = walking_arrow()
        dec, _ = dec_cat(c)
        rs = rstructure(c, {f: "b" for f in dec.objects}, {fg: "1b" for fg in dec.arrows})
        self.assertTrue(check_conditions(rs).ok)
        m = build(rs)
        self.assertEqual(list(m.U), ["b"])
        self.assertEqual(m.psi("a"), "b")
        self.assertTrue(verify(m).all_pass)

    def test_roundtrip(self):
        for m in (fixture("zmod2.json"), fixture("terminal.json"), fixture("empty.json"),
                  restricted_unit_monoidale(walking_arrow())):
            report = roundtrip(m)
            self.assertTrue(report.ok, report.summary())

    def test_roundtrip_needs_valid_instance(self):
        with self.assertRaises(AxiomsFail):
            roundtrip(fixture("broken_pentagon.json"))


class TestEnumeration(unittest.TestCase):
    def test_counts(self):
        self.assertEqual(len(list(enumerate_rstructures(walking_arrow()))), TWO_RSTRUCTURES)
        self.assertEqual(len(list(enumerate_rstructures(terminal_category()))), ONE_RSTRUCTURES)

    def test_walking_arrow_structures(self):
        found = {tuple(rs.r(f) for f in ("1a", "u", "1b")) for rs in enumerate_rstructures(walking_arrow())}
        self.assertEqual(found, {("b", "b", "b"), ("a", "b", "b"), ("a", "b", "a")})

    def test_dual_oracle_agrees(self):
        self.assertEqual(len(list(enumerate_monoidale_structures(terminal_category()))), ONE_RSTRUCTURES)
        self.assertEqual(len(list(enumerate_monoidale_structures(walking_arrow()))), TWO_RSTRUCTURES)

    def test_cap(self):
        with self.assertRaises(CapExceeded):
            list(enumerate_rstructures(walking_arrow(), cap=100))
        with self.assertRaises(CapExceeded):
            list(enumerate_monoidale_structures(walking_arrow(), cap=100))

    def test_every_structure_builds(self):
        for rs in enumerate_rstructures(walking_arrow()):
            m = build(rs)
            self.assertTrue(verify(m).all_pass)
            self.assertEqual(extract(m), rs)
