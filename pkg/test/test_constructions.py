import unittest

from exceptions import InvalidCategory, MonoidLawsFail, NotAMonoidMorphism
from logic.category import FinCat, cat_validate, functor_validate
from logic.characterization import extract
from logic.constructions import (FinMonoid, MonoidMorphism, alpha_is_identity, category_dec_comparison,
                                 category_to_monoidale, cyclic_monoid, dec_comparison, delooping,
                                 delooping_functor, delooping_monoidale_comparison, left_absorbing_monoid,
                                 mon_functor_T, monoid_category, monoid_to_monoidale, monoidale_comparison,
                                 reduction_morphism, restricted_unit_monoidale, terminal_category,
                                 terminal_monoidale, trivial_monoid, walking_arrow)
from logic.finset import FinFn, FinSet
from logic.simplicial import dec_cat
from logic.skew_monoidale import constraint_invertibility, verify


def monoids():
    return [trivial_monoid(), cyclic_monoid(2), cyclic_monoid(3), left_absorbing_monoid()]


class TestMonoids(unittest.TestCase):
    def test_laws(self):
        for M in monoids():
            self.assertTrue(M.validate().ok, M.name)

    def test_left_absorbing_is_not_commutative(self):
        M = left_absorbing_monoid()
        self.assertEqual(M("a", "b"), "a")
        self.assertEqual(M("b", "a"), "b")

    def test_bad_unit(self):
        Z2 = cyclic_monoid(2)
        bad = FinMonoid(Z2.carrier, Z2.mul, "1", "bad")
        self.assertFalse(bad.validate().ok)
        with self.assertRaises(MonoidLawsFail):
            monoid_to_monoidale(bad)

    def test_morphisms(self):
        self.assertTrue(reduction_morphism(cyclic_monoid(4), cyclic_monoid(2)).validate().ok)
        Z3, Z2 = cyclic_monoid(3), cyclic_monoid(2)
        bad = MonoidMorphism(Z3, Z2, FinFn(Z3.carrier, Z2.carrier, {"0": "0", "1": "1", "2": "1"}), "bad")
        self.assertFalse(bad.validate().ok)
        with self.assertRaises(NotAMonoidMorphism):
            delooping_functor(bad)


class TestMonoidMonoidale(unittest.TestCase):
    def test_axioms_hold(self):
        for M in monoids():
            m = monoid_to_monoidale(M)
            report = verify(m)
            self.assertTrue(report.all_pass, report.summary())
            self.assertTrue(all(constraint_invertibility(m).values()))

    def test_alpha_is_identity(self):
        for M in monoids():
            self.assertTrue(alpha_is_identity(M), M.name)

    def test_extracts_monoid_category(self):
        M = left_absorbing_monoid()
        self.assertEqual(extract(monoid_to_monoidale(M)).cat, monoid_category(M))
        self.assertTrue(cat_validate(monoid_category(M)).ok)

    def test_dec_of_delooping(self):
        for M in monoids():
            report = dec_comparison(M)
            self.assertTrue(report.ok, report.summary())
        f = reduction_morphism(cyclic_monoid(4), cyclic_monoid(2))
        self.assertTrue(dec_comparison(cyclic_monoid(4), f).ok)

    def test_T_functor(self):
        f = reduction_morphism(cyclic_monoid(4), cyclic_monoid(2))
        self.assertTrue(functor_validate(mon_functor_T(f)).ok)

    def test_delooping_composes_left_to_right(self):
        M = left_absorbing_monoid()
        BM = delooping(M)
        self.assertTrue(cat_validate(BM).ok)
        self.assertEqual(BM.compose("b", "a"), M("a", "b"))
        dec, _ = dec_cat(BM)
        self.assertEqual(dec, monoid_category(M))


class TestCategoryMonoidale(unittest.TestCase):
    def test_axioms_hold(self):
        for c in (terminal_category(), walking_arrow(), delooping(cyclic_monoid(2))):
            self.assertTrue(verify(category_to_monoidale(c)).all_pass)

    def test_extracts_decalage(self):
        for c in (terminal_category(), walking_arrow(), delooping(cyclic_monoid(3))):
            report = category_dec_comparison(c)
            self.assertTrue(report.ok, report.summary())

    def test_invalid_category(self):
        c = walking_arrow()
        comp = dict(c.comp)
        comp[("1b", "u")] = "1b"
        with self.assertRaises(InvalidCategory):
            category_to_monoidale(FinCat(c.objects, c.arrows, c.dom, c.cod, c.identity, comp))

    def test_delooping_agrees_with_monoid(self):
        for n in range(1, 5):
            report = delooping_monoidale_comparison(cyclic_monoid(n))
            self.assertTrue(report.ok, report.summary())
        self.assertTrue(delooping_monoidale_comparison(left_absorbing_monoid()).ok)

    def test_comparison_sees_differences(self):
        Z2 = monoid_to_monoidale(cyclic_monoid(2))
        self.assertFalse(monoidale_comparison(category_to_monoidale(walking_arrow()), Z2).ok)
        self.assertFalse(monoidale_comparison(Z2.replace(j=Z2.j.with_value("*", "1")), Z2).ok)
        x = next(iter(Z2.X))
        other = [e for e in Z2.E if e != Z2.delta(x)][0]
        self.assertFalse(monoidale_comparison(Z2.replace(delta=Z2.delta.with_value(x, other)), Z2).ok)

    def test_comparison_renames_the_unit(self):
        Z2 = monoid_to_monoidale(cyclic_monoid(2))
        U = FinSet(["u"])
        renamed = Z2.replace(U=U, j=FinFn(U, Z2.C, {"u": "0"}), psi=FinFn(Z2.C, U, {x: "u" for x in Z2.C}))
        self.assertNotEqual(renamed, Z2)
        self.assertTrue(monoidale_comparison(renamed, Z2).ok)

    def test_restricted_unit(self):
        m = restricted_unit_monoidale(walking_arrow())
        self.assertEqual(m.U, walking_arrow().objects)
        self.assertEqual(m.j, FinFn.identity(m.C))
        self.assertTrue(verify(m).all_pass)

    def test_terminal(self):
        m = terminal_monoidale()
        self.assertEqual(len(m.X), 1)
        self.assertTrue(verify(m).all_pass)
