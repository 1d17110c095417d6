import unittest

from exceptions import DepthTooSmall, NotSimplicial
from logic.category import FinCat, cat_coproduct, cat_validate, find_category_iso, functor_compose, functor_validate
from logic.characterization import extract
from logic.constructions import (cyclic_monoid, delooping, delooping_functor, monoid_category, reduction_morphism,
                                 terminal_category, walking_arrow)
from logic.simplicial import (constant_simplicial_set, dec_cat, dec_functor, dec_simplicial, nerve,
                              nerve_dec_compat, simp_validate, simplicial_map_validate)
from serialization import instance_file
from settings import FIXTURES_PATH


def small_categories():
    return [terminal_category(), walking_arrow(), monoid_category(cyclic_monoid(2))]


class TestNerve(unittest.TestCase):
    def test_simplicial_identities(self):
        for c in small_categories():
            report = simp_validate(nerve(c, 3))
            self.assertTrue(report.ok, report.summary())

    def test_level_sizes(self):
        S = nerve(walking_arrow(), 3)
        self.assertEqual(list(S.level_sizes()), [2, 3, 4, 5])

    def test_depth_zero(self):
        S = nerve(walking_arrow(), 0)
        self.assertEqual(S.levels, [walking_arrow().objects])
        self.assertTrue(simp_validate(S).ok)
        with self.assertRaises(DepthTooSmall):
            nerve(walking_arrow(), -1)

    def test_faces_and_degeneracies(self):
        S = nerve(walking_arrow(), 2)
        self.assertEqual(S.face(1, 0)(("u",)), "b")
        self.assertEqual(S.face(1, 1)(("u",)), "a")
        self.assertEqual(S.face(2, 1)(("1a", "u")), ("u",))
        self.assertEqual(S.face(2, 0)(("1a", "u")), ("u",))
        self.assertEqual(S.face(2, 2)(("1a", "u")), ("1a",))
        self.assertEqual(S.degeneracy(0, 0)("a"), ("1a",))
        self.assertEqual(S.degeneracy(1, 0)(("u",)), ("1a", "u"))
        self.assertEqual(S.degeneracy(1, 1)(("u",)), ("u", "1b"))

    def test_broken_face_is_reported(self):
        S = nerve(walking_arrow(), 2)
        S.faces[(2, 1)] = S.face(2, 0)
        self.assertFalse(simp_validate(S).ok)

    def test_constant(self):
        self.assertTrue(simp_validate(constant_simplicial_set(3)).ok)


class TestDecalage(unittest.TestCase):
    def test_d0_is_simplicial(self):
        for c in small_categories():
            dec, d0 = dec_simplicial(nerve(c, 3))
            self.assertEqual(dec.depth, 2)
            self.assertTrue(simp_validate(dec).ok)
            self.assertTrue(simplicial_map_validate(d0).ok)

    def test_d0_must_be_simplicial(self):
        S = nerve(walking_arrow(), 2)
        S.faces[(2, 2)] = S.face(2, 0)
        with self.assertRaises(NotSimplicial) as ctx:
            dec_simplicial(S)
        self.assertFalse(ctx.exception.report.ok)

    def test_needs_depth(self):
        with self.assertRaises(DepthTooSmall):
            dec_simplicial(nerve(walking_arrow(), 0))
        with self.assertRaises(DepthTooSmall):
            nerve_dec_compat(walking_arrow(), 0)

    def test_dec_cat(self):
        for c in small_categories():
            dec, cod = dec_cat(c)
            self.assertTrue(cat_validate(dec).ok)
            self.assertTrue(functor_validate(cod).ok)

    def test_dec_of_walking_arrow(self):
        dec, _ = dec_cat(walking_arrow())
        total, _ = cat_coproduct([walking_arrow(), terminal_category()])
        self.assertIsNotNone(find_category_iso(dec, total))

    def test_nerve_of_dec_is_dec_of_nerve(self):
        for c in small_categories() + [delooping(cyclic_monoid(2))]:
            for depth in (1, 2):
                report = nerve_dec_compat(c, depth)
                self.assertTrue(report.ok, report.summary())

    def test_dec_of_delooping(self):
        m = instance_file.load(FIXTURES_PATH / "zmod2.json").value
        dec, _ = dec_cat(delooping(cyclic_monoid(2)))
        self.assertEqual(dec, extract(m).cat)
        self.assertIsNotNone(find_category_iso(dec, extract(m).cat))

    def test_dec_functor(self):
        f = reduction_morphism(cyclic_monoid(4), cyclic_monoid(2))
        self.assertTrue(functor_validate(dec_functor(delooping_functor(f))).ok)

    def test_dec_preserves_composites(self):
        F = delooping_functor(reduction_morphism(cyclic_monoid(4), cyclic_monoid(2)))
        G = delooping_functor(reduction_morphism(cyclic_monoid(2), cyclic_monoid(1)))
        self.assertEqual(dec_functor(functor_compose(G, F)), functor_compose(dec_functor(G), dec_functor(F)))

    def test_cod_is_natural(self):
        F = delooping_functor(reduction_morphism(cyclic_monoid(4), cyclic_monoid(2)))
        _, cod_source = dec_cat(F.source)
        _, cod_target = dec_cat(F.target)
        self.assertEqual(functor_compose(cod_target, dec_functor(F)), functor_compose(F, cod_source))

    def test_dec_keeps_the_name(self):
        c = walking_arrow()
        renamed = FinCat(c.objects, c.arrows, c.dom, c.cod, c.identity, c.comp, "arrow")
        self.assertEqual(dec_cat(c)[0].name, "Dec(2)")
        self.assertEqual(dec_cat(renamed)[0].name, "Dec(arrow)")
        self.assertEqual(dec_cat(renamed)[0], dec_cat(c)[0])
