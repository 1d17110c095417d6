import unittest

from logic.constructions import (category_to_monoidale, cyclic_monoid, delooping, left_absorbing_monoid,
                                 monoid_to_monoidale, restricted_unit_monoidale, walking_arrow)
from logic.fuzz import MUTABLE, cross_check, mutants
from logic.skew_monoidale import COMPONENTS, wellformed
from serialization import instance_file
from settings import FIXTURES_PATH


def zmod2():
    return instance_file.load(FIXTURES_PATH / "zmod2.json").value


class TestMutants(unittest.TestCase):
    def test_seeded(self):
        m = zmod2()
        first = [x.name for x in mutants(m, count=20, seed=3)]
        second = [x.name for x in mutants(m, count=20, seed=3)]
        self.assertEqual(first, second)
        self.assertEqual(len(first), 20)
        self.assertEqual(len(set(first)), 20)

    def test_single_change(self):
        m = zmod2()
        for mutant in mutants(m, count=30, seed=1):
            changed = [k for k in COMPONENTS if getattr(mutant, k) != getattr(m, k)]
            self.assertEqual(len(changed), 1)
            self.assertIn(changed[0], MUTABLE)
            fn, original = getattr(mutant, changed[0]), getattr(m, changed[0])
            self.assertEqual(sum(1 for x in fn.domain if fn(x) != original(x)), 1)

    def test_wellformed_only(self):
        m = restricted_unit_monoidale(walking_arrow())
        for mutant in mutants(m, count=10, seed=0, wellformed_only=True):
            self.assertTrue(wellformed(mutant).ok)

    def test_nothing_to_mutate(self):
        m = instance_file.load(FIXTURES_PATH / "terminal.json").value
        self.assertEqual(mutants(m, count=5), [])


class TestCrossCheck(unittest.TestCase):
    def test_checkers_agree(self):
        # one-object bases with U = C leave every other value of delta and tau well-formed
        bases = [
            (restricted_unit_monoidale(delooping(cyclic_monoid(4))), 60),
            (restricted_unit_monoidale(delooping(cyclic_monoid(3))), 25),
            (restricted_unit_monoidale(delooping(left_absorbing_monoid())), 25),
            (restricted_unit_monoidale(walking_arrow()), 25),
            (category_to_monoidale(walking_arrow()), 25),
            (monoid_to_monoidale(cyclic_monoid(3)), 25),
            (monoid_to_monoidale(left_absorbing_monoid()), 25),
            (zmod2(), 25),
        ]
        valid = [m for m, _ in bases]
        instances = list(valid)
        for i, (m, count) in enumerate(bases):
            instances.extend(mutants(m, count=count, seed=i, wellformed_only=True, max_attempts=2000))
        frame = cross_check(instances)
        self.assertEqual(len(frame), len(instances))
        self.assertTrue(frame["wellformed"].all())
        self.assertGreaterEqual(len(instances) - len(valid), 100)
        self.assertTrue(frame["agree"].all())
        self.assertEqual(set(frame["(1) pentagon"][:len(valid)]), {"PASS/PASS"})
        self.assertIn("FAIL/FAIL", set(frame["(1) pentagon"][len(valid):]))

    def test_empty(self):
        self.assertEqual(len(cross_check([])), 0)
