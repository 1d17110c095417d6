import json
import os
import tempfile
import unittest
from pathlib import Path

from exceptions import ParseError, ResolutionError
from logic.characterization import cod_rstructure
from logic.constructions import cyclic_monoid, delooping, monoid_category, monoid_to_monoidale, walking_arrow
from serialization import instance_file
from settings import FIXTURES_PATH


class TestLoad(unittest.TestCase):
    def test_zmod2_matches_construction(self):
        instance = instance_file.load(FIXTURES_PATH / "zmod2.json")
        self.assertEqual(instance.kind, "monoidale")
        self.assertEqual(instance.value.name, "zmod2")
        self.assertEqual(instance.value, monoid_to_monoidale(cyclic_monoid(2)))

    def test_kinds(self):
        self.assertEqual(instance_file.load(FIXTURES_PATH / "two.json").kind, "category")
        self.assertEqual(instance_file.load(FIXTURES_PATH / "two-cod.json").kind, "rstructure")
        monoid = instance_file.load(FIXTURES_PATH / "zmod3-monoid.json").value
        self.assertEqual(monoid("2", "2"), "1")
        self.assertEqual(instance_file.load(FIXTURES_PATH / "two.json").value, walking_arrow())

    def test_missing_file(self):
        with self.assertRaises(ParseError):
            instance_file.load(FIXTURES_PATH / "missing.json")

    def test_invalid_json(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "bad.json"
            path.write_text("{not json", encoding="utf-8")
            with self.assertRaises(ParseError):
                instance_file.load(path)


class TestParse(unittest.TestCase):
    def setUp(self):
        with open(os.path.join(str(FIXTURES_PATH), "two.json"), encoding="utf-8") as fr:
            self.document = json.load(fr)

    def test_exactly_one_section(self):
        self.document["monoid"] = {"carrier": "objects", "mul": "comp", "unit": "a"}
        with self.assertRaises(ParseError):
            instance_file.parse(self.document)
        del self.document["monoid"]
        del self.document["category"]
        with self.assertRaises(ParseError):
            instance_file.parse(self.document)

    def test_missing_key(self):
        del self.document["category"]["comp"]
        with self.assertRaises(ParseError):
            instance_file.parse(self.document)

    def test_unknown_set(self):
        self.document["category"]["objects"] = "points"
        with self.assertRaises(ResolutionError):
            instance_file.parse(self.document)

    def test_references_must_be_names(self):
        self.document["category"]["objects"] = ["objects"]
        with self.assertRaises(ParseError):
            instance_file.parse(self.document)

    def test_map_must_be_a_list(self):
        self.document["functions"]["cod"]["map"] = {"u": "b"}
        with self.assertRaises(ParseError):
            instance_file.parse(self.document)

    def test_partial_function(self):
        self.document["functions"]["dom"]["map"].pop()
        with self.assertRaises(ResolutionError):
            instance_file.parse(self.document)

    def test_duplicate_input(self):
        self.document["functions"]["dom"]["map"].append(["u", "b"])
        with self.assertRaises(ParseError):
            instance_file.parse(self.document)

    def test_bad_label(self):
        self.document["sets"]["objects"].append(3)
        with self.assertRaises(ParseError):
            instance_file.parse(self.document)

    def test_tau_domain_checked(self):
        with open(os.path.join(str(FIXTURES_PATH), "zmod2.json"), encoding="utf-8") as fr:
            document = json.load(fr)
        document["functions"]["tau"]["map"].pop()
        with self.assertRaises(ResolutionError):
            instance_file.parse(document)


class TestDump(unittest.TestCase):
    def test_monoidale(self):
        m = monoid_to_monoidale(cyclic_monoid(3))
        self.assertEqual(instance_file.parse(instance_file.dump(m)).value, m)

    def test_category(self):
        for c in (walking_arrow(), monoid_category(cyclic_monoid(2)), delooping(cyclic_monoid(3))):
            back = instance_file.parse(instance_file.dump(c)).value
            self.assertEqual(back, c)
            self.assertEqual(back.name, c.name)

    def test_rstructure_through_file(self):
        rs = cod_rstructure(walking_arrow())
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "out" / "cod.json"
            instance_file.save(path, rs)
            loaded = instance_file.load(path)
        self.assertEqual(loaded.kind, "rstructure")
        self.assertEqual(loaded.value, rs)

    def test_monoid(self):
        M = cyclic_monoid(3)
        back = instance_file.parse(instance_file.dump(M)).value
        self.assertEqual(back.carrier, M.carrier)
        self.assertEqual(back.mul, M.mul)
        self.assertEqual(back.unit, M.unit)

    def test_unknown_type(self):
        with self.assertRaises(TypeError):
            instance_file.dump(object())
