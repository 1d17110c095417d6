"""
JSON instance files.

A document has a "sets" section (name -> list of element labels), a "functions" section
(name -> {"domain", "codomain", "map"}) and exactly one of the sections "monoidale",
"category", "rstructure" or "monoid" whose entries name sets and functions. Labels are strings
and nested pairs are arrays. A map is a list of [input, output] entries. A function whose
domain is null takes its domain from the entries; this is how tau, delta, composition tables
and multiplication tables are written.
"""
import json

from exceptions import DomainMismatch, InvalidFunction, ParseError, ResolutionError
from logic.category import FinCat
from logic.characterization import RStructure
from logic.constructions import FinMonoid
from logic.finset import FinFn, FinSet
from logic.skew_monoidale import SkewMonoidaleData
from utils import storage

KINDS = ("monoidale", "category", "rstructure", "monoid")
MONOIDALE_SETS = ("carrier", "E", "U")
MONOIDALE_FUNCTIONS = ("s", "r", "t", "j", "phi", "psi", "tau", "delta")
CATEGORY_KEYS = ("objects", "arrows", "dom", "cod", "id", "comp")


class InstanceFile:
    def __init__(self, kind, value, path=None):
        self.kind = kind
        self.value = value
        self.path = path


def decode_element(raw):
    if isinstance(raw, str):
        return raw
    if isinstance(raw, list):
        return tuple(decode_element(r) for r in raw)
    raise ParseError("Element labels must be strings or arrays, got {!r}".format(raw))


def encode_element(element):
    if isinstance(element, tuple):
        return [encode_element(e) for e in element]
    return element


def _name(raw, what):
    if not isinstance(raw, str):
        raise ParseError("A {} is referenced by name, got {!r}".format(what, raw))
    return raw


class _Resolver:
    def __init__(self, document):
        if not isinstance(document, dict):
            raise ParseError("An instance file must be a JSON object")
        self.raw_sets = document.get("sets", {})
        self.raw_functions = document.get("functions", {})
        if not isinstance(self.raw_sets, dict) or not isinstance(self.raw_functions, dict):
            raise ParseError("'sets' and 'functions' must be JSON objects")
        self.sets = dict()
        self.functions = dict()

    def set(self, name):
        name = _name(name, "set")
        if name in self.sets:
            return self.sets[name]
        if name not in self.raw_sets:
            raise ResolutionError("Unknown set {!r}".format(name))
        raw = self.raw_sets[name]
        if not isinstance(raw, list):
            raise ParseError("Set {!r} must be a list of labels".format(name))
        try:
            self.sets[name] = FinSet(decode_element(e) for e in raw)
        except ValueError as e:
            raise ParseError("Set {!r}: {}".format(name, e))
        return self.sets[name]

    def entries(self, name):
        name = _name(name, "function")
        if name not in self.raw_functions:
            raise ResolutionError("Unknown function {!r}".format(name))
        raw = self.raw_functions[name]
        if not isinstance(raw, dict) or "map" not in raw or "codomain" not in raw:
            raise ParseError("Function {!r} needs 'codomain' and 'map'".format(name))
        if not isinstance(raw["map"], list):
            raise ParseError("Function {!r}: map must be a list of entries".format(name))
        entries = list()
        for entry in raw["map"]:
            if not isinstance(entry, list) or len(entry) != 2:
                raise ParseError("Function {!r}: map entries are [input, output] pairs".format(name))
            entries.append((decode_element(entry[0]), decode_element(entry[1])))
        if len({x for x, _ in entries}) != len(entries):
            raise ParseError("Function {!r} lists an input twice".format(name))
        return raw, entries

    def function(self, name, domain=None):
        name = _name(name, "function")
        if name in self.functions:
            return self.functions[name]
        raw, entries = self.entries(name)
        codomain = self.set(raw["codomain"])
        if raw.get("domain") is not None:
            declared = self.set(raw["domain"])
            if domain is not None and declared != domain:
                raise ResolutionError("Function {!r} has domain {!r}, expected another set".format(name, raw["domain"]))
            domain = declared
        elif domain is None:
            domain = FinSet(x for x, _ in entries)
        try:
            fn = FinFn(domain, codomain, dict(entries), name)
        except InvalidFunction as e:
            raise ResolutionError(str(e))
        self.functions[name] = fn
        return fn

    def table(self, name):
        """A partial binary operation given as a function keyed by pairs."""
        raw, entries = self.entries(name)
        codomain = self.set(raw["codomain"])
        for _, y in entries:
            if y not in codomain:
                raise ResolutionError("Table {!r} has value {!r} outside {!r}".format(name, y, raw["codomain"]))
        return dict(entries)

    def label(self, raw):
        return decode_element(raw)


def _section(document, kind, keys):
    section = document[kind]
    if not isinstance(section, dict):
        raise ParseError("Section {!r} must be a JSON object".format(kind))
    missing = [k for k in keys if k not in section]
    if missing:
        raise ParseError("Section {!r} misses {}".format(kind, ", ".join(missing)))
    return section


def _decode_category(resolver, section, name=None):
    objects = resolver.set(section["objects"])
    arrows = resolver.set(section["arrows"])
    return FinCat(objects, arrows,
                  resolver.function(section["dom"], arrows),
                  resolver.function(section["cod"], arrows),
                  resolver.function(section["id"], objects),
                  resolver.table(section["comp"]), name)


def _decode_monoidale(resolver, section, name=None):
    C, E, U = (resolver.set(section[k]) for k in MONOIDALE_SETS)
    functions = {k: resolver.function(section[k]) for k in MONOIDALE_FUNCTIONS}
    try:
        return SkewMonoidaleData(C, E, U=U, name=name, **functions)
    except DomainMismatch as e:
        raise ResolutionError(str(e))


def _decode_rstructure(resolver, section, name=None):
    if not isinstance(section["category"], dict):
        raise ParseError("'category' of an rstructure must be a section")
    cat = _decode_category(resolver, _section(section, "category", CATEGORY_KEYS), name)
    try:
        return RStructure.from_parts(cat,
                                     dict(resolver.entries(section["R_objects"])[1]),
                                     dict(resolver.entries(section["R_arrows"])[1]), name)
    except InvalidFunction as e:
        raise ResolutionError(str(e))


def _decode_monoid(resolver, section, name=None):
    carrier = resolver.set(section["carrier"])
    unit = resolver.label(section["unit"])
    try:
        return FinMonoid.from_table(carrier, resolver.table(section["mul"]), unit, name)
    except InvalidFunction as e:
        raise ResolutionError(str(e))


def parse(document, name=None):
    resolver = _Resolver(document)
    kinds = [k for k in KINDS if k in document]
    if len(kinds) != 1:
        raise ParseError("Expected exactly one of {}, found {}".format(", ".join(KINDS), kinds or "none"))
    kind = kinds[0]
    name = document.get("name", name)
    if kind == "monoidale":
        value = _decode_monoidale(resolver, _section(document, kind, MONOIDALE_SETS + MONOIDALE_FUNCTIONS), name)
    elif kind == "category":
        value = _decode_category(resolver, _section(document, kind, CATEGORY_KEYS), name)
    elif kind == "rstructure":
        value = _decode_rstructure(resolver, _section(document, kind, ("category", "R_objects", "R_arrows")), name)
    else:
        value = _decode_monoid(resolver, _section(document, kind, ("carrier", "mul", "unit")), name)
    return InstanceFile(kind, value)


def load(path):
    if not storage.exists(path):
        raise ParseError("No such file: {}".format(path))
    try:
        document = storage.read_json(path)
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise ParseError("{} is not valid JSON: {}".format(path, e))
    instance = parse(document, name=document.get("name") if isinstance(document, dict) else None)
    instance.path = path
    return instance


def _encode_set(s):
    return [encode_element(e) for e in s]


def _encode_function(fn, domain, codomain):
    return {
        "domain": domain,
        "codomain": codomain,
        "map": [[encode_element(x), encode_element(y)] for x, y in fn.items()],
    }


def _encode_table(table, codomain):
    return {
        "domain": None,
        "codomain": codomain,
        "map": [[encode_element(k), encode_element(v)] for k, v in table.items()],
    }


def encode_monoidale(m):
    return {
        "name": m.name,
        "sets": {"C": _encode_set(m.C), "E": _encode_set(m.E), "U": _encode_set(m.U)},
        "functions": {
            "s": _encode_function(m.s, "E", "C"),
            "r": _encode_function(m.r, "E", "C"),
            "t": _encode_function(m.t, "E", "C"),
            "j": _encode_function(m.j, "U", "C"),
            "phi": _encode_function(m.phi, "C", "E"),
            "psi": _encode_function(m.psi, "C", "U"),
            "tau": _encode_function(m.tau, None, "E"),
            "delta": _encode_function(m.delta, None, "E"),
        },
        "monoidale": {"carrier": "C", "E": "E", "U": "U", "s": "s", "r": "r", "t": "t",
                      "j": "j", "phi": "phi", "psi": "psi", "tau": "tau", "delta": "delta"},
    }


def _category_parts(c):
    sets = {"objects": _encode_set(c.objects), "arrows": _encode_set(c.arrows)}
    functions = {
        "dom": _encode_function(c.dom, "arrows", "objects"),
        "cod": _encode_function(c.cod, "arrows", "objects"),
        "id": _encode_function(c.identity, "objects", "arrows"),
        "comp": _encode_table(c.comp, "arrows"),
    }
    section = {"objects": "objects", "arrows": "arrows", "dom": "dom", "cod": "cod", "id": "id", "comp": "comp"}
    return sets, functions, section


def encode_category(c):
    sets, functions, section = _category_parts(c)
    return {"name": c.name, "sets": sets, "functions": functions, "category": section}


def encode_rstructure(rs):
    sets, functions, section = _category_parts(rs.cat)
    functions["R_objects"] = _encode_function(rs.R.on_objects, "arrows", "objects")
    functions["R_arrows"] = _encode_function(rs.R.on_arrows, None, "arrows")
    return {"name": rs.name, "sets": sets, "functions": functions,
            "rstructure": {"category": section, "R_objects": "R_objects", "R_arrows": "R_arrows"}}


def encode_monoid(M):
    return {
        "name": M.name,
        "sets": {"M": _encode_set(M.carrier)},
        "functions": {"mul": _encode_function(M.mul, None, "M")},
        "monoid": {"carrier": "M", "mul": "mul", "unit": encode_element(M.unit)},
    }


ENCODERS = {
    SkewMonoidaleData: encode_monoidale,
    FinCat: encode_category,
    RStructure: encode_rstructure,
    FinMonoid: encode_monoid,
}


def dump(value):
    for cls, encoder in ENCODERS.items():
        if isinstance(value, cls):
            return encoder(value)
    raise TypeError("Cannot serialize {!r}".format(value))


def save(path, value):
    storage.write_json(path, dump(value))
