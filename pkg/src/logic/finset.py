"""
Finite sets of symbolic elements, total functions between them and the canonical
pullback. Elements are strings or tuples of elements; a pair is a 2-tuple.
"""
from collections import defaultdict
from itertools import product as cartesian

import customlogger as logger
from exceptions import CapExceeded, DomainMismatch, InvalidFunction
from settings import DEFAULT_CAP, UNIT_ELEMENT


def is_element(value):
    if isinstance(value, str):
        return True
    if isinstance(value, tuple):
        return all(is_element(v) for v in value)
    return False


def is_pair(value):
    return isinstance(value, tuple) and len(value) == 2


class FinSet:
    __slots__ = ("_elements", "_members")

    def __init__(self, elements=()):
        elements = tuple(elements)
        members = set()
        for element in elements:
            if not is_element(element):
                raise TypeError("{!r} is not a string or tuple element".format(element))
            if element in members:
                raise ValueError("Duplicate element {!r}".format(element))
            members.add(element)
        self._elements = elements
        self._members = frozenset(members)

    @property
    def elements(self):
        return self._elements

    def __iter__(self):
        return iter(self._elements)

    def __len__(self):
        return len(self._elements)

    def __contains__(self, item):
        return item in self._members

    def __eq__(self, other):
        if not isinstance(other, FinSet):
            return False
        return self._members == other._members

    def __hash__(self):
        return hash(self._members)

    def __repr__(self):
        return "FinSet({!r})".format(list(self._elements))

    def ordered_equal(self, other):
        return self._elements == other.elements


EMPTY = FinSet()
ONE = FinSet([UNIT_ELEMENT])


class FinFn:
    __slots__ = ("domain", "codomain", "_mapping", "name")

    def __init__(self, domain, codomain, mapping, name=None):
        mapping = dict(mapping)
        if len(mapping) != len(domain) or any(x not in mapping for x in domain):
            extra = [x for x in mapping if x not in domain]
            missing = [x for x in domain if x not in mapping]
            raise InvalidFunction("{} is not total on its domain: missing {}, extra {}".format(
                name or "function", missing[:3], extra[:3]))
        for x, y in mapping.items():
            if y not in codomain:
                raise InvalidFunction("{} sends {!r} to {!r} outside its codomain".format(name or "function", x, y))
        self.domain = domain
        self.codomain = codomain
        self._mapping = mapping
        self.name = name

    @classmethod
    def identity(cls, domain):
        return cls(domain, domain, {x: x for x in domain}, "1")

    @classmethod
    def to_terminal(cls, domain):
        return cls(domain, ONE, {x: UNIT_ELEMENT for x in domain}, "!")

    @classmethod
    def inclusion(cls, domain, codomain):
        return cls(domain, codomain, {x: x for x in domain}, "incl")

    def __call__(self, x):
        try:
            return self._mapping[x]
        except KeyError:
            raise DomainMismatch("{!r} is not in the domain of {}".format(x, self.name or "function"))

    def items(self):
        return [(x, self._mapping[x]) for x in self.domain]

    def as_dict(self):
        return dict(self._mapping)

    def renamed(self, name):
        return FinFn(self.domain, self.codomain, self._mapping, name)

    def with_value(self, x, y):
        mapping = dict(self._mapping)
        mapping[x] = y
        return FinFn(self.domain, self.codomain, mapping, self.name)

    def image(self):
        seen = dict.fromkeys(self._mapping[x] for x in self.domain)
        return FinSet(seen)

    def is_injective(self):
        return len(set(self._mapping.values())) == len(self.domain)

    def is_surjective(self):
        return len(set(self._mapping.values())) == len(self.codomain)

    def is_bijective(self):
        return self.is_injective() and self.is_surjective()

    def inverse(self):
        if not self.is_bijective():
            raise InvalidFunction("{} is not invertible".format(self.name or "function"))
        return FinFn(self.codomain, self.domain, {y: x for x, y in self._mapping.items()})

    def __eq__(self, other):
        if not isinstance(other, FinFn):
            return False
        return self.domain == other.domain and self.codomain == other.codomain and self._mapping == other._mapping

    def __hash__(self):
        return hash((self.domain, self.codomain, frozenset(self._mapping.items())))

    def __repr__(self):
        return "FinFn({}: {} -> {})".format(self.name or "f", len(self.domain), len(self.codomain))


class PullbackResult:
    def __init__(self, apex, proj1, proj2):
        self.apex = apex
        self.proj1 = proj1
        self.proj2 = proj2


def fn_compose(g, f):
    """g after f."""
    if f.codomain != g.domain:
        raise DomainMismatch("Cannot compose {} after {}: codomain and domain differ".format(g.name, f.name))
    return FinFn(f.domain, g.codomain, {x: g(f(x)) for x in f.domain},
                 None if f.name is None or g.name is None else "{}.{}".format(g.name, f.name))


def pullback(f, g):
    if f.codomain != g.codomain:
        raise DomainMismatch("Cannot form the pullback of {} and {}: codomains differ".format(f.name, g.name))
    fibres = defaultdict(list)
    for b in g.domain:
        fibres[g(b)].append(b)
    apex = FinSet((a, b) for a in f.domain for b in fibres.get(f(a), ()))
    proj1 = FinFn(apex, f.domain, {pair: pair[0] for pair in apex}, "pi1")
    proj2 = FinFn(apex, g.domain, {pair: pair[1] for pair in apex}, "pi2")
    return PullbackResult(apex, proj1, proj2)


def product(a, b):
    return pullback(FinFn.to_terminal(a), FinFn.to_terminal(b))


def fn_product(f, g):
    domain = product(f.domain, g.domain).apex
    codomain = product(f.codomain, g.codomain).apex
    return FinFn(domain, codomain, {(x, y): (f(x), g(y)) for (x, y) in domain},
                 None if f.name is None or g.name is None else "{}x{}".format(f.name, g.name))


def count_functions(a, b):
    return len(b) ** len(a)


def enumerate_functions(a, b, cap=DEFAULT_CAP):
    total = count_functions(a, b)
    if total > cap:
        raise CapExceeded("{}^{} = {} functions exceed the cap of {}".format(len(b), len(a), total, cap))
    logger.debug("Enumerating {} functions {} -> {}".format(total, len(a), len(b)))
    domain = a.elements
    for values in cartesian(b.elements, repeat=len(domain)):
        yield FinFn(a, b, zip(domain, values))
