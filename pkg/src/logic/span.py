"""
Spans of finite sets as 1-cells, their 2-cells, pullback composition, the cartesian tensor and
whiskering.

Boundary objects are strict: an object carries an arity (its number of wires) and the tensor of
objects concatenates wires. An element of an object of arity 1 is the element itself, of arity
0 it is the unit element, and of arity k >= 2 it is a k-tuple. Apexes are never flattened by
the tensor; they stay canonical pair sets whose nesting is recorded in the span's Shape. flatten
reads that shape as a wire diagram and normalises apex elements to tuples of generator elements,
so that differently bracketed or interchanged composites become element-identical.
"""
from collections import defaultdict

from exceptions import BoundaryMismatch, NotATwoCell, NotStructurallyIsomorphic, ShapeError
from logic.finset import FinFn, FinSet, fn_compose, fn_product, product, pullback
from settings import UNIT_ELEMENT


def split_wires(value, arity):
    if arity == 0:
        return ()
    if arity == 1:
        return (value,)
    return tuple(value)


def join_wires(values):
    values = tuple(values)
    if len(values) == 0:
        return UNIT_ELEMENT
    if len(values) == 1:
        return values[0]
    return values


def tensor_objects(a, a_arity, b, b_arity):
    return FinSet(join_wires(split_wires(x, a_arity) + split_wires(y, b_arity)) for x in a for y in b)


class Shape:
    ATOM = "atom"
    IDENTITY = "identity"
    COMPOSITE = "composite"
    TENSOR = "tensor"
    FLAT = "flat"

    __slots__ = ("kind", "name", "src_arity", "tgt_arity", "children", "signature")

    def __init__(self, kind, name, src_arity, tgt_arity, children=(), signature=None):
        self.kind = kind
        self.name = name
        self.src_arity = src_arity
        self.tgt_arity = tgt_arity
        self.children = tuple(children)
        self.signature = signature

    @classmethod
    def atom(cls, name, src_arity=1, tgt_arity=1):
        return cls(cls.ATOM, name, src_arity, tgt_arity)

    @classmethod
    def identity(cls, arity=1):
        return cls(cls.IDENTITY, "1", arity, arity)

    @classmethod
    def composite(cls, first, second):
        if first.tgt_arity != second.src_arity:
            raise ShapeError("Cannot compose shapes {} and {}".format(first, second))
        return cls(cls.COMPOSITE, None, first.src_arity, second.tgt_arity, (first, second))

    @classmethod
    def tensor(cls, left, right):
        return cls(cls.TENSOR, None, left.src_arity + right.src_arity, left.tgt_arity + right.tgt_arity,
                   (left, right))

    @classmethod
    def flat(cls, signature, src_arity, tgt_arity):
        return cls(cls.FLAT, "flat", src_arity, tgt_arity, signature=signature)

    def is_leaf(self):
        return self.kind in (Shape.ATOM, Shape.IDENTITY, Shape.FLAT)

    def _key(self):
        return (self.kind, self.name, self.src_arity, self.tgt_arity,
                tuple(c._key() for c in self.children), self.signature)

    def __eq__(self, other):
        return isinstance(other, Shape) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __str__(self):
        if self.kind == Shape.COMPOSITE:
            return "{};{}".format(self.children[0], self.children[1])
        if self.kind == Shape.TENSOR:
            return "({} x {})".format(self.children[0], self.children[1])
        return self.name

    __repr__ = __str__


def _check_nesting(element, shape):
    if shape.kind in (Shape.COMPOSITE, Shape.TENSOR):
        if not (isinstance(element, tuple) and len(element) == 2):
            return False
        return _check_nesting(element[0], shape.children[0]) and _check_nesting(element[1], shape.children[1])
    return True


class Span:
    """A 1-cell src -|-> tgt given by legs src <- apex -> tgt."""

    def __init__(self, src, tgt, apex, left, right, shape=None, src_arity=1, tgt_arity=1, name=None):
        if shape is None:
            shape = Shape.atom(name or "span", src_arity, tgt_arity)
        if left.domain != apex or right.domain != apex:
            raise BoundaryMismatch("Legs of {} are not defined on its apex".format(name or shape))
        if left.codomain != src or right.codomain != tgt:
            raise BoundaryMismatch("Legs of {} do not land in its boundary".format(name or shape))
        if (shape.src_arity, shape.tgt_arity) != (src_arity, tgt_arity):
            raise ShapeError("Shape {} does not have arity {} -> {}".format(shape, src_arity, tgt_arity))
        for element in apex:
            if not _check_nesting(element, shape):
                raise ShapeError("Apex element {!r} does not follow shape {}".format(element, shape))
        self.src = src
        self.tgt = tgt
        self.apex = apex
        self.left = left
        self.right = right
        self.shape = shape
        self.src_arity = src_arity
        self.tgt_arity = tgt_arity
        self.name = name or str(shape)

    @classmethod
    def generator(cls, name, src, tgt, apex, left, right, src_arity=1, tgt_arity=1):
        return cls(src, tgt, apex, left, right, Shape.atom(name, src_arity, tgt_arity), src_arity, tgt_arity, name)

    def same_boundary(self, other):
        return (self.src == other.src and self.tgt == other.tgt
                and self.src_arity == other.src_arity and self.tgt_arity == other.tgt_arity)

    def __eq__(self, other):
        if not isinstance(other, Span):
            return False
        return (self.same_boundary(other) and self.apex == other.apex and self.left == other.left
                and self.right == other.right and self.shape == other.shape)

    def __hash__(self):
        return hash((self.apex, self.shape))

    def __repr__(self):
        return "Span({}: {} elements)".format(self.name, len(self.apex))


def span_identity(c, arity=1):
    return Span(c, c, c, FinFn.identity(c), FinFn.identity(c), Shape.identity(arity), arity, arity)


def span_from_function(f, src_arity=1, tgt_arity=1, name=None):
    """The span (1, A, f): A -|-> B of a function f: A -> B."""
    name = name or f.name or "f"
    return Span.generator(name, f.domain, f.codomain, f.domain, FinFn.identity(f.domain), f.renamed(name),
                          src_arity, tgt_arity)


def span_compose(g, f):
    """g after f, by pullback of f's right leg against g's left leg."""
    if f.tgt != g.src or f.tgt_arity != g.src_arity:
        raise BoundaryMismatch("Cannot compose {} after {}".format(g.name, f.name))
    pb = pullback(f.right, g.left)
    return Span(f.src, g.tgt, pb.apex,
                fn_compose(f.left, pb.proj1), fn_compose(g.right, pb.proj2),
                Shape.composite(f.shape, g.shape), f.src_arity, g.tgt_arity)


def chain(*spans):
    """Composite of spans listed in the order they are applied."""
    result = spans[0]
    for s in spans[1:]:
        result = span_compose(s, result)
    return result


def _tensor_leg(f_leg, f_arity, g_leg, g_arity, codomain, apex):
    return FinFn(apex, codomain, {
        (x, y): join_wires(split_wires(f_leg(x), f_arity) + split_wires(g_leg(y), g_arity)) for (x, y) in apex
    })


def span_tensor(f, g):
    apex = product(f.apex, g.apex).apex
    src = tensor_objects(f.src, f.src_arity, g.src, g.src_arity)
    tgt = tensor_objects(f.tgt, f.tgt_arity, g.tgt, g.tgt_arity)
    return Span(src, tgt, apex,
                _tensor_leg(f.left, f.src_arity, g.left, g.src_arity, src, apex),
                _tensor_leg(f.right, f.tgt_arity, g.right, g.tgt_arity, tgt, apex),
                Shape.tensor(f.shape, g.shape), f.src_arity + g.src_arity, f.tgt_arity + g.tgt_arity)


def tensor(*spans):
    result = spans[0]
    for s in spans[1:]:
        result = span_tensor(result, s)
    return result


class SpanTwoCell:
    def __init__(self, source, target, map, name=None):
        if not source.same_boundary(target):
            raise BoundaryMismatch("2-cell {} joins spans with different boundaries".format(name or ""))
        if map.domain != source.apex or map.codomain != target.apex:
            raise BoundaryMismatch("2-cell {} map is not apex(source) -> apex(target)".format(name or ""))
        for x in source.apex:
            y = map(x)
            if target.left(y) != source.left(x) or target.right(y) != source.right(x):
                raise NotATwoCell("2-cell {} does not commute with the legs at {!r}".format(name or "", x))
        self.source = source
        self.target = target
        self.map = map
        self.name = name

    def __eq__(self, other):
        if not isinstance(other, SpanTwoCell):
            return False
        return self.source == other.source and self.target == other.target and self.map == other.map

    def __hash__(self):
        return hash(self.map)

    def __repr__(self):
        return "SpanTwoCell({}: {} => {})".format(self.name or "cell", self.source.name, self.target.name)


def twocell_identity(s):
    return SpanTwoCell(s, s, FinFn.identity(s.apex), "1")


def twocell_vcompose(beta, alpha):
    """beta after alpha."""
    if alpha.target != beta.source:
        raise BoundaryMismatch("Cannot compose 2-cell {} after {}".format(beta.name, alpha.name))
    return SpanTwoCell(alpha.source, beta.target, fn_compose(beta.map, alpha.map))


def twocell_tensor(alpha, beta):
    return SpanTwoCell(span_tensor(alpha.source, beta.source), span_tensor(alpha.target, beta.target),
                       fn_product(alpha.map, beta.map))


def whisker_left(e, tau):
    """tau after e: (x, r) -> (x, tau(r)) on the composite apexes."""
    if e.tgt != tau.source.src or e.tgt_arity != tau.source.src_arity:
        raise BoundaryMismatch("Cannot whisker {} by {}".format(tau.name, e.name))
    source = span_compose(tau.source, e)
    target = span_compose(tau.target, e)
    return SpanTwoCell(source, target, FinFn(source.apex, target.apex, {(x, r): (x, tau.map(r)) for (x, r) in source.apex}))


def whisker_right(tau, e):
    """e after tau: (r, x) -> (tau(r), x) on the composite apexes."""
    if tau.source.tgt != e.src or tau.source.tgt_arity != e.src_arity:
        raise BoundaryMismatch("Cannot whisker {} by {}".format(tau.name, e.name))
    source = span_compose(e, tau.source)
    target = span_compose(e, tau.target)
    return SpanTwoCell(source, target, FinFn(source.apex, target.apex, {(r, x): (tau.map(r), x) for (r, x) in source.apex}))


class _Occurrence:
    __slots__ = ("name", "path", "inputs", "outputs")

    def __init__(self, name, path, inputs, outputs):
        self.name = name
        self.path = path
        self.inputs = inputs
        self.outputs = outputs


class _WireGraph:
    def __init__(self, shape):
        self.counter = shape.src_arity
        self.occurrences = list()
        self.sources = tuple(range(shape.src_arity))
        self.targets = self._trace(shape, self.sources, ())

    def _fresh(self, n):
        wires = tuple(range(self.counter, self.counter + n))
        self.counter += n
        return wires

    def _trace(self, shape, inputs, path):
        if shape.kind == Shape.IDENTITY:
            return inputs
        if shape.kind in (Shape.ATOM, Shape.FLAT):
            outputs = self._fresh(shape.tgt_arity)
            name = shape.name if shape.kind == Shape.ATOM else "flat{}".format(shape.signature)
            self.occurrences.append(_Occurrence(name, path, inputs, outputs))
            return outputs
        first, second = shape.children
        if shape.kind == Shape.COMPOSITE:
            middle = self._trace(first, inputs, path + (0,))
            return self._trace(second, middle, path + (1,))
        left = self._trace(first, inputs[:first.src_arity], path + (0,))
        right = self._trace(second, inputs[first.src_arity:], path + (1,))
        return left + right

    def ordered(self):
        """Generator occurrences keyed by the route from their first output to the boundary."""
        consumers = dict()
        for occ in self.occurrences:
            for slot, wire in enumerate(occ.inputs):
                consumers[wire] = (occ, slot)
        target_index = {wire: i for i, wire in enumerate(self.targets)}
        routes = dict()

        def route(wire):
            if wire in routes:
                return routes[wire]
            if wire in target_index:
                result = (target_index[wire],)
            elif wire in consumers:
                occ, slot = consumers[wire]
                if not occ.outputs:
                    raise ShapeError("Generator {} has no outputs to anchor it".format(occ.name))
                result = route(occ.outputs[0]) + (slot,)
            else:
                raise ShapeError("Wire {} is neither consumed nor an output".format(wire))
            routes[wire] = result
            return result

        keyed = list()
        for occ in self.occurrences:
            if not occ.outputs:
                raise ShapeError("Generator {} has no outputs to anchor it".format(occ.name))
            keyed.append((route(occ.outputs[0]), occ))
        keyed.sort(key=lambda item: (-len(item[0]), item[0]))
        through = tuple((i, target_index[w]) for i, w in enumerate(self.sources) if w in target_index)
        return keyed, through


def _extract(element, path):
    for step in path:
        element = element[step]
    return element


def signature(s):
    if s.shape.kind == Shape.FLAT:
        return s.shape.signature
    keyed, through = _WireGraph(s.shape).ordered()
    return tuple((key, occ.name) for key, occ in keyed) + (("through", through),)


def flatten(s):
    """
    The normal form of s: apex elements become tuples of generator elements ordered from the
    inputs towards the outputs, followed by the values of wires running straight through.
    Returns the flat span and the invertible 2-cell from s to it.
    """
    if s.shape.is_leaf():
        return s, twocell_identity(s)
    graph = _WireGraph(s.shape)
    keyed, through = graph.ordered()
    sig = tuple((key, occ.name) for key, occ in keyed) + (("through", through),)
    paths = [occ.path for _, occ in keyed]
    through_sources = [i for i, _ in through]

    def normal(element):
        values = [_extract(element, path) for path in paths]
        if through_sources:
            wires = split_wires(s.left(element), s.src_arity)
            values.extend(wires[i] for i in through_sources)
        return join_wires(values)

    mapping = {x: normal(x) for x in s.apex}
    apex = FinSet(mapping[x] for x in s.apex)
    back = {y: x for x, y in mapping.items()}
    flat = Span(s.src, s.tgt, apex,
                FinFn(apex, s.src, {y: s.left(back[y]) for y in apex}),
                FinFn(apex, s.tgt, {y: s.right(back[y]) for y in apex}),
                Shape.flat(sig, s.src_arity, s.tgt_arity), s.src_arity, s.tgt_arity, "flat({})".format(s.name))
    return flat, SpanTwoCell(s, flat, FinFn(s.apex, apex, mapping), "flatten")


def structural_iso(a, b):
    """The canonical invertible 2-cell a => b between spans with the same normal form."""
    if a == b:
        return twocell_identity(a)
    if not a.same_boundary(b):
        raise NotStructurallyIsomorphic("{} and {} have different boundaries".format(a.name, b.name))
    if signature(a) != signature(b):
        raise NotStructurallyIsomorphic("{} and {} are built from different wire diagrams".format(a.name, b.name))
    flat_a, iso_a = flatten(a)
    flat_b, iso_b = flatten(b)
    if flat_a.apex != flat_b.apex or flat_a.left != flat_b.left or flat_a.right != flat_b.right:
        raise NotStructurallyIsomorphic("{} and {} do not flatten to the same span".format(a.name, b.name))
    return SpanTwoCell(a, b, fn_compose(iso_b.map.inverse(), iso_a.map), "~")


def span_iso_check(a, b):
    """Some leg-preserving bijection apex(a) -> apex(b), or None."""
    if not a.same_boundary(b):
        raise BoundaryMismatch("{} and {} have different boundaries".format(a.name, b.name))
    if len(a.apex) != len(b.apex):
        return None
    fibres = defaultdict(list)
    for y in b.apex:
        fibres[(b.left(y), b.right(y))].append(y)
    mapping = dict()
    for x in a.apex:
        candidates = fibres.get((a.left(x), a.right(x)))
        if not candidates:
            return None
        mapping[x] = candidates.pop(0)
    return SpanTwoCell(a, b, FinFn(a.apex, b.apex, mapping), "iso")
