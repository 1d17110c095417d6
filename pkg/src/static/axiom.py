from enum import Enum


class Axiom(Enum):
    PENTAGON = 1
    LEFT = 2
    RIGHT = 3
    MIDDLE = 4
    UNIT_UNIT = 5


AXIOM_TITLES = {
    Axiom.PENTAGON: "(1) pentagon",
    Axiom.LEFT: "(2) left unit",
    Axiom.RIGHT: "(3) right unit",
    Axiom.MIDDLE: "(4) middle unit",
    Axiom.UNIT_UNIT: "(5) unit-unit",
}

# Equation groups evaluated by the pointwise checker, keyed by the axiom they come from.
AXIOM_EQUATIONS = {
    Axiom.PENTAGON: (
        "(hg)f = h(gf)",
        "(hg)^f = h^{gf} g^f",
        "h^g = (h^{gf})^{g^f}",
    ),
    Axiom.LEFT: (
        "g^f = g when s(f) = j(u)",
    ),
    Axiom.RIGHT: (
        "psi_y = psi_{r(f)}",
        "1_y^f = 1_{r(f)}",
        "1_y f = f",
    ),
    Axiom.MIDDLE: (
        "f 1_x = f",
    ),
    Axiom.UNIT_UNIT: (
        "psi j(u) = u",
    ),
}

PASTING_LAW = "pasted sides agree"
