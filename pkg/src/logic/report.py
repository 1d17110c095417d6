import pandas as pd


def render_element(element):
    if isinstance(element, tuple):
        return "(" + ", ".join(render_element(e) for e in element) + ")"
    return str(element)


class Violation:
    def __init__(self, law, witness, detail=None):
        self.law = law
        self.witness = witness
        self.detail = detail

    def __eq__(self, other):
        if not isinstance(other, Violation):
            return False
        return (self.law, self.witness, self.detail) == (other.law, other.witness, other.detail)

    def __hash__(self):
        return hash((self.law, self.witness))

    def __repr__(self):
        return "Violation({!r}, {!r})".format(self.law, self.witness)

    def __str__(self):
        text = "{} at {}".format(self.law, render_element(self.witness))
        if self.detail:
            text += ": {}".format(self.detail)
        return text

    def to_dict(self):
        return {
            "law": self.law,
            "witness": self.witness,
            "detail": self.detail,
        }


class ValidationReport:
    """Collects every violated law of one check, each with a witness."""

    def __init__(self, subject):
        self.subject = subject
        self.violations = list()

    def add(self, law, witness, detail=None):
        self.violations.append(Violation(law, witness, detail))

    def check(self, condition, law, witness, detail=None):
        if not condition:
            self.add(law, witness, detail)
        return condition

    def extend(self, other, prefix=None):
        for v in other.violations:
            law = v.law if prefix is None else "{}: {}".format(prefix, v.law)
            self.violations.append(Violation(law, v.witness, v.detail))

    @property
    def ok(self):
        return len(self.violations) == 0

    def laws(self):
        return sorted({v.law for v in self.violations})

    def witnesses(self, law=None):
        return [v.witness for v in self.violations if law is None or v.law == law]

    def summary(self):
        if self.ok:
            return "{}: ok".format(self.subject)
        return "{}: {} violation(s) of {}".format(self.subject, len(self.violations), ", ".join(self.laws()))

    def to_frame(self):
        return pd.DataFrame(
            [[self.subject, v.law, render_element(v.witness), v.detail or ""] for v in self.violations],
            columns=["subject", "law", "witness", "detail"],
        )

    def to_dict(self):
        return {
            "subject": self.subject,
            "ok": self.ok,
            "violations": [v.to_dict() for v in self.violations],
        }

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return self.summary()
        return "{}\n{}".format(self.summary(), self.to_frame().to_string(index=False))
