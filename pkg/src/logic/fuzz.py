"""
Seeded single-value mutations of skew monoidales, and the cross-check of the two axiom
checkers over them.
"""
import numpy as np
import pandas as pd

import customlogger as logger
from logic.skew_monoidale import verify, wellformed
from settings import DEFAULT_MUTATIONS, DEFAULT_SEED
from static.axiom import AXIOM_TITLES, Axiom

MUTABLE = ("r", "j", "phi", "psi", "tau", "delta")


def _mutation_sites(m):
    sites = list()
    for field in MUTABLE:
        fn = getattr(m, field)
        if len(fn.codomain) < 2:
            continue
        for x in fn.domain:
            sites.append((field, x))
    return sites


def mutants(m, count=DEFAULT_MUTATIONS, seed=DEFAULT_SEED, wellformed_only=False, max_attempts=None):
    """
    Up to count distinct instances differing from m in exactly one value of one of r, j, phi,
    psi, tau, delta.
    """
    rng = np.random.default_rng(seed)
    sites = _mutation_sites(m)
    if not sites:
        return []
    max_attempts = max_attempts or 20 * count
    seen = set()
    results = list()
    for _ in range(max_attempts):
        if len(results) >= count:
            break
        field, x = sites[rng.integers(len(sites))]
        fn = getattr(m, field)
        current = fn(x)
        choices = [y for y in fn.codomain if y != current]
        y = choices[rng.integers(len(choices))]
        key = (field, x, y)
        if key in seen:
            continue
        seen.add(key)
        mutant = m.replace(**{field: fn.with_value(x, y)},
                           name="{}[{}({})={}]".format(m.name or "m", field, x, y))
        if wellformed_only and not wellformed(mutant).ok:
            continue
        results.append(mutant)
    logger.debug("{} mutants of {!r} from seed {}".format(len(results), m, seed))
    return results


def cross_check(instances):
    """Verdicts of both checkers per instance and axiom."""
    rows = list()
    for m in instances:
        report = verify(m)
        pointwise, bicategorical = report.pointwise_verdicts(), report.bicategorical_verdicts()
        row = {"instance": m.name, "wellformed": report.wellformed, "agree": report.cross_check}
        for axiom in Axiom:
            row[AXIOM_TITLES[axiom]] = "{}/{}".format(pointwise[axiom].value, bicategorical[axiom].value)
        rows.append(row)
    frame = pd.DataFrame(rows, columns=["instance", "wellformed", "agree"] + [AXIOM_TITLES[a] for a in Axiom])
    disagreements = int((~frame["agree"]).sum()) if len(frame) else 0
    if disagreements:
        logger.warning("{} of {} instances have disagreeing checkers".format(disagreements, len(frame)))
    return frame
