"""Reproduction of the SL_4 computations with a pass/fail report.

The flag variety of SL_4 has Weyl group A3. For w = s1 s2 s3 s2 s1 the
Schubert variety X(w) is a singular divisor; its KL polynomials are 1 + q
below s1 s3 and 1 elsewhere, and in characteristic zero the local
cohomology module H^1_{X(w)}(O_X) has class [L(w)] + [L(s1 s3)], so it is
not simple, whereas in positive characteristic it equals L(w).
"""
import json
import logging
import time
from dataclasses import dataclass
from typing import Callable, List, Tuple

import pandas as pd

from weyl_explorer.cli.rendering import markdown_table
from weyl_explorer.coxeter.bruhat import bruhat_leq, lower_interval
from weyl_explorer.coxeter.group import WeylGroup, build_group
from weyl_explorer.kgroup.decompositions import (
    dualverma_in_simple_charp,
    is_localcoh_simple,
    localcoh_divisor_class_char0,
    verma_identity_check,
)
from weyl_explorer.kgroup.kgclass import Basis, KGClass, Regime
from weyl_explorer.klpoly.polynomial import Polynomial
from weyl_explorer.klpoly.table import kl
from weyl_explorer.schubert.datum import (
    rationally_smooth,
    singular_locus_maximals,
)
from weyl_explorer.schubert.patterns import pattern_avoidance_smooth_typeA

logger = logging.getLogger(__name__)

DIVISOR_WORD = "1 2 3 2 1"
SINGULAR_LOCUS = "1 3"


@dataclass
class DemoCheck:
    """Outcome of one reproduced statement."""

    name: str
    passed: bool
    detail: str
    seconds: float


def _kl_table(group: WeylGroup) -> Tuple[bool, str]:
    w = group.element_from_word(DIVISOR_WORD)
    locus = group.element_from_word(SINGULAR_LOCUS)
    mismatches = []
    for v in lower_interval(w):
        expected = (
            Polynomial((1, 1)) if bruhat_leq(v, locus) else Polynomial.one()
        )
        if kl(v, w) != expected:
            mismatches.append(f"P_[{v}],w = {kl(v, w)}")
    if mismatches:
        return False, "; ".join(mismatches)
    return True, "1 + q for v <= s1 s3, 1 otherwise"


def _non_simplicity(group: WeylGroup) -> Tuple[bool, str]:
    w = group.element_from_word(DIVISOR_WORD)
    expected = KGClass(
        Basis.L,
        Regime.CHAR_0,
        {w: 1, group.element_from_word(SINGULAR_LOCUS): 1},
    )
    result = localcoh_divisor_class_char0(w)
    return result == expected, f"[H^1_X(w)(O_X)] = {result}"


def _char_p_simplicity(group: WeylGroup) -> Tuple[bool, str]:
    w = group.element_from_word(DIVISOR_WORD)
    char_p = is_localcoh_simple(w, Regime.CHAR_P)
    char_0 = is_localcoh_simple(w, Regime.CHAR_0)
    return (
        char_p and not char_0,
        f"simple in characteristic p: {char_p}; in characteristic 0: "
        f"{char_0}",
    )


def _verma_identity(group: WeylGroup) -> Tuple[bool, str]:
    pairs = [(x, y) for y in group for x in lower_interval(y)]
    failures = [
        f"[{x}] <= [{y}]" for x, y in pairs if not verma_identity_check(x, y)
    ]
    if failures:
        return False, "fails on " + ", ".join(failures)
    return True, f"holds on all {len(pairs)} comparable pairs"


def _multiplicity_free(group: WeylGroup) -> Tuple[bool, str]:
    for w in group:
        decomposition = dualverma_in_simple_charp(w)
        if set(decomposition.terms.values()) != {1} or set(
            decomposition.terms
        ) != set(lower_interval(w)):
            return False, f"[M({w})] = {decomposition}"
    return True, "[M(w)] = sum of [L(y)] over y <= w for every w"


def _singular_locus(group: WeylGroup) -> Tuple[bool, str]:
    w = group.element_from_word(DIVISOR_WORD)
    locus = singular_locus_maximals(w)
    expected = {group.element_from_word(SINGULAR_LOCUS)}
    disagreements = [
        str(u)
        for u in group
        if pattern_avoidance_smooth_typeA(u) != rationally_smooth(u)
    ]
    passed = locus == expected and not disagreements
    detail = (
        "singular locus maximals: "
        + ", ".join(f"[{v}]" for v in sorted(locus, key=lambda v: v.index))
        + f"; pattern avoidance disagrees on {len(disagreements)} elements"
    )
    return passed, detail


CHECKS: List[Tuple[str, Callable[[WeylGroup], Tuple[bool, str]]]] = [
    ("KL polynomials of s1 s2 s3 s2 s1", _kl_table),
    ("H^1 of X(s1 s2 s3 s2 s1) in characteristic 0", _non_simplicity),
    ("local cohomology simple only in characteristic p", _char_p_simplicity),
    ("Verma's identity on A3", _verma_identity),
    ("multiplicity-free dual Verma modules on A3", _multiplicity_free),
    ("singular locus of X(s1 s2 s3 s2 s1)", _singular_locus),
]


def run_sl4_demo() -> List[DemoCheck]:
    """Run every check on the Weyl group of SL_4."""
    group = build_group("A3")
    results = []
    for name, check in CHECKS:
        start = time.perf_counter()
        passed, detail = check(group)
        elapsed = time.perf_counter() - start
        logger.info("%s: %s in %.3fs", name, passed, elapsed)
        results.append(DemoCheck(name, passed, detail, elapsed))
    return results


def render_demo(results: List[DemoCheck], fmt: str) -> str:
    """Render demo results as a pass/fail report."""
    frame = pd.DataFrame(
        {
            "status": ["PASS" if r.passed else "FAIL" for r in results],
            "check": [r.name for r in results],
            "detail": [r.detail for r in results],
            "seconds": [round(r.seconds, 4) for r in results],
        }
    )
    if fmt == "json":
        return json.dumps(
            {
                "passed": all(r.passed for r in results),
                "checks": json.loads(frame.to_json(orient="records")),
            }
        )
    if fmt == "markdown":
        return markdown_table(frame)

    lines = [
        f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.detail}"
        for r in results
    ]
    verdict = "PASS" if all(r.passed for r in results) else "FAIL"
    lines.append(f"overall: {verdict}")
    return "\n".join(lines)
