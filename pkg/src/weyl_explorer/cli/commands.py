"""Subcommand implementations.

Every command returns the complete rendered output as a string, so nothing
is printed when a command fails half-way.
"""
import json

import pandas as pd

from weyl_explorer.cli.config import CliConfig
from weyl_explorer.cli.rendering import (
    markdown_table,
    render_class,
    render_frame,
    render_mapping,
)
from weyl_explorer.coxeter.bruhat import interval
from weyl_explorer.coxeter.parabolic import (
    ParabolicSubset,
    coset,
    min_coset_rep,
)
from weyl_explorer.kgroup.decompositions import (
    dualverma_in_simple,
    gc_complex_terms,
    localcoh_class,
    mobius,
    simple_in_dualverma,
    verma_identity_check,
)
from weyl_explorer.klpoly.table import kl, kl_table
from weyl_explorer.schubert.datum import schubert_datum, schubert_scan
from weyl_explorer.schubert.patterns import (
    one_line_permutation,
    pattern_avoidance_smooth_typeA,
)
from weyl_explorer.utils.parsing import format_word

OBJECTS = ("simple", "dualverma", "localcoh")


def _bracket(word: tuple) -> str:
    return f"[{format_word(word)}]"


def cmd_group(config: CliConfig) -> str:
    """Summarize a Weyl group."""
    group = config.build()
    data = {
        "type": str(group.cartan),
        "order": group.order,
        "longest_length": group.longest_element.length,
        "generators": group.rank,
        "positive_roots": len(group.positive_roots),
    }
    text = (
        f"{group.cartan}: order {group.order}, "
        f"longest element length {group.longest_element.length}, "
        f"{group.rank} generators, "
        f"{len(group.positive_roots)} positive roots"
    )
    return render_mapping(data, text, config.format)


def cmd_kl(
    config: CliConfig, v_word: str, w_word: str, column: bool = False
) -> str:
    """Render P_{v,w}, or the whole column P_{.,w} with ``column``."""
    group = config.build()
    w = group.element_from_word(w_word)
    if column:
        return render_frame(kl_table(group).column(w), config.format)

    v = group.element_from_word(v_word)
    polynomial = kl(v, w)
    data = {
        "v": list(v.word),
        "w": list(w.word),
        "P": polynomial.to_json(),
    }
    return render_mapping(data, str(polynomial), config.format)


def cmd_decompose(config: CliConfig, w_word: str, obj: str) -> str:
    """Render the decomposition of a simple, dual Verma or local class."""
    group = config.build()
    w = group.element_from_word(w_word)
    if obj == "simple":
        kg_class = simple_in_dualverma(w, config.regime)
    elif obj == "dualverma":
        kg_class = dualverma_in_simple(w, config.regime)
    elif obj == "localcoh":
        kg_class = localcoh_class(w, config.regime)
    else:
        raise ValueError(
            f"Unknown object '{obj}', expected one of {', '.join(OBJECTS)}"
        )
    return render_class(kg_class, config.format)


def cmd_smoothness(config: CliConfig, w_word: str) -> str:
    """Render the Schubert datum of X(w)."""
    group = config.build()
    w = group.element_from_word(w_word)
    datum = schubert_datum(w)
    maximals = [_bracket(v.word) for v in datum.sorted_singular_locus]

    data = {
        "w": list(w.word),
        "dim": datum.dim,
        "codim": datum.codim,
        "rationally_smooth": datum.rationally_smooth,
        "singular_locus_maximals": [
            list(v.word) for v in datum.sorted_singular_locus
        ],
    }
    if datum.rationally_smooth:
        lines = ["rationally smooth"]
    else:
        lines = [
            "rationally singular; singular locus maximals: "
            + ", ".join(maximals)
        ]
    lines += [f"dim: {datum.dim}", f"codim: {datum.codim}"]

    if group.cartan.family == "A":
        permutation = one_line_permutation(w)
        smooth = pattern_avoidance_smooth_typeA(w)
        data["permutation"] = list(permutation)
        data["smooth"] = smooth
        lines.append(
            "permutation: " + " ".join(str(i) for i in permutation)
        )
        lines.append(
            f"type A: {'smooth' if smooth else 'singular'} "
            "(pattern avoidance of 3412 and 4231; smooth and rationally "
            "smooth coincide)"
        )
    return render_mapping(data, "\n".join(lines), config.format)


def cmd_gc(config: CliConfig, w_word: str) -> str:
    """Render the degrees of the Grothendieck-Cousin complex of X(w)."""
    group = config.build()
    w = group.element_from_word(w_word)
    degrees = gc_complex_terms(w)

    if config.format == "json":
        return json.dumps(
            [
                {"degree": i, "terms": [list(y.word) for y in elements]}
                for i, elements in enumerate(degrees)
            ]
        )

    rendered = [
        ", ".join(_bracket(y.word) for y in elements) for elements in degrees
    ]
    if config.format == "markdown":
        frame = pd.DataFrame(
            {"degree": range(len(degrees)), "terms": rendered}
        )
        return markdown_table(frame)
    return "\n".join(
        f"{i}: {{{terms}}}" for i, terms in enumerate(rendered)
    )


def cmd_verma(config: CliConfig, x_word: str, y_word: str) -> str:
    """Check Verma's identity on the interval [x, y]."""
    group = config.build()
    x = group.element_from_word(x_word)
    y = group.element_from_word(y_word)
    holds = verma_identity_check(x, y)
    data = {
        "x": list(x.word),
        "y": list(y.word),
        "holds": holds,
        "mobius": mobius(x, y),
    }
    return render_mapping(data, "true" if holds else "false", config.format)


def cmd_interval(config: CliConfig, v_word: str, w_word: str) -> str:
    """List the Bruhat interval [v, w]."""
    group = config.build()
    elements = interval(
        group.element_from_word(v_word), group.element_from_word(w_word)
    )
    frame = pd.DataFrame(
        {
            "element": [format_word(z.word) for z in elements],
            "length": [z.length for z in elements],
        }
    )
    return render_frame(frame, config.format)


def cmd_coset(config: CliConfig, w_word: str, subset_text: str) -> str:
    """Render the minimal representative of w W_J and the coset."""
    group = config.build()
    w = group.element_from_word(w_word)
    subset = ParabolicSubset.from_text(subset_text, group.rank)
    representative = min_coset_rep(w, subset)
    members = coset(w, subset)
    data = {
        "w": list(w.word),
        "J": sorted(subset.indices),
        "representative": list(representative.word),
        "coset": [list(u.word) for u in members],
    }
    text = (
        f"minimal representative of [{w}] W_{subset}: "
        f"{_bracket(representative.word)}\n"
        "coset: " + ", ".join(_bracket(u.word) for u in members)
    )
    return render_mapping(data, text, config.format)


def cmd_scan(config: CliConfig) -> str:
    """Tabulate the Schubert data of every element."""
    return render_frame(schubert_scan(config.build()), config.format)
