"""Text, JSON and markdown rendering of command results."""
import json
from typing import Any, Mapping

import pandas as pd

from weyl_explorer.kgroup.kgclass import KGClass
from weyl_explorer.utils.parsing import format_word


def markdown_table(frame: pd.DataFrame) -> str:
    """Render a DataFrame as a pipe table."""
    columns = [str(column) for column in frame.columns]
    lines = [
        "| " + " | ".join(columns) + " |",
        "| " + " | ".join("---" for _ in columns) + " |",
    ]
    for row in frame.itertuples(index=False):
        lines.append("| " + " | ".join(str(value) for value in row) + " |")
    return "\n".join(lines)


def render_frame(frame: pd.DataFrame, fmt: str) -> str:
    """Render a table in the requested format."""
    if fmt == "json":
        return frame.to_json(orient="records")
    if fmt == "markdown":
        return markdown_table(frame)
    return frame.to_string(index=False)


def render_mapping(data: Mapping[str, Any], text: str, fmt: str) -> str:
    """Render a flat result.

    Args:
        data: JSON-serializable result.
        text: Human-readable rendering used for the text format.
        fmt: Output format.

    Returns:
        str: Rendered result.
    """
    if fmt == "json":
        return json.dumps(data)
    if fmt == "markdown":
        frame = pd.DataFrame(
            {"field": list(data), "value": [str(v) for v in data.values()]}
        )
        return markdown_table(frame)
    return text


def class_frame(kg_class: KGClass) -> pd.DataFrame:
    """Tabulate the terms of a class, leading terms first."""
    return pd.DataFrame(
        [
            {
                "term": f"[{kg_class.basis.value}({format_word(w.word)})]",
                "coefficient": coefficient,
            }
            for w, coefficient in kg_class.sorted_terms()
        ],
        columns=["term", "coefficient"],
    )


def render_class(kg_class: KGClass, fmt: str) -> str:
    """Render a Grothendieck group class."""
    if fmt == "json":
        return json.dumps(kg_class.to_json())
    if fmt == "markdown":
        return markdown_table(class_frame(kg_class))
    return str(kg_class)
