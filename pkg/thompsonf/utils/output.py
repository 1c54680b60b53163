from enum import Enum
from typing import Any, List, Literal

import click
from pydantic import BaseModel

OutputFormat = Literal["text", "json"]


def _has_own_str(value: Any) -> bool:
    return isinstance(value, BaseModel) and type(value).__str__ is not BaseModel.__str__


def _is_block(value: Any) -> bool:
    if isinstance(value, BaseModel):
        return not _has_own_str(value)
    return isinstance(value, list) and bool(value) and isinstance(value[0], (list, BaseModel))


def _inline(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None:
        return "-"
    if isinstance(value, Enum):
        return str(value.value)
    if isinstance(value, tuple):
        return "(" + ", ".join(_inline(v) for v in value) + ")"
    if isinstance(value, list):
        return "; ".join(_inline(v) for v in value) if value else "none"
    return str(value)


def _block_lines(value: Any, depth: int) -> List[str]:
    if isinstance(value, BaseModel):
        return _field_lines(value, depth)
    return [f"{'  ' * depth}- {_inline(item)}" for item in value]


def _field_lines(model: BaseModel, depth: int) -> List[str]:
    pad = "  " * depth
    lines: List[str] = []
    for name in type(model).model_fields:
        value = getattr(model, name)
        if _is_block(value):
            lines.append(f"{pad}{name}:")
            lines.extend(_block_lines(value, depth + 1))
        else:
            lines.append(f"{pad}{name}: {_inline(value)}")
    return lines


def render_text(model: BaseModel) -> str:
    """
    Human-readable rendering of a report.

    Single-field reports print the bare value; otherwise one "name: value"
    line per field, with nested reports and lists of reports indented below
    their field name. Booleans print as yes/no.
    """
    if _has_own_str(model):
        return str(model)
    names = list(type(model).model_fields)
    if len(names) == 1:
        value = getattr(model, names[0])
        return "\n".join(_block_lines(value, 0)) if _is_block(value) else _inline(value)
    return "\n".join(_field_lines(model, 0))


def render(model: BaseModel, fmt: OutputFormat = "text") -> str:
    """Render a report as text or as indented JSON carrying the same values."""
    if fmt == "json":
        return model.model_dump_json(indent=2)
    return render_text(model)


def emit(model: BaseModel, fmt: OutputFormat = "text") -> None:
    click.echo(render(model, fmt))
