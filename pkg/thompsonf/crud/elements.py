from pathlib import Path
from typing import Dict, Union

from pydantic import TypeAdapter, ValidationError

from ..core.exceptions import FormatError
from ..models.plmap import PLMap
from ..schemas.element import ElementOut
from ..services import plmap as pl

PathLike = Union[str, Path]

_ENVIRONMENT = TypeAdapter(Dict[str, ElementOut])


def _read(path: PathLike) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read '{path}': {exc.strerror}") from exc


def load_element(path: PathLike) -> PLMap:
    """
    Read one element from a JSON file of the form {"breaks": [["1/4", "1/2"], ...]}.

    Args:
        path (PathLike): File to read.

    Returns:
        PLMap: The validated element.

    Raises:
        FormatError: If the file is unreadable or not in the element format.
        InvalidElementError: If the breaks do not describe an element of F.
    """
    try:
        element = ElementOut.model_validate_json(_read(path))
    except ValidationError as exc:
        raise FormatError(f"'{path}' is not an element file: {exc.errors()[0]['msg']}") from exc
    return pl.from_breaks(element.points())


def load_environment(path: PathLike) -> Dict[str, PLMap]:
    """
    Read a named-element table: a JSON object mapping names to elements.

    Raises:
        FormatError: If the file is unreadable or not a JSON object of elements.
        InvalidElementError: If an entry does not describe an element of F.
    """
    try:
        table = _ENVIRONMENT.validate_json(_read(path))
    except ValidationError as exc:
        raise FormatError(f"'{path}' is not an environment file: {exc.errors()[0]['msg']}") from exc
    return {name: pl.from_breaks(element.points()) for name, element in table.items()}


def save_element(f: PLMap, path: PathLike) -> None:
    """Write f in the element file format, breaks canonically sorted."""
    Path(path).write_text(ElementOut.from_map(f).model_dump_json(indent=2) + "\n", encoding="utf-8")
