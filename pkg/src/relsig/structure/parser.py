from __future__ import annotations

import json
import logging
from typing import Any, TypeVar

from pydantic import BaseModel, ValidationError

from relsig.core.errors import DocumentError, DocumentSyntaxError, InvalidSystemError
from relsig.schemas.documents import SystemDocument
from relsig.structure.structure_function import (
    PathSetSpec,
    StructureFunction,
    structure_from_pathsets,
)

logger = logging.getLogger(__name__)

M = TypeVar("M", bound=BaseModel)


def load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(exc.msg, exc.lineno, exc.colno) from exc


def validate_document(model: type[M], payload: Any) -> M:
    try:
        return model.model_validate(payload)
    except ValidationError as exc:
        first = exc.errors()[0]
        location = ".".join(str(part) for part in first["loc"]) or "<root>"
        raise DocumentError(
            f"invalid {model.__name__}: {location}: {first['msg']}",
            errors=[{"loc": list(e["loc"]), "msg": e["msg"]} for e in exc.errors()],
        ) from exc


def parse_system_document(text: str) -> SystemDocument:
    return validate_document(SystemDocument, load_json(text))


def parse_pathset_spec(text: str) -> PathSetSpec:
    document = parse_system_document(text)
    if document.pathsets is None:
        raise InvalidSystemError("document gives a truth table, not path sets")
    return PathSetSpec(document.n, tuple(tuple(p) for p in document.pathsets))


def structure_from_document(document: SystemDocument) -> StructureFunction:
    if document.pathsets is not None:
        spec = PathSetSpec(document.n, tuple(tuple(p) for p in document.pathsets))
        return structure_from_pathsets(spec)
    logger.debug("n=%d read from truth table", document.n)
    return StructureFunction.from_table_string(document.n, document.table or "")


def load_structure(text: str) -> StructureFunction:
    """Parse a system document in either form into a truth table (not yet checked for semicoherence)."""
    return structure_from_document(parse_system_document(text))
