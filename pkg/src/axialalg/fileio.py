"""On-disk algebra format and canonical JSON serialization.

An algebra file is a JSON document

    {"field": {"kind": "Q"} | {"kind": "Fp", "p": 7},
     "dim": n,
     "basis": ["a", "b", ...],
     "table": [[ [[k, "scalar"], ...] x n ] x n]}

where table[i][j] lists only the nonzero coordinates of basis_i * basis_j
and scalars are strings ("3", "-1/2", or a residue).  Unknown fields are
rejected, and parse -> serialize is the identity on canonical documents.
"""

from __future__ import annotations

import json
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict

from .algebra import Algebra
from .errors import BadParameter
from .fields import Field


class FieldModel(BaseModel):
    model_config = ConfigDict(extra="forbid")
    kind: Literal["Q", "Fp"]
    p: Optional[int] = None

    def to_field(self) -> Field:
        return Field.from_json(self.model_dump(exclude_none=True))

    @staticmethod
    def from_field(field: Field) -> "FieldModel":
        return FieldModel(**field.to_json())


class AlgebraDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")
    field: FieldModel
    dim: int
    basis: list[str]
    table: list[list[list[tuple[int, str]]]]


def to_document(A: Algebra) -> AlgebraDocument:
    table = []
    for i in range(A.dim):
        row = []
        for j in range(A.dim):
            row.append([(k, str(c)) for k, c in enumerate(A.table[i][j]) if c != 0])
        table.append(row)
    return AlgebraDocument(
        field=FieldModel.from_field(A.field),
        dim=A.dim,
        basis=list(A.basis_names),
        table=table,
    )


def from_document(doc) -> Algebra:
    if isinstance(doc, dict):
        doc = AlgebraDocument.model_validate(doc)
    field = doc.field.to_field()
    n = doc.dim
    if len(doc.basis) != n or len(doc.table) != n:
        raise BadParameter("dim does not match basis/table size")
    table = []
    for i, row in enumerate(doc.table):
        if len(row) != n:
            raise BadParameter(f"table row {i} has {len(row)} entries, expected {n}")
        trow = []
        for entries in row:
            coords = [field.zero] * n
            for k, s in entries:
                if not 0 <= k < n:
                    raise BadParameter(f"coordinate index {k} out of range")
                coords[k] = field.scalar(s)
            trow.append(coords)
        table.append(trow)
    return Algebra(field, doc.basis, table)


def canonical_json(obj) -> str:
    """Deterministic JSON text: sorted keys, fixed layout, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def save_algebra(A: Algebra, path: str):
    with open(path, "w") as fh:
        fh.write(canonical_json(to_document(A).model_dump(exclude_none=True)))


def load_algebra(path: str) -> Algebra:
    with open(path) as fh:
        raw = json.load(fh)
    return from_document(raw)
