"""
Request and report models for the command-line pipeline and its JSON output.
"""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .decomposition import Decomposition
from .shapes import Shape


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    LATEX = "latex"


class EmitTarget(str, Enum):
    DIMS = "dims"
    GENERATORS = "generators"
    DECOMPOSITION = "decomposition"
    FORMALITY = "formality"
    MASSEY = "massey"
    AEPPLI = "aeppli"
    DERHAM = "derham"
    DIAGRAM = "diagram"


class RunRequest(BaseModel):
    """What to build and what to emit"""

    model_config = ConfigDict(frozen=True)

    family: Optional[str] = None
    case: Optional[str] = None
    params: dict[str, str] = Field(default_factory=dict)
    bicomplex_path: Optional[str] = None
    emit: list[EmitTarget] = Field(default_factory=lambda: [EmitTarget.DIMS])
    format: OutputFormat = OutputFormat.TEXT
    massey: Optional[tuple[str, str, str]] = None
    diamond: bool = False

    @field_validator("emit")
    @classmethod
    def at_least_one_output(cls, value):
        if not value:
            raise ValueError("at least one output must be requested")
        return list(dict.fromkeys(value))

    @model_validator(mode="after")
    def one_input(self):
        if self.bicomplex_path is None and self.family is None:
            raise ValueError("give a family or a bicomplex file")
        if self.bicomplex_path is not None and self.family is not None:
            raise ValueError("give either a family or a bicomplex file, not both")
        if self.bicomplex_path is not None:
            if EmitTarget.MASSEY in self.emit:
                raise ValueError("massey needs a family, not a raw bicomplex")
        return self


class CellValueModel(BaseModel):
    p: int
    q: int
    value: int


class DimsModel(BaseModel):
    """One dimension table per flavour"""

    flavor: str
    cells: list[CellValueModel]
    representatives: dict[str, list[str]] = Field(default_factory=dict)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {(c.p, c.q): c.value for c in self.cells}


class DecompositionEntryModel(BaseModel):
    shape: str
    anchor: tuple[int, int]
    cells: list[tuple[int, int]]
    mult: int = Field(gt=0)

    @classmethod
    def from_entry(cls, shape: Shape, mult: int) -> "DecompositionEntryModel":
        return cls(
            shape=shape.name,
            anchor=shape.anchor,
            cells=sorted(shape.cells),
            mult=mult,
        )

    def to_entry(self) -> tuple[Shape, int]:
        return Shape.from_cells(self.cells), self.mult


class DecompositionModel(BaseModel):
    entries: list[DecompositionEntryModel]

    @classmethod
    def from_decomposition(cls, d: Decomposition) -> "DecompositionModel":
        return cls(entries=[DecompositionEntryModel.from_entry(s, m) for s, m in d.entries])

    def to_decomposition(self) -> Decomposition:
        return Decomposition.from_counter(dict(e.to_entry() for e in self.entries))


class MasseyModel(BaseModel):
    inputs: list[str]
    bidegree: tuple[int, int]
    representative: str
    quotient_dimension: int
    nonvanishing: bool


class FormalityModel(BaseModel):
    weak: bool
    ddbar: Optional[bool] = None
    strong: Optional[bool] = None
    dolbeault: Optional[bool] = None
    geometric_bc_obstructed: Optional[bool] = None
    massey_witness: Optional[str] = None
    triples_examined: int = 0
    notes: list[str] = Field(default_factory=list)


class ReportModel(BaseModel):
    """Everything one run produced"""

    source: str
    dims: list[DimsModel] = Field(default_factory=list)
    generators: Optional[dict[str, list[str]]] = None
    decomposition: Optional[DecompositionModel] = None
    ddbar_lemma: Optional[bool] = None
    betti: Optional[dict[int, int]] = None
    formality: Optional[FormalityModel] = None
    massey: Optional[MasseyModel] = None
    diagram: Optional[str] = None
