"""
Turns a :class:`RunRequest` into a :class:`ReportModel`.
"""

import json
import logging
import os
from typing import Any, Optional

import yaml

from .bicomplex import Bicomplex, validate
from .builder import build_C, build_closure, preset
from .builder.splitting import SplittingData
from .cohomology import BIGRADED_FLAVORS, Flavor, betti_numbers, compute
from .core.config import EngineConfig
from .core.errors import ErrorCode
from .core.exceptions import InvalidCaseException, ParseException
from .decomposition import decompose, render_dot
from .formality import WITNESSES, bc_class, formality_report, massey_abc, raw_formality_report
from .models import (
    CellValueModel,
    DecompositionModel,
    DimsModel,
    EmitTarget,
    FormalityModel,
    MasseyModel,
    ReportModel,
    RunRequest,
)
from .shapes import SQUARE, Cell

logger = logging.getLogger(__name__)

MANIFEST_KEYS = ("family", "case", "A", "n", "nprime", "q", "r", "x3", "emit", "format", "massey")

# flavours printed for each dims-like target
DIMS_FLAVORS = {
    EmitTarget.DIMS: (Flavor.DOLBEAULT, Flavor.BOTT_CHERN),
    EmitTarget.AEPPLI: (Flavor.CONJ_DOLBEAULT, Flavor.AEPPLI),
}


def _file_error(path: str, line: int, column: int, reason: str, cause=None) -> ParseException:
    return ParseException(
        ErrorCode.PRS004,
        text=path,
        column=column,
        context={"path": path, "line": line, "column": column, "reason": reason},
        original_exception=cause,
    )


def load_manifest(path: str) -> dict[str, Any]:
    """Read ``key = value`` lines; values follow YAML scalar syntax."""
    try:
        with open(path, encoding="utf-8") as f:
            lines = f.read().splitlines()
    except OSError as e:
        raise _file_error(path, 1, 1, str(e), e) from e

    rewritten = []
    for number, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            rewritten.append("")
            continue
        if "=" not in line:
            column = len(line) - len(line.lstrip()) + 1
            raise _file_error(path, number, column, "expected 'key = value'")
        key, value = line.split("=", 1)
        if key.strip() not in MANIFEST_KEYS:
            raise _file_error(path, number, len(key) - len(key.lstrip()) + 1, f"unknown key {key.strip()!r}")
        rewritten.append(f"{key.strip()}: {value.strip()}")

    try:
        loaded = yaml.safe_load("\n".join(rewritten)) or {}
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        line = mark.line + 1 if mark else 1
        column = mark.column + 1 if mark else 1
        raise _file_error(path, line, column, getattr(e, "problem", None) or str(e), e) from e
    return {key: value for key, value in loaded.items() if value is not None}


def load_bicomplex(path: str) -> Bicomplex:
    """Read a raw bicomplex from JSON (or YAML) and check its identities."""
    try:
        with open(path, encoding="utf-8") as f:
            if path.lower().endswith((".yaml", ".yml")):
                data = yaml.safe_load(f)
            else:
                data = json.load(f)
    except OSError as e:
        raise _file_error(path, 1, 1, str(e), e) from e
    except json.JSONDecodeError as e:
        raise _file_error(path, e.lineno, e.colno, e.msg, e) from e
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        raise _file_error(
            path, mark.line + 1 if mark else 1, mark.column + 1 if mark else 1, str(e), e
        ) from e
    if not isinstance(data, dict):
        raise _file_error(path, 1, 1, "expected an object with 'cells', 'del' and 'delbar'")
    complex_ = Bicomplex.from_json(data, source=path)
    violations = validate(complex_)
    if violations:
        raise _file_error(path, 1, 1, "; ".join(violations))
    return complex_


def splitting_data_for(request: RunRequest) -> SplittingData:
    params = dict(request.params)
    return preset(request.family, request.case, **params)


def table_cells(b: Bicomplex, skip_origin: bool = True) -> list[Cell]:
    """Rows in table order: by total degree, then by decreasing p."""
    bounds = b.bounds()
    if bounds is None:
        return []
    p_min, p_max, q_min, q_max = bounds
    cells = [
        (p, q)
        for p in range(p_min, p_max + 1)
        for q in range(q_min, q_max + 1)
        if not (skip_origin and (p, q) == (0, 0))
    ]
    return sorted(cells, key=lambda c: (c[0] + c[1], -c[0]))


def dims_model(
    b: Bicomplex, flavor: Flavor, with_representatives: bool = True, skip_origin: bool = True
) -> DimsModel:
    cells = []
    representatives = {}
    for p, q in table_cells(b, skip_origin):
        group = compute(b, flavor, p, q)
        cells.append(CellValueModel(p=p, q=q, value=group.dimension))
        if with_representatives and group.representatives:
            representatives[f"{p},{q}"] = [b.describe(r) for r in group.representatives]
    return DimsModel(flavor=flavor.value, cells=cells, representatives=representatives)


def massey_model(data: SplittingData, triple: Optional[tuple[str, str, str]]) -> MasseyModel:
    triple = triple or WITNESSES.get((data.family, data.case))
    if triple is None:
        raise InvalidCaseException(data.family, f"no catalogued Massey triple for case {data.case!r}")
    closure = build_closure(data)
    classes = [bc_class(closure, text) for text in triple]
    result = massey_abc(closure, *classes)
    return MasseyModel(
        inputs=list(triple),
        bidegree=result.bidegree,
        representative=closure.describe(result.representative),
        quotient_dimension=result.quotient_dimension,
        nonvanishing=result.nonvanishing,
    )


def build_report(request: RunRequest, config: Optional[EngineConfig] = None) -> ReportModel:
    """Run every requested computation; deterministic in its inputs."""
    config = config or EngineConfig()
    data: Optional[SplittingData] = None
    if request.bicomplex_path is not None:
        complex_ = load_bicomplex(request.bicomplex_path)
        source = os.path.basename(request.bicomplex_path)
    else:
        data = splitting_data_for(request)
        complex_ = build_C(data)
        source = f"{data.family}-{data.case}" if data.case else data.family
    logger.info(f"running {', '.join(t.value for t in request.emit)} for {source}")

    report = ReportModel(source=source)
    # the diamond needs h^{0,0}; tables start at (1,0)
    skip_origin = data is not None and not request.diamond
    for target, flavors in DIMS_FLAVORS.items():
        if target in request.emit:
            report.dims.extend(
                dims_model(complex_, flavor, skip_origin=skip_origin) for flavor in flavors
            )
    if EmitTarget.GENERATORS in request.emit:
        report.generators = {
            f"{p},{q}": [complex_.describe(complex_.basis_element(label)) for label in complex_.labels(p, q)]
            for p, q in complex_.cells()
        }
    if EmitTarget.DECOMPOSITION in request.emit or EmitTarget.DIAGRAM in request.emit:
        decomposition = decompose(complex_)
        if EmitTarget.DECOMPOSITION in request.emit:
            report.decomposition = DecompositionModel.from_decomposition(decomposition)
            report.ddbar_lemma = all(
                shape.is_dot or shape.kind == SQUARE for shape, _ in decomposition.entries
            )
        if EmitTarget.DIAGRAM in request.emit:
            report.diagram = render_dot(decomposition)
    if EmitTarget.DERHAM in request.emit:
        report.betti = betti_numbers(complex_)
    if EmitTarget.FORMALITY in request.emit:
        if data is not None:
            formality = formality_report(data, config)
        else:
            formality = raw_formality_report(complex_)
        report.formality = FormalityModel(**formality.as_dict())
    if EmitTarget.MASSEY in request.emit:
        report.massey = massey_model(data, request.massey)
    return report


def all_flavors_table(b: Bicomplex) -> dict[str, dict[Cell, int]]:
    return {
        flavor.value: {cell: compute(b, flavor, *cell).dimension for cell in table_cells(b)}
        for flavor in BIGRADED_FLAVORS
    }
