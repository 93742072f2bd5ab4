"""
Regenerates the table and decomposition corpus for every catalogue case.
"""

import logging
import os
from collections.abc import Iterable
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

from .builder import CATALOGUE, CatalogueCase
from .core.config import EngineConfig
from .emitters import get_emitter
from .models import EmitTarget, OutputFormat, RunRequest
from .pipeline import build_report

logger = logging.getLogger(__name__)

# artifact name -> (targets, formats)
ARTIFACTS = {
    "dims": ([EmitTarget.DIMS, EmitTarget.AEPPLI], (OutputFormat.JSON, OutputFormat.LATEX)),
    "decomposition": ([EmitTarget.DECOMPOSITION], (OutputFormat.JSON, OutputFormat.TEXT)),
    "formality": ([EmitTarget.FORMALITY], (OutputFormat.JSON,)),
}


def _write_case(entry: CatalogueCase, out_dir: str, config: EngineConfig) -> list[str]:
    directory = os.path.join(out_dir, entry.key)
    os.makedirs(directory, exist_ok=True)
    written = []
    for artifact, (targets, formats) in ARTIFACTS.items():
        request = RunRequest(family=entry.family, case=entry.case, emit=targets)
        report = build_report(request, config)
        for output_format in formats:
            emitter = get_emitter(output_format, report)
            path = os.path.join(directory, f"{artifact}.{emitter.extension}")
            with open(path, "w", encoding="utf-8") as f:
                f.write(emitter.render())
            written.append(path)
    logger.debug(f"wrote {len(written)} artifacts for {entry.key}")
    return written


def regenerate_golden(
    out_dir: str,
    config: Optional[EngineConfig] = None,
    cases: Iterable[CatalogueCase] = CATALOGUE,
) -> list[str]:
    """Write ``<out_dir>/<family>-<case>/<artifact>.<ext>``; returns the sorted paths."""
    config = config or EngineConfig()
    cases = list(cases)
    with ThreadPoolExecutor(max_workers=config.golden_workers) as pool:
        results = list(pool.map(lambda entry: _write_case(entry, out_dir, config), cases))
    paths = sorted(path for written in results for path in written)
    logger.info(f"regenerated {len(paths)} golden files for {len(cases)} cases")
    return paths
