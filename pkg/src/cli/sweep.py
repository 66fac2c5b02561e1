"""
Batch verification over random parameter sets.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd
from loguru import logger
from rich.console import Console
from rich.table import Table

from config.settings import Settings, settings
from src.core import HypergeometricError
from src.parameters import random_generic
from src.periods import corollary_residual, tpr_residual_00, x_max

COLUMNS = ["m", "seed", "x", "identity", "rel_residual", "tol", "passed", "error"]


@dataclass(frozen=True)
class SweepCase:
    """One parameter draw checked at every x."""

    m: int
    seed: int
    x_values: tuple
    series_tol: float


def sweep_x_values(m: int, x_values: Sequence[float]) -> tuple:
    """Requested x values clipped to x_max(m), duplicates removed, order kept."""
    clipped = []
    for x in x_values:
        value = min(float(x), x_max(m))
        if value not in clipped:
            clipped.append(value)
    return tuple(clipped)


def _init_worker(values: Dict[str, Any]) -> None:
    """Give a worker process the settings of the parent."""
    settings.apply(Settings(**values))


def run_case(case: SweepCase) -> List[Dict[str, Any]]:
    """Rows for one draw; errors become failed rows instead of aborting the sweep."""
    try:
        p = random_generic(case.m, case.seed, margin=settings.sweep_margin)
    except HypergeometricError as e:
        return [_error_row(case, None, "draw", e)]

    rows = []
    for x in case.x_values:
        for identity, check, tol in (
            ("tpr_00", tpr_residual_00, settings.tpr_tolerance),
            ("corollary_52", corollary_residual, settings.corollary_tolerance),
        ):
            try:
                report = check(p, x, tol=tol, series_tol=case.series_tol)
            except HypergeometricError as e:
                rows.append(_error_row(case, x, identity, e))
                continue
            rows.append(
                {
                    "m": case.m,
                    "seed": case.seed,
                    "x": x,
                    "identity": identity,
                    "rel_residual": report.rel_residual,
                    "tol": report.tol,
                    "passed": report.passed,
                    "error": None,
                }
            )
    return rows


def _error_row(case: SweepCase, x: Optional[float], identity: str, error: Exception) -> Dict[str, Any]:
    return {
        "m": case.m,
        "seed": case.seed,
        "x": x,
        "identity": identity,
        "rel_residual": None,
        "tol": None,
        "passed": False,
        "error": f"{type(error).__name__}: {error}",
    }


class SweepRunner:
    """Runs tpr_00 and corollary_52 over (m, seed) and aggregates the residuals."""

    def __init__(
        self,
        m_values: Sequence[int],
        count: int,
        base_seed: int = 0,
        x_values: Optional[Sequence[float]] = None,
        series_tol: Optional[float] = None,
        workers: int = 1,
    ):
        self.m_values = list(m_values)
        self.count = count
        self.base_seed = base_seed
        self.x_values = tuple(settings.sweep_x_values if x_values is None else x_values)
        self.series_tol = settings.series_tolerance if series_tol is None else series_tol
        self.workers = workers
        self.table = pd.DataFrame(columns=COLUMNS)

    def cases(self) -> List[SweepCase]:
        """Cases ordered by (m, seed index)."""
        return [
            SweepCase(
                m=m,
                seed=self.base_seed + i,
                x_values=sweep_x_values(m, self.x_values),
                series_tol=self.series_tol,
            )
            for m in self.m_values
            for i in range(self.count)
        ]

    def run(self) -> Dict[str, Any]:
        cases = self.cases()
        logger.info(f"Sweep over m={self.m_values}: {len(cases)} draws, {self.workers} worker(s)")
        if self.workers > 1:
            with ProcessPoolExecutor(
                max_workers=self.workers,
                initializer=_init_worker,
                initargs=(settings.model_dump(),),
            ) as pool:
                results = list(pool.map(run_case, cases))
        else:
            results = [run_case(case) for case in cases]

        rows = [row for case_rows in results for row in case_rows]
        self.table = pd.DataFrame(rows, columns=COLUMNS)
        return self.summary()

    def summary(self) -> Dict[str, Any]:
        """Aggregate document: run count, residual maxima and the failed runs."""
        frame = self.table
        residuals = frame["rel_residual"].dropna().astype(float)
        by_identity = (
            frame.dropna(subset=["rel_residual"])
            .astype({"rel_residual": float})
            .groupby("identity", sort=True)["rel_residual"]
            .max()
        )
        failures = frame[~frame["passed"].astype(bool)]
        if not failures.empty:
            logger.warning(f"Sweep: {len(failures)} of {len(frame)} runs failed")
        return {
            "runs": int(len(frame)),
            "max_rel_residual": float(residuals.max()) if not residuals.empty else None,
            "max_rel_residual_by_identity": {k: float(v) for k, v in by_identity.items()},
            "failures": [_clean_row(row) for row in failures.to_dict(orient="records")],
        }

    def print_summary(self, console: Optional[Console] = None) -> None:
        """Per (m, identity) table on standard error."""
        console = console or Console(stderr=True)
        table = Table(title="Sweep summary")
        for column in ("m", "identity", "runs", "max rel residual", "failures"):
            table.add_column(column, justify="right" if column != "identity" else "left")

        if self.table.empty:
            console.print(table)
            return
        frame = self.table.assign(failed=~self.table["passed"].astype(bool))
        grouped = frame.groupby(["m", "identity"], sort=True)
        for (m, identity), group in grouped:
            residuals = group["rel_residual"].dropna().astype(float)
            worst = f"{residuals.max():.3e}" if not residuals.empty else "-"
            failed = int(group["failed"].sum())
            style = "red" if failed else "green"
            table.add_row(str(m), identity, str(len(group)), worst, f"[{style}]{failed}[/{style}]")
        console.print(table)


def _clean_row(row: Dict[str, Any]) -> Dict[str, Any]:
    """NaN from pandas back to None so the row serializes as JSON."""
    return {key: (None if pd.isna(value) else value) for key, value in row.items()}
