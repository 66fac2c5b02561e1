"""
Subcommand dispatch: turn a RunConfig into a JSON document and an exit code.

Exit codes: 0 when every reported check passes, 1 when a check fails or a
computation breaks down, 2 for usage and validation errors.
"""

import json
import sys
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

from loguru import logger

from config.settings import settings
from src.cli.config import Basis, Command, RunConfig
from src.cli.sweep import SweepRunner
from src.core import (
    BranchError,
    DimensionError,
    HypergeometricError,
    IntegrabilityError,
    ParameterRangeError,
    ParameterValidationError,
    SizeError,
)
from src.intersection import (
    MatrixKind,
    cohomology_matrix,
    determinant_check,
    homology_matrix,
    numeric_determinant,
)
from src.parameters import (
    ParameterSet,
    load_parameters,
    parameters_to_json,
    random_euler_admissible,
    random_generic,
)
from src.periods import (
    PeriodRow,
    VerificationReport,
    corollary_residual,
    period_row,
    tpr_residual_00,
    x_max,
)
from src.quadrature import beta_product_check, euler_integral_check
from src.series import SeriesValue, fundamental_system, ghf
from src.utils import complex_to_pair, dumps, matrix_to_pairs, pair_to_complex, save_csv_data, save_json_data

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

# Inputs outside the domain of an operation count as usage errors.
USAGE_ERRORS = (
    ParameterValidationError,
    BranchError,
    ParameterRangeError,
    DimensionError,
    IntegrabilityError,
    SizeError,
)

_BASIS_KINDS = {
    Basis.PHI: MatrixKind.COHOMOLOGY_PHI,
    Basis.PSI: MatrixKind.COHOMOLOGY_PSI,
    Basis.MIXED: MatrixKind.COHOMOLOGY_MIXED,
}


def series_to_json(value: SeriesValue) -> Dict[str, Any]:
    return {
        "value": complex_to_pair(value.value),
        "terms_used": value.terms_used,
        "tail_bound": value.tail_bound,
    }


def period_row_to_json(row: PeriodRow) -> Dict[str, Any]:
    return {
        "entries": [complex_to_pair(v) for v in row.entries],
        "dual": row.dual,
        "x": row.x,
        "tail_bound": row.tail_bound,
    }


def _resolve_parameters(config: RunConfig, euler: bool = False) -> Tuple[ParameterSet, Optional[complex], Optional[int]]:
    """Parameters, the x stored alongside them (if any) and the seed used to draw them."""
    if config.params is not None:
        p, x = load_parameters(config.params)
        return p, x, None
    draw = random_euler_admissible if euler else random_generic
    margin = None if euler else settings.sweep_margin
    return draw(config.m, config.seed, margin=margin), None, config.seed


def _resolve_x(config: RunConfig, stored: Optional[complex], m: int, capped: bool = True) -> Union[float, complex]:
    """--x, else the x of the parameter document, else the default (capped at x_max(m)).

    The domain is left to the operation: complex x is fine for a series value,
    the solution and period paths reject it themselves.
    """
    if config.x is not None:
        return config.x
    if stored is not None:
        return stored.real if stored.imag == 0.0 else stored
    return min(settings.default_x, x_max(m)) if capped else settings.default_x


def _parse_vector(text: str, name: str) -> List[complex]:
    try:
        values = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParameterValidationError(f"--{name} is not valid JSON: {e}") from e
    if not isinstance(values, list):
        raise ParameterValidationError(f"--{name} must be a JSON array")
    try:
        return [pair_to_complex(v) for v in values]
    except (TypeError, ValueError) as e:
        raise ParameterValidationError(f"--{name}: entries must be numbers or [re, im] pairs") from e


def _run_eval(config: RunConfig) -> Tuple[Dict[str, Any], bool]:
    if config.upper is not None:
        upper = _parse_vector(config.upper, "upper")
        lower = _parse_vector(config.lower, "lower")
        x = config.x if config.x is not None else settings.default_x
    else:
        p, stored, _ = _resolve_parameters(config)
        upper = [p.a_cyclic(j) for j in range(1, p.m + 2)]
        lower = list(p.b[1:])
        x = _resolve_x(config, stored, p.m, capped=False)
    value = ghf(upper, lower, x, config.tol)
    document = {"upper": [complex_to_pair(v) for v in upper], "lower": [complex_to_pair(v) for v in lower], "x": x}
    document.update(series_to_json(value))
    return document, True


def _run_solutions(config: RunConfig) -> Tuple[Dict[str, Any], bool]:
    p, stored, seed = _resolve_parameters(config)
    x = _resolve_x(config, stored, p.m, capped=False)
    solutions = fundamental_system(p, x, config.tol)
    document = {
        "parameters": parameters_to_json(p),
        "seed": seed,
        "x": x,
        "solutions": [series_to_json(s) for s in solutions],
    }
    return document, True


def _run_intersect(config: RunConfig) -> Tuple[Dict[str, Any], bool]:
    p, _, seed = _resolve_parameters(config)
    cohomology = cohomology_matrix(p, _BASIS_KINDS[config.basis])
    homology = homology_matrix(p)
    document: Dict[str, Any] = {
        "parameters": parameters_to_json(p),
        "seed": seed,
        "cohomology": {
            "kind": cohomology.kind.value,
            "entries": matrix_to_pairs(cohomology.entries),
            "det": complex_to_pair(numeric_determinant(cohomology)),
        },
        "homology": {
            "kind": homology.kind.value,
            "entries": matrix_to_pairs(homology.entries),
            "det": complex_to_pair(numeric_determinant(homology)),
            "diagonal_product": complex_to_pair(homology.diagonal_product()),
        },
    }
    passed = True
    if config.basis == Basis.PHI:
        check = determinant_check(p)
        passed = check["rel_error"] <= settings.determinant_tolerance
        document["det_check"] = {
            "numeric": complex_to_pair(check["numeric"]),
            "closed_form": complex_to_pair(check["closed_form"]),
            "rel_error": check["rel_error"],
            "tol": settings.determinant_tolerance,
            "pass": passed,
        }
    return document, passed


def _run_periods(config: RunConfig) -> Tuple[Dict[str, Any], bool]:
    p, stored, seed = _resolve_parameters(config)
    x = _resolve_x(config, stored, p.m)
    document = {
        "parameters": parameters_to_json(p),
        "seed": seed,
        "x": x,
        "row": period_row_to_json(period_row(p, x, config.tol)),
        "dual_row": period_row_to_json(period_row(p, x, config.tol, dual=True)),
    }
    return document, True


def _reports_document(p: ParameterSet, seed: Optional[int], reports: List[VerificationReport]) -> Tuple[Dict[str, Any], bool]:
    reports = [r.with_seed(seed) for r in reports]
    document = {
        "parameters": parameters_to_json(p),
        "reports": [r.to_json_dict() for r in reports],
    }
    return document, all(r.passed for r in reports)


def _run_verify(config: RunConfig) -> Tuple[Dict[str, Any], bool]:
    p, stored, seed = _resolve_parameters(config)
    x = _resolve_x(config, stored, p.m)
    reports = [
        tpr_residual_00(p, x, series_tol=config.tol),
        corollary_residual(p, x, series_tol=config.tol),
    ]
    return _reports_document(p, seed, reports)


def _run_quad(config: RunConfig) -> Tuple[Dict[str, Any], bool]:
    p, stored, seed = _resolve_parameters(config, euler=True)
    x = _resolve_x(config, stored, p.m)
    reports = [
        euler_integral_check(p, x, level=config.level),
        beta_product_check(p, config.shift, level=config.level),
    ]
    return _reports_document(p, seed, reports)


def _run_sweep(config: RunConfig) -> Tuple[Dict[str, Any], bool]:
    runner = SweepRunner(
        m_values=config.m_values,
        count=config.count,
        base_seed=config.seed,
        x_values=None if config.x is None else [config.x],
        series_tol=config.tol,
        workers=config.workers,
    )
    document = runner.run()
    runner.print_summary()
    if config.csv:
        save_csv_data(runner.table, config.csv)
    return document, not document["failures"]


_HANDLERS: Dict[Command, Callable[[RunConfig], Tuple[Dict[str, Any], bool]]] = {
    Command.EVAL: _run_eval,
    Command.SOLUTIONS: _run_solutions,
    Command.INTERSECT: _run_intersect,
    Command.PERIODS: _run_periods,
    Command.VERIFY: _run_verify,
    Command.QUAD: _run_quad,
    Command.SWEEP: _run_sweep,
}


def run(config: RunConfig) -> int:
    """Execute one subcommand, write its JSON document and return the exit code."""
    logger.info(f"Running {config.command.value}")
    try:
        document, passed = _HANDLERS[config.command](config)
    except USAGE_ERRORS as e:
        logger.error(f"{config.command.value}: {e}")
        return EXIT_USAGE
    except HypergeometricError as e:
        logger.error(f"{config.command.value} failed: {type(e).__name__}: {e}")
        return EXIT_FAILED

    if config.out:
        save_json_data(document, config.out)
    else:
        sys.stdout.write(dumps(document) + "\n")

    if not passed:
        logger.warning(f"{config.command.value}: at least one check failed")
    return EXIT_OK if passed else EXIT_FAILED
