"""Report envelopes shared by the command line and the HTTP API, and their renderings."""
import json
import logging
import math
from pathlib import Path
from typing import Optional, Sequence

from jinja2 import Environment, FileSystemLoader

from app.core.config import settings
from app.core.exceptions import DegreeMismatchError, InvalidInputError
from app.models.algebra import ClassFunction, ProductMode
from app.models.combinatorics import Partition, Permutation
from app.models.polynomials import evaluate, format_exact, parse_rational
from app.models.tensors import MonomialSpec
from app.schemas.schemas import Level, MonteCarloResponse, ReportEnvelope
from app.services.characters import character_table, dim_irrep, orthogonality_violations
from app.services.combinatorics import display_order, partitions_of
from app.services.connection import (
    brute_force_class_product,
    catalan_factorization,
    class_product_many,
    multiply_class_functions,
    verify_collins_multiplicativity,
)
from app.services.haar import haar_mc_oracle
from app.services.integrals import monomial_integral
from app.services.tableaux import commutant_dimension, good_basis, longest_decreasing, rsk, rsk_inverse
from app.services.tensor_polynomials import formanek_verify, verify_forgz
from app.services.weingarten import conjecture_scan, novak_sign_check, wg_characters

logger = logging.getLogger(__name__)

TEMPLATE_DIR = Path(__file__).resolve().parent.parent / "templates"

_environment = Environment(
    loader=FileSystemLoader(str(TEMPLATE_DIR)),
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
)


def wg_report(k: int, d: Optional[int] = None, symbolic: bool = False, scaled: bool = False) -> ReportEnvelope:
    if symbolic and scaled:
        raise InvalidInputError("--scaled needs an integer --d, not --symbolic")
    if not symbolic and d is None:
        raise InvalidInputError("--d is required unless --symbolic is given")
    wg = wg_characters(k, None if symbolic else d)
    factor = math.factorial(d) ** 2 if scaled else 1
    results = {str(mu): format_exact(wg.value(mu) * factor) for mu in partitions_of(k)}
    passed = True
    if not symbolic and d >= k:
        passed = not novak_sign_check(k, d)
    return ReportEnvelope(
        command="wg",
        parameters={"k": k, "d": None if symbolic else d, "symbolic": symbolic, "scaled": scaled},
        results=results,
        passed=passed,
        ordering=[str(mu) for mu in display_order(partitions_of(k))],
    )


def char_report(k: int, table: bool = False) -> ReportEnvelope:
    shapes = partitions_of(k)
    if table:
        characters = character_table(k)
        results = {str(shape): {str(mu): value for mu, value in characters.row(shape).items()} for shape in shapes}
    else:
        results = {str(shape): dim_irrep(shape) for shape in shapes}
    passed = not orthogonality_violations(k) and sum(dim_irrep(s) ** 2 for s in shapes) == math.factorial(k)
    return ReportEnvelope(
        command="char",
        parameters={"k": k, "table": table},
        results=results,
        passed=passed,
        ordering=[str(shape) for shape in shapes],
    )


def integrate_report(
    d: int,
    u: str,
    ubar: str,
    symbolic: bool = False,
    mc: bool = False,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
) -> ReportEnvelope:
    spec = MonomialSpec.parse(d, u, ubar)
    exact = monomial_integral(spec, symbolic=symbolic)
    results = {"exact": format_exact(exact)}
    passed = True
    if mc:
        estimate = haar_mc_oracle(spec, samples=samples, seed=seed)
        results["mc"] = MonteCarloResponse(mean=estimate.mean, stderr=estimate.stderr, samples=estimate.samples).model_dump()
        passed = estimate.agrees_with(evaluate(exact, d) if symbolic else exact)
    return ReportEnvelope(
        command="integrate",
        parameters={
            "d": d,
            "u": u,
            "ubar": ubar,
            "symbolic": symbolic,
            "mc": mc,
            "samples": estimate.samples if mc else None,
            "seed": (settings.MC_SEED if seed is None else seed) if mc else None,
        },
        results=results,
        passed=passed,
    )


def connection_report(k: int, classes: Sequence[str], degenerate: bool = False) -> ReportEnvelope:
    parsed = [Partition.parse(text) for text in classes]
    for mu in parsed:
        if mu.size != k:
            raise DegreeMismatchError(f"Class {mu} is not a partition of k={k}")
    if degenerate:
        product = ClassFunction(k, {parsed[0]: 1})
        for mu in parsed[1:]:
            product = multiply_class_functions(product, ClassFunction(k, {mu: 1}), ProductMode.DEGENERATE)
    else:
        product = class_product_many(parsed)
    passed = True
    if len(parsed) == 2 and not degenerate and k <= settings.MAX_BRUTE_FORCE_DEGREE:
        passed = brute_force_class_product(*parsed).values == product.values
    return ReportEnvelope(
        command="connection",
        parameters={"k": k, "classes": [str(mu) for mu in parsed], "degenerate": degenerate},
        results={str(mu): int(value) for mu, value in product.values.items()},
        passed=passed,
        ordering=[str(mu) for mu in display_order(product.values)],
    )


def topcoef_report(k: int) -> ReportEnvelope:
    report = verify_collins_multiplicativity(k)
    results: dict = {str(mu): report.coefficients[mu] for mu in partitions_of(k)}
    results["catalan"] = {str(mu): catalan_factorization(mu) for mu in partitions_of(k)}
    return ReportEnvelope(
        command="topcoef",
        parameters={"k": k},
        results=results,
        passed=report.passed,
        ordering=[str(mu) for mu in display_order(partitions_of(k))],
    )


def formanek_report(d: int) -> ReportEnvelope:
    report = formanek_verify(d)
    staggered = verify_forgz(d)
    results = {
        "determinant_constant": format_exact(report.determinant_constant),
        "scalar": format_exact(report.computed_scalar),
        "expected_scalar": format_exact(report.expected_scalar),
        "trace": format_exact(report.trace),
        "expected_trace": format_exact(report.expected_trace),
        "is_scalar": report.is_scalar,
        "cycle_trace_matches": report.cycle_trace_matches,
        "full_cycle_matches": report.full_cycle_matches,
        "g_d_matches": staggered.operator_matches,
        "phi_g_d_matches": staggered.phi_matches,
    }
    return ReportEnvelope(
        command="formanek",
        parameters={"d": d},
        results=results,
        passed=report.passed and staggered.passed,
        ordering=list(results),
    )


def rsk_report(word: Optional[str] = None, perm: Optional[str] = None) -> ReportEnvelope:
    if (word is None) == (perm is None):
        raise InvalidInputError("Give exactly one of --word or --perm")
    source = Permutation.parse(perm) if perm is not None else word
    result = rsk(source)
    letters = tuple(source.one_line) if isinstance(source, Permutation) else tuple(source)
    height = result.shape.height
    results = {
        "P": result.p.to_lists(),
        "Q": result.q.to_lists(),
        "shape": str(result.shape),
        "height": height,
        "longest_decreasing": longest_decreasing(source),
    }
    return ReportEnvelope(
        command="rsk",
        parameters={"word": word, "perm": perm},
        results=results,
        passed=rsk_inverse(result.p, result.q) == letters and height == results["longest_decreasing"],
        ordering=list(results),
    )


def goodbasis_report(k: int, d: int, count: bool = False) -> ReportEnvelope:
    basis = good_basis(k, d)
    dimension = commutant_dimension(k, d)
    results: dict = {"count": len(basis), "commutant_dimension": dimension}
    if not count:
        results["permutations"] = [str(sigma) for sigma in basis]
    return ReportEnvelope(
        command="goodbasis",
        parameters={"k": k, "d": d, "count": count},
        results=results,
        passed=len(basis) == dimension,
        ordering=list(results),
    )


def conjecture_report(d_max: Optional[int] = None) -> ReportEnvelope:
    report = conjecture_scan(d_max)
    results = {
        str(row.d): {
            "strictly_decreasing": row.strictly_decreasing,
            "denominators_divide": row.denominators_divide,
            "largest_denominator": row.largest_denominator,
            "counterexamples": row.counterexamples,
        }
        for row in report.rows
    }
    return ReportEnvelope(
        command="conjecture",
        parameters={"d_max": report.d_max},
        results=results,
        passed=report.passed,
        ordering=[str(row.d) for row in report.rows],
    )


def verify_report(level: Level, names: Optional[Sequence[str]] = None) -> ReportEnvelope:
    from app.worker.tasks import dispatch_checks

    checks = dispatch_checks(names, level)
    failed = [check.name for check in checks if not check.passed]
    logger.info(f"Ran {len(checks)} checks at level {Level(level).value}; failed: {failed or 'none'}")
    results = {check.name: {"passed": check.passed, "details": check.details} for check in checks}
    return ReportEnvelope(
        command="verify-all",
        parameters={"level": Level(level).value},
        results=results,
        passed=all(check.passed for check in checks),
        ordering=[check.name for check in checks],
    )


def render_json(envelope: ReportEnvelope) -> str:
    return json.dumps(envelope.model_dump(exclude_none=True), sort_keys=True, indent=2) + "\n"


def _scaled_rows(envelope: ReportEnvelope) -> tuple[list[tuple[str, str]], Optional[str]]:
    rows = [(Partition.parse(key).class_label(), envelope.results[key]) for key in envelope.ordering]
    values = [parse_rational(value) for _, value in rows]
    common = math.lcm(*(int(v.denominator) for v in values))
    numerators = [int(v.numerator) * (common // int(v.denominator)) for v in values]
    summary = f"1/{common} (" + " ".join(f"{n:+d}{label}" for n, (label, _) in zip(numerators, rows)) + ")"
    return rows, summary


def render_text(envelope: ReportEnvelope) -> str:
    if envelope.command == "wg" and envelope.parameters.get("scaled"):
        rows, summary = _scaled_rows(envelope)
        template = _environment.get_template("wg_table.txt.j2")
        return template.render(envelope=envelope, rows=rows, summary=summary)
    keys = envelope.ordering or sorted(envelope.results)
    extra = [key for key in sorted(envelope.results) if key not in keys]
    rows = [(key, envelope.results[key]) for key in list(keys) + extra]
    width = max((len(key) for key, _ in rows), default=0)
    template = _environment.get_template("report.txt.j2")
    return template.render(envelope=envelope, rows=rows, width=width)
