"""
The `heightforge` command group.

Every subcommand builds a Report; `--json` prints it as JSON on stdout,
otherwise as a table. Library errors become an error report and the exit
code carried by the error class (2 for bad input, 1 for computations that
could not be certified).
"""

import functools
import logging
import time
from typing import Callable, Optional

import click

from src import __version__
from src.bounds import check_congruence, height_lower_bound, l1_infty, verify_point
from src.core.errors import HeightForgeError
from src.core.precision import precision_cap
from src.corpus import get_corpus_registry
from src.exact.polynomials import format_polynomial
from src.fields.number_field import NumberField
from src.functionals import (
    LinearMap,
    univariate_u,
    verify_identity_projective,
    verify_identity_subspace,
)
from src.heights import (
    algebraic_number,
    mahler_measure,
    mahler_measure_from_heights,
    projective_height_report,
    subspace_height_report,
    weil_height_report,
)
from src.places import (
    archimedean_places,
    candidate_finite_places,
    finite_places_above,
    product_formula_check,
)
from src.places.product import GlobalProduct

from .expressions import (
    parse_element,
    parse_field_polynomial,
    parse_homogeneous,
    parse_rows,
    parse_univariate,
    parse_vector,
    parse_vectors,
)
from .reports import ErrorReport, GlobalValue, PlaceRow, Report, render_table

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def resolve_field(text: Optional[str]) -> NumberField:
    """A corpus field name, or a monic defining polynomial in t."""
    registry = get_corpus_registry()
    if text is None:
        return registry.get_default_field()
    if registry.get_config(text) is not None:
        return registry.get_field(text)
    poly = parse_field_polynomial(text)
    if poly.coeffs == (0, 1):
        return NumberField.rationals()
    return NumberField(poly)


def _product_rows(product: GlobalProduct, column: str) -> list[PlaceRow]:
    rows = [PlaceRow.from_place(place, **{column: value}) for place, value in product.arch_rows]
    rows += [PlaceRow.from_place(place, **{column: value}) for place, value in product.finite_rows]
    return rows


def _emit(report, as_json: bool) -> None:
    if as_json:
        click.echo(report.to_json())
    elif isinstance(report, ErrorReport):
        click.echo(f"error [{report.error['code']}]: {report.error['message']}", err=True)
    else:
        click.echo(render_table(report))


def common_options(func: Callable) -> Callable:
    """--json, --tol and --prec-cap, plus timing and error mapping."""

    @click.option("--json", "as_json", is_flag=True, help="Print the report as JSON.")
    @click.option("--tol", type=float, default=None, help="Target enclosure radius.")
    @click.option("--prec-cap", type=int, default=None, help="Working precision cap in bits.")
    @click.pass_context
    @functools.wraps(func)
    def wrapper(ctx: click.Context, as_json: bool, tol, prec_cap, **kwargs):
        command = ctx.info_name
        request = {k: v for k, v in kwargs.items() if v is not None}
        if tol is not None:
            request["tol"] = tol
        logger.info(f"COMMAND_START | command={command}")
        start = time.perf_counter()
        code = EXIT_PASS
        try:
            with precision_cap(prec_cap):
                report = func(tol=tol, request=request, **kwargs)
            report.timing_ms = round((time.perf_counter() - start) * 1000, 3)
            if report.verdict == "fail":
                code = EXIT_FAIL
            _emit(report, as_json)
        except HeightForgeError as e:
            code = e.exit_code
            _emit(ErrorReport(command=command, request=request, error=e.to_dict()), as_json)
        except (KeyError, ValueError) as e:
            code = EXIT_USAGE
            message = e.args[0] if e.args else str(e)
            error = {"code": "INVALID_INPUT", "message": str(message)}
            _emit(ErrorReport(command=command, request=request, error=error), as_json)
        logger.info(f"COMMAND_DONE | command={command} | exit={code}")
        ctx.exit(code)

    return wrapper


field_option = click.option(
    "--field", "field_name", default=None, help="Corpus field name or defining polynomial in t."
)


@click.group()
@click.version_option(__version__, prog_name="heightforge")
def cli():
    """Exact Weil heights, Mahler measures, projective heights and quotient norms."""


@cli.command()
@click.argument("alpha")
@field_option
@common_options
def height(alpha: str, field_name: Optional[str], tol, request) -> Report:
    """Weil height of ALPHA: an element in t with --field, else a minimal polynomial in x."""
    if field_name is None:
        element = algebraic_number(parse_univariate(alpha).clear_denominators()[1])
    else:
        element = parse_element(alpha, resolve_field(field_name))
    product = weil_height_report(element, tol)
    return Report(
        command="height",
        request=request,
        places=_product_rows(product, "max1"),
        global_value=GlobalValue.from_ball(product.value),
        details={"field": element.field.name, "element": str(element)},
    )


@cli.command()
@click.argument("poly")
@click.option("--cross-check", is_flag=True, help="Also compute the measure from root heights.")
@common_options
def mahler(poly: str, cross_check: bool, tol, request) -> Report:
    """Mahler measure of an integer polynomial in x."""
    f = parse_univariate(poly).clear_denominators()[1]
    measure = mahler_measure(f, tol)
    details = {"polynomial": str(f)}
    verdict = None
    if cross_check:
        other = mahler_measure_from_heights(f, tol)
        details["from_heights"] = repr(other)
        verdict = "pass" if measure.overlaps(other) else "fail"
    return Report(
        command="mahler",
        request=request,
        global_value=GlobalValue.from_ball(measure),
        details=details,
        verdict=verdict,
    )


@cli.command("proj-height")
@click.option("--point", required=True, help="Vector such as \"[1, t]\".")
@field_option
@common_options
def proj_height(point: str, field_name: Optional[str], tol, request) -> Report:
    """Projective height H(a)."""
    a = parse_vector(point, resolve_field(field_name))
    product = projective_height_report(a, tol)
    return Report(
        command="proj-height",
        request=request,
        places=_product_rows(product, "H_v"),
        global_value=GlobalValue.from_ball(product.value),
    )


@cli.command("subspace-height")
@click.option("--basis", required=True, help="Vectors separated by ';'.")
@field_option
@common_options
def subspace_height_cmd(basis: str, field_name: Optional[str], tol, request) -> Report:
    """Height of the span of the basis vectors, through Plucker coordinates."""
    vectors = parse_vectors(basis, resolve_field(field_name))
    product = subspace_height_report(vectors, tol)
    return Report(
        command="subspace-height",
        request=request,
        places=_product_rows(product, "H_v"),
        global_value=GlobalValue.from_ball(product.value),
    )


@cli.command()
@field_option
@click.option("--prime", "primes", type=int, multiple=True, help="Rational prime (repeatable).")
@common_options
def places(field_name: Optional[str], primes: tuple[int, ...], tol, request) -> Report:
    """Archimedean places and the places above the given primes (default: disc primes)."""
    field = resolve_field(field_name)
    if not primes:
        primes = tuple(candidate_finite_places([field.one]))
    rows = []
    for place in archimedean_places(field):
        root = place.root
        text = f"root ~ {float(root.real.mid):.12g}"
        if not place.is_real:
            text += f" + {float(root.imag.mid):.12g}i"
        row = PlaceRow.from_place(place)
        row.description = text
        rows.append(row)
    for p in primes:
        for place in finite_places_above(field, p):
            row = PlaceRow.from_place(place)
            row.description = place.describe()
            rows.append(row)
    return Report(command="places", request=request, places=rows, details={"field": field.name})


def _identity_rows(report) -> list[PlaceRow]:
    return [
        PlaceRow.from_place(r.place, H_v=r.height, U_v=r.u, local=r.local) for r in report.rows
    ]


@cli.command("verify-projective")
@click.option("--point", required=True)
@click.option("--poly", required=True, help="Homogeneous form in x1..xN.")
@click.option("--deg", type=int, default=None, help="Declared degree M of the form.")
@field_option
@common_options
def verify_projective(point, poly, deg, field_name, tol, request) -> Report:
    """Check H(a)^M * U(a, T) = 1."""
    field = resolve_field(field_name)
    a = parse_vector(point, field)
    T = parse_homogeneous(poly, a.dimension, deg, field)
    result = verify_identity_projective(a, T, tol)
    return Report(
        command="verify-projective",
        request=request,
        places=_identity_rows(result),
        global_value=GlobalValue.from_ball(result.product),
        details={"H": repr(result.height), "U": repr(result.u), "M": result.exponent},
        verdict="pass" if result.passed else "fail",
    )


@cli.command("verify-subspace")
@click.option("--basis", required=True, help="Vectors separated by ';'.")
@click.option("--map", "map_rows", required=True, help="Rows of Psi separated by ';'.")
@field_option
@common_options
def verify_subspace(basis, map_rows, field_name, tol, request) -> Report:
    """Check H(W) * U(W, Psi) = 1."""
    field = resolve_field(field_name)
    vectors = parse_vectors(basis, field)
    psi = LinearMap(field, tuple(parse_rows(map_rows, field)))
    result = verify_identity_subspace(vectors, psi, tol)
    return Report(
        command="verify-subspace",
        request=request,
        places=_identity_rows(result),
        global_value=GlobalValue.from_ball(result.product),
        details={"H": repr(result.height), "U": repr(result.u)},
        verdict="pass" if result.passed else "fail",
    )


@cli.command("verify-univariate")
@click.option("--alpha", required=True, help="Element in t.")
@click.option("--poly", required=True, help="Polynomial T in x over Q.")
@click.option("--n", "degree_bound", type=int, required=True, help="Degree bound N >= deg T.")
@field_option
@common_options
def verify_univariate(alpha, poly, degree_bound, field_name, tol, request) -> Report:
    """Local values U_v(alpha, T) and the product h^N * U."""
    element = parse_element(alpha, resolve_field(field_name))
    result = univariate_u(element, parse_univariate(poly), degree_bound, tol)
    rows = [
        PlaceRow.from_place(r.place, value=r.value, max1=r.height, U_v=r.u, nu_v=r.sup_norm)
        for r in result.rows
    ]
    observed = result.observed_exponent
    return Report(
        command="verify-univariate",
        request=request,
        places=rows,
        global_value=GlobalValue.from_ball(result.height_power_times_u),
        details={
            "h": repr(result.height),
            "U": repr(result.u),
            "h*U": repr(result.height_times_u),
            "observed_exponent": repr(observed) if observed is not None else None,
        },
        verdict="pass" if result.passed else "fail",
    )


@cli.command()
@click.option("--F", "f_text", required=True, help="Integer form F.")
@click.option("--T", "t_text", required=True, help="Integer form T = F mod m.")
@click.option("--m", "modulus", type=int, required=True)
@click.option("--vars", "num_vars", type=int, default=2, show_default=True)
@common_options
def bound(f_text, t_text, modulus, num_vars, tol, request) -> Report:
    """Lower bound m / L1(T) for H(a)^deg F on X(F) minus X(T)."""
    F = parse_homogeneous(f_text, num_vars)
    T = parse_homogeneous(t_text, num_vars)
    value = height_lower_bound(F, T, modulus)
    return Report(
        command="bound",
        request=request,
        global_value=GlobalValue.from_ball(value),
        details={
            "bound": str(value),
            "L1(T)": l1_infty(T),
            "congruent": check_congruence(F, T, modulus),
            "trivial": value <= 1,
        },
    )


@cli.command("check-point")
@click.option("--point", required=True)
@click.option("--F", "f_text", required=True)
@click.option("--T", "t_text", required=True)
@click.option("--m", "modulus", type=int, required=True)
@field_option
@common_options
def check_point(point, f_text, t_text, modulus, field_name, tol, request) -> Report:
    """Check H(a)^deg F against m / L1(T) at a point of X(F) minus X(T)."""
    a = parse_vector(point, resolve_field(field_name))
    F = parse_homogeneous(f_text, a.dimension)
    T = parse_homogeneous(t_text, a.dimension)
    result = verify_point(a, F, T, modulus, tol)
    return Report(
        command="check-point",
        request=request,
        global_value=GlobalValue.from_ball(result.height_power),
        details={"bound": str(result.bound), "tight": result.tight},
        verdict="pass" if result.passed else "fail",
    )


@cli.command("product-formula")
@click.option("--element", required=True, help="Nonzero element in t.")
@field_option
@common_options
def product_formula(element, field_name, tol, request) -> Report:
    """Check the product formula for one element, split into its rational halves."""
    field = resolve_field(field_name)
    beta = parse_element(element, field)
    result = product_formula_check(beta, tol)
    lookup = {pl.id: pl for pl in archimedean_places(field)}
    for p in {int(v.p) for _, v in result.finite_rows}:
        lookup.update({pl.id: pl for pl in finite_places_above(field, p)})
    rows = [PlaceRow.from_place(lookup[i], norm_power=v) for i, v in result.archimedean_rows]
    rows += [PlaceRow.from_place(lookup[i], norm_power=v) for i, v in result.finite_rows]
    return Report(
        command="product-formula",
        request=request,
        places=rows,
        global_value=GlobalValue.from_ball(result.archimedean_product),
        details={
            "norm": str(result.norm),
            "finite_product": str(result.finite_product),
            "finite_ok": result.finite_ok,
            "archimedean_ok": result.archimedean_ok,
        },
        verdict="pass" if result.passed else "fail",
    )


@cli.command()
@common_options
def fields(tol, request) -> Report:
    """List the corpus fields."""
    registry = get_corpus_registry()
    listing = {
        f.id: f"{format_polynomial(f.coefficients, 't')} | {f.description}"
        for f in registry.list_fields()
    }
    return Report(command="fields", request=request, details=listing)


def run_command(argv: list[str]) -> int:
    """Run the CLI on `argv` and return its exit code."""
    try:
        result = cli.main(args=argv, prog_name="heightforge", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.exceptions.Abort:
        return EXIT_FAIL
    return result if isinstance(result, int) else EXIT_PASS
