import dataclasses
import json
import logging
import sys
from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import TYPE_CHECKING, Any, Iterator, Optional

import typer
from rich.markup import escape
from typing_extensions import Annotated

from monodec.errors import ExitCode, MonodecError, ParseError, ResourceCapError, Verdict

try:
    # recent typer releases vendor click
    from typer._click.exceptions import ClickException
except ImportError:  # pragma: no cover
    from click import ClickException

# Heavy modules (sympy, networkx) are imported inside the commands
if TYPE_CHECKING:
    from rich.console import Console

    from monodec.config import Caps
    from monodec.core.field import FieldSpec
    from monodec.core.ideal import MonomialIdeal
    from monodec.harness.report import ClassificationReport

_console: Optional["Console"] = None
_error_console: Optional["Console"] = None


def get_console() -> "Console":
    """Get or create the Rich console for stdout (lazy initialization)."""
    global _console
    if _console is None:
        from rich.console import Console

        _console = Console()
    return _console


def get_error_console() -> "Console":
    global _error_console
    if _error_console is None:
        from rich.console import Console

        _error_console = Console(stderr=True)
    return _error_console


# Common type aliases
ExprArgument = Annotated[str, typer.Argument(help='Ideal expression, e.g. "x1*x2, x2*x3"')]
VarsOption = Annotated[
    Optional[int],
    typer.Option("--vars", help="Number of variables (default: largest index in the expression)"),
]
FieldOption = Annotated[
    str, typer.Option("--field", help="Coefficient field: 'q' or a prime field such as 'fp2'")
]
JsonOption = Annotated[bool, typer.Option("--json", help="Print a JSON document instead of text")]
MaxOrderingsOption = Annotated[
    Optional[int],
    typer.Option("--max-orderings", help="Largest n for an exhaustive variable-order refutation"),
]
MaxFacetsOption = Annotated[
    Optional[int],
    typer.Option("--max-facets", help="Largest facet count for an unbudgeted shelling search"),
]
VerboseOption = Annotated[bool, typer.Option("-v", "--verbose", help="Log search progress")]
LogFileOption = Annotated[
    Optional[str], typer.Option("--log-file", help="Also write a DEBUG log to this file")
]


class OrderKind(str, Enum):
    WPM = "wpm"
    LQ = "lq"


class CheckProperty(str, Enum):
    POLYMATROIDAL = "polymatroidal"
    MATROIDAL = "matroidal"
    WEAKLY_POLYMATROIDAL = "weakly-polymatroidal"
    LINEAR_QUOTIENTS = "linear-quotients"
    VERTEX_SPLITTABLE = "vertex-splittable"
    VERTEX_SPLITTABLE_RELAXED = "vertex-splittable-relaxed"
    LINEAR_RESOLUTION = "linear-resolution"
    COMPONENTWISE_LINEAR = "componentwise-linear"
    COHEN_MACAULAY = "cohen-macaulay"
    SEQUENTIALLY_CM = "sequentially-cm"
    VERTEX_DECOMPOSABLE = "vertex-decomposable"
    SHELLABLE = "shellable"
    COMPLEMENT_CHORDAL = "complement-chordal"


class SuiteName(str, Enum):
    """Values of `enumerate --theorem`; `suite` is the harness family each one runs."""

    MATROIDAL = "2.3"
    FEW_GENERATORS = "2.6i"
    COVERING_SUPPORTS = "2.6ii"
    QUADRATIC = "2.10"
    DUALITY = "duality"

    @property
    def suite(self) -> str:
        return self.name.lower().replace("_", "-")


app = typer.Typer(
    name="monodec",
    help="monodec - certified decisions for monomial ideals and Stanley-Reisner complexes.",
    no_args_is_help=True,
    context_settings={"help_option_names": ["-h", "--help"]},
    add_completion=False,
)


def configure(verbose: bool, log_file: Optional[str] = None) -> None:
    from monodec.utils.logging_utils import setup_logging

    setup_logging("DEBUG" if verbose else None, log_file)


def load_settings(max_orderings: Optional[int], max_facets: Optional[int]) -> "Caps":
    """Environment caps with the command-line flags applied on top."""
    from monodec.config import load_caps

    caps = load_caps()
    overrides = {}
    if max_orderings is not None:
        overrides["max_orderings"] = max_orderings
    if max_facets is not None:
        overrides["max_facets"] = max_facets
    for name, value in overrides.items():
        if value < 1:
            raise typer.BadParameter(f"--{name.replace('_', '-')} must be positive")
    return dataclasses.replace(caps, **overrides)


def parse_field(text: str) -> "FieldSpec":
    from monodec.core.field import FieldSpec

    return FieldSpec.parse(text)


def parse_expression(expr: str, n_vars: Optional[int]) -> "MonomialIdeal":
    from monodec.config import load_caps
    from monodec.harness.parser import parse_ideal

    return parse_ideal(expr, n_vars, load_caps()).ideal


@contextmanager
def exit_on_error() -> Iterator[None]:
    """Turn library errors into messages on stderr and the matching exit code."""
    console = get_error_console()
    try:
        yield
    except ResourceCapError as e:
        console.print(f"Resource cap: {e}", style="yellow", markup=False, highlight=False)
        raise typer.Exit(ExitCode.RESOURCE_CAP)
    except ParseError as e:
        console.print(f"Parse error: {e}", style="red", markup=False, highlight=False)
        if e.source:
            console.print(f"  {e.source}", markup=False, highlight=False)
            console.print("  " + " " * e.position + "^", markup=False, highlight=False)
        raise typer.Exit(ExitCode.USAGE_ERROR)
    except (MonodecError, ValueError) as e:
        console.print(f"Error: {e}", style="red", markup=False, highlight=False)
        raise typer.Exit(ExitCode.USAGE_ERROR)


def emit_json(document: Any) -> None:
    # plain echo keeps the bytes identical across terminals
    typer.echo(json.dumps(document, indent=2))


def report_exit_code(report: "ClassificationReport") -> ExitCode:
    """Audit failures outrank undecided properties."""
    if report.audit:
        return ExitCode.AUDIT_FAILURE
    if report.has_undecided:
        return ExitCode.RESOURCE_CAP
    return ExitCode.SUCCESS


def print_report(report: "ClassificationReport") -> None:
    from rich.table import Table

    from monodec.harness.report import format_value
    from monodec.utils.string_utils import short_msg

    console = get_console()
    table = Table(title=f"I = ({report.subject})  n={report.n}  field={report.field}")
    table.add_column("property", style="bold")
    table.add_column("value")
    table.add_column("certificate")
    for key, value in report.properties.items():
        text = format_value(value)
        style = {"true": "green", "false": "red", Verdict.UNDECIDED.value: "yellow"}.get(text)
        cell = f"[{style}]{text}[/{style}]" if style else escape(text)
        cert = report.certificates.get(key, "")
        if isinstance(cert, dict):
            cert = cert["kind"]
        table.add_row(key, cell, escape(short_msg(cert, 60)))
    console.print(table)
    for key, seconds in report.timings.items():
        console.print(f"  {key}: {seconds:.6f}s", highlight=False)
    for message in report.audit:
        console.print(f"[bold red]AUDIT[/bold red] {escape(message)}", highlight=False)


@app.command("classify")
def classify_cmd(
    expr: ExprArgument,
    n_vars: VarsOption = None,
    field: FieldOption = "q",
    as_json: JsonOption = False,
    certify: Annotated[
        bool, typer.Option("--certify", help="Include full certificates in the report")
    ] = False,
    timings: Annotated[
        bool, typer.Option("--timings", help="Record wall time per property")
    ] = False,
    max_orderings: MaxOrderingsOption = None,
    max_facets: MaxFacetsOption = None,
    verbose: VerboseOption = False,
    log_file: LogFileOption = None,
) -> None:
    """Decide every property of an ideal, verify the certificates and audit the results."""
    configure(verbose, log_file)
    with exit_on_error():
        from monodec.harness.report import classify

        ideal = parse_expression(expr, n_vars)
        report = classify(
            ideal, parse_field(field), load_settings(max_orderings, max_facets), certify, timings
        )
    if as_json:
        emit_json(report.to_dict())
    else:
        print_report(report)
    raise typer.Exit(report_exit_code(report))


@app.command("dual")
def dual_cmd(
    expr: ExprArgument,
    n_vars: VarsOption = None,
    as_json: JsonOption = False,
    verbose: VerboseOption = False,
) -> None:
    """Print the Alexander dual of a squarefree ideal."""
    configure(verbose)
    with exit_on_error():
        from monodec.core.complex import alexander_dual

        ideal = parse_expression(expr, n_vars)
        dual = alexander_dual(ideal)
    if as_json:
        emit_json({"ideal": ideal.format(), "n": ideal.n, "dual": dual.format()})
    else:
        typer.echo(dual.format())


@app.command("betti")
def betti_cmd(
    expr: ExprArgument,
    n_vars: VarsOption = None,
    field: FieldOption = "q",
    as_json: JsonOption = False,
    verbose: VerboseOption = False,
) -> None:
    """Print the graded Betti table of an ideal."""
    configure(verbose)
    with exit_on_error():
        from monodec.config import load_caps
        from monodec.homology.betti import betti_table

        table = betti_table(parse_expression(expr, n_vars), parse_field(field), load_caps())
    if as_json:
        emit_json(table.to_dict())
        return

    from rich.table import Table

    view = Table(title=f"Betti table of ({table.ideal.format()}) over {table.field}")
    view.add_column("j-i", justify="right", style="bold")
    for i in range(table.projective_dimension + 1):
        view.add_column(str(i), justify="right")
    for r, row in table.rows():
        view.add_row(str(r), *(str(b) if b else "." for b in row))
    get_console().print(view)


@app.command("reg")
def reg_cmd(
    expr: ExprArgument,
    n_vars: VarsOption = None,
    field: FieldOption = "q",
    verbose: VerboseOption = False,
) -> None:
    """Print the Castelnuovo-Mumford regularity of an ideal."""
    configure(verbose)
    with exit_on_error():
        from monodec.config import load_caps
        from monodec.homology.betti import regularity

        value = regularity(parse_expression(expr, n_vars), parse_field(field), load_caps())
    typer.echo(str(value))


def _property_check(
    prop: CheckProperty, ideal: "MonomialIdeal", field_: "FieldSpec", caps: "Caps"
) -> tuple[Any, Any]:
    """The value of one property, plus the decision's subject when it carries a certificate."""
    from monodec import classify as cl
    from monodec.core.complex import stanley_reisner_complex
    from monodec.homology.betti import has_linear_resolution, is_componentwise_linear

    if prop == CheckProperty.POLYMATROIDAL:
        return cl.is_polymatroidal(ideal), None
    if prop == CheckProperty.MATROIDAL:
        return cl.is_matroidal(ideal), None
    if prop == CheckProperty.WEAKLY_POLYMATROIDAL:
        return cl.find_wpm_order(ideal, caps), ideal
    if prop == CheckProperty.LINEAR_QUOTIENTS:
        return cl.find_lq_order(ideal, caps), ideal
    if prop == CheckProperty.VERTEX_SPLITTABLE:
        return cl.is_vertex_splittable(ideal, cl.SplitReading.LITERAL, caps), ideal
    if prop == CheckProperty.VERTEX_SPLITTABLE_RELAXED:
        return cl.is_vertex_splittable(ideal, cl.SplitReading.RELAXED, caps), ideal
    if prop == CheckProperty.LINEAR_RESOLUTION:
        return has_linear_resolution(ideal, field_, caps), None
    if prop == CheckProperty.COMPONENTWISE_LINEAR:
        return is_componentwise_linear(ideal, field_, caps), None
    if prop == CheckProperty.COHEN_MACAULAY:
        return cl.is_cohen_macaulay(ideal, field_, caps), None
    if prop == CheckProperty.SEQUENTIALLY_CM:
        return cl.is_sequentially_cm(ideal, field_, caps), None
    if prop == CheckProperty.COMPLEMENT_CHORDAL:
        return cl.is_chordal_complement_oracle(ideal), None
    complex_ = stanley_reisner_complex(ideal)
    if prop == CheckProperty.VERTEX_DECOMPOSABLE:
        return cl.is_vertex_decomposable(complex_, caps), complex_
    return cl.is_shellable(complex_, caps), complex_


@app.command("check")
def check_cmd(
    prop: Annotated[CheckProperty, typer.Argument(help="Property to decide")],
    expr: ExprArgument,
    n_vars: VarsOption = None,
    field: FieldOption = "q",
    as_json: JsonOption = False,
    max_orderings: MaxOrderingsOption = None,
    max_facets: MaxFacetsOption = None,
    verbose: VerboseOption = False,
) -> None:
    """Decide a single property; decisions with witnesses print the verified certificate."""
    configure(verbose)
    with exit_on_error():
        from monodec.classify import Decision, describe_certificate, verify_certificate
        from monodec.classify.certificates import CertificateKind
        from monodec.harness.report import decision_value, format_value

        ideal = parse_expression(expr, n_vars)
        result, subject = _property_check(
            prop, ideal, parse_field(field), load_settings(max_orderings, max_facets)
        )
        certificate, replayed = None, True
        if isinstance(result, Decision):
            cert = result.certificate
            if cert is not None:
                certificate = describe_certificate(cert, subject)
                if cert.kind != CertificateKind.REFUTATION:
                    replayed = verify_certificate(cert, subject)
            value = decision_value(result)
        else:
            value = result

    if as_json:
        document = {"property": prop.value, "ideal": ideal.format(), "value": value}
        emit_json({**document, "certificate": certificate})
    else:
        typer.echo(format_value(value))
        if certificate:
            typer.echo(certificate)
    if not replayed:
        get_error_console().print("[bold red]AUDIT[/bold red] certificate fails replay")
        raise typer.Exit(ExitCode.AUDIT_FAILURE)
    if value == Verdict.UNDECIDED.value:
        raise typer.Exit(ExitCode.RESOURCE_CAP)


@app.command("search-order")
def search_order_cmd(
    kind: Annotated[OrderKind, typer.Argument(help="wpm: variable order, lq: generator order")],
    expr: ExprArgument,
    n_vars: VarsOption = None,
    as_json: JsonOption = False,
    max_orderings: MaxOrderingsOption = None,
    verbose: VerboseOption = False,
) -> None:
    """Search for a weakly polymatroidal variable order or a linear-quotients order."""
    configure(verbose)
    with exit_on_error():
        from monodec.classify import find_lq_order, find_wpm_order

        ideal = parse_expression(expr, n_vars)
        caps = load_settings(max_orderings, None)
        search = find_wpm_order if kind == OrderKind.WPM else find_lq_order
        decision = search(ideal, caps)
    if as_json:
        document = {"ideal": ideal.format(), "search": kind.value}
        emit_json({**document, **decision.to_dict(ideal.variables)})
    else:
        typer.echo(decision.verdict.value)
        if decision.holds:
            typer.echo(decision.certificate.format_order(ideal.variables))
        elif decision.refuted:
            typer.echo(decision.certificate.note)
            if decision.orders_covered:
                typer.echo(f"orders covered: {decision.orders_covered}")
        else:
            typer.echo(decision.note)
        typer.echo(f"examined: {decision.examined}")
    if not decision.decided:
        raise typer.Exit(ExitCode.RESOURCE_CAP)


@app.command("verify-paper")
def verify_paper_cmd(
    path: Annotated[
        Optional[Path], typer.Argument(help="Corpus file (default: the shipped corpus)")
    ] = None,
    field: FieldOption = "q",
    as_json: JsonOption = False,
    verbose: VerboseOption = False,
    log_file: LogFileOption = None,
) -> None:
    """Replay every expectation of a reference corpus."""
    configure(verbose, log_file)
    with exit_on_error():
        from monodec.config import load_caps
        from monodec.harness.corpus import DEFAULT_CORPUS, load_corpus, verify_corpus

        corpus = path or DEFAULT_CORPUS
        if not corpus.is_file():
            raise ValueError(f"Corpus file {corpus} does not exist")
        result = verify_corpus(load_corpus(corpus), load_caps(), parse_field(field))

    if as_json:
        emit_json(
            {
                "corpus": str(corpus),
                "cases": result.cases,
                "checked": result.checked,
                "mismatches": [dataclasses.asdict(m) for m in result.mismatches],
                "audit": result.audit,
                "warnings": result.warnings,
            }
        )
    else:
        console = get_console()
        for mismatch in result.mismatches:
            console.print(f"[red]MISMATCH[/red] {escape(mismatch.format())}", highlight=False)
        for message in result.audit:
            console.print(f"[bold red]AUDIT[/bold red] {escape(message)}", highlight=False)
        status = "[green]passed[/green]" if result.passed else "[red]failed[/red]"
        console.print(f"{result.cases} cases, {result.checked} expectations: {status}")
    if result.audit:
        raise typer.Exit(ExitCode.AUDIT_FAILURE)
    if result.mismatches:
        raise typer.Exit(ExitCode.EXPECTATION_MISMATCH)


@app.command("enumerate")
def enumerate_cmd(
    family: Annotated[
        SuiteName,
        typer.Option("--theorem", help="Family to enumerate: 2.3, 2.6i, 2.6ii, 2.10 or duality"),
    ],
    n: Annotated[int, typer.Option("--n", help="Number of variables (elements for matroids)")],
    max_gens: Annotated[
        int, typer.Option("--max-gens", help="Generator bound of the few-generators suite")
    ] = 3,
    squares: Annotated[
        bool, typer.Option("--squares", help="Quadratic suite: also square some vertices")
    ] = False,
    count: Annotated[int, typer.Option("--count", help="Duality suite: instances")] = 200,
    seed: Annotated[int, typer.Option("--seed", help="Duality suite: random seed")] = 0,
    field: FieldOption = "q",
    as_json: JsonOption = False,
    verbose: VerboseOption = False,
    log_file: LogFileOption = None,
) -> None:
    """Enumerate a family of ideals and check the equivalences that hold on it."""
    configure(verbose, log_file)
    with exit_on_error():
        from monodec.config import load_caps
        from monodec.harness.suites import run_suite

        result = run_suite(
            family.suite, n, load_caps(), parse_field(field), squares, count, seed, max_gens
        )
    if as_json:
        emit_json(result.to_dict())
    else:
        console = get_console()
        counts = ", ".join(f"{k}={v}" for k, v in sorted(result.counts.items()))
        summary = f"{result.suite} n={result.n}: {result.instances} instances ({counts})"
        console.print(summary, highlight=False)
        for note in result.notes:
            console.print(f"[yellow]note[/yellow] {escape(note)}", highlight=False)
        for failure in result.failures:
            console.print(f"[bold red]COUNTEREXAMPLE[/bold red] {escape(failure)}", highlight=False)
        console.print("[green]passed[/green]" if result.passed else "[red]failed[/red]")
    if not result.passed:
        raise typer.Exit(ExitCode.AUDIT_FAILURE)


@app.command()
def version() -> None:
    """Show version information."""
    from monodec import __version__

    typer.echo(f"monodec {__version__}")


def main() -> None:
    """Main entry point for the monodec command line interface."""
    try:
        code = app(standalone_mode=False)
    except ClickException as e:
        # usage errors exit 1; exit 2 is reserved for undecided results
        e.show()
        sys.exit(ExitCode.USAGE_ERROR)
    except (KeyboardInterrupt, typer.Abort):
        logging.info("\nOperation cancelled by user.")
        sys.exit(ExitCode.USAGE_ERROR)
    except Exception as e:
        logging.error(f"Unexpected error: {e}")
        logging.debug("Full traceback:", exc_info=True)
        sys.exit(ExitCode.USAGE_ERROR)
    sys.exit(code if isinstance(code, int) else ExitCode.SUCCESS)


if __name__ == "__main__":
    main()
