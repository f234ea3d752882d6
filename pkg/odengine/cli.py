"""
The odengine command line.

Exit codes: 0 for a positive answer, 1 for a negative one, 2 for bad
input.
"""
from functools import wraps
import logging
import random
import sys

import typer

from odengine.core import ConstraintSet
from odengine.decide import decide, closure as implied_closure
from odengine.dsl import (
    format_proof, format_records, format_report, format_table,
    format_witness, load_constraints, load_proof, load_table,
    parse_dependency, parse_list, parse_set,
)
from odengine.exceptions import OdEngineError
from odengine.inference import (
    check_proof, random_instance, search_proof, validate_all,
)
from odengine.instances import HOLDS, find_violation
from odengine.proofs import PRIMITIVE
from odengine.rewrite import (
    can_substitute_order, reduce_group_by, reduce_order, reduce_order_star,
)
from odengine.settings import get_settings
from odengine.witness import build_armstrong_table


logger = logging.getLogger(__name__)

app = typer.Typer(
    help="Check, imply, prove and rewrite with order dependencies."
)

FORMATS = ('text', 'records')

_MODEL_HELP = "Constraint file, or an inline literal such as '{od [A] -> [B]}'"


def _configure_logging(verbose):
    package = logging.getLogger('odengine')
    for handler in list(package.handlers):
        if getattr(handler, 'odengine_cli', False):
            package.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    handler.odengine_cli = True
    handler.setFormatter(logging.Formatter('%(levelname)s %(name)s: %(message)s'))
    package.addHandler(handler)

    if verbose:
        package.setLevel(logging.DEBUG)
    else:
        level = get_settings().log_level
        package.setLevel(getattr(logging, level, logging.WARNING))


def _guarded(command):
    """
    Turn odengine and I/O errors into a diagnostic and exit code 2.
    """
    @wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except (OdEngineError, IOError, OSError) as error:
            typer.echo("error: {0}".format(error), err=True)
            raise typer.Exit(code=2)
    return wrapper


def _emit(ctx, text, records):
    if ctx.obj['format'] == 'records':
        typer.echo(format_records(records))
    else:
        typer.echo(text)


def _done(positive):
    raise typer.Exit(code=0 if positive else 1)


def _table_records(table):
    return [
        [(name, value) for name, value in zip(table.columns, values)]
        for values in table.tuples()
    ]


@app.callback()
@_guarded
def main_options(
    ctx: typer.Context,
    output_format: str = typer.Option(
        'text', '--format', help="Output format: text or records."
    ),
    verbose: bool = typer.Option(
        False, '--verbose', '-v', help="Log debugging detail to stderr."
    ),
):
    if output_format not in FORMATS:
        raise typer.BadParameter(
            "must be one of {0}".format(", ".join(FORMATS)),
            param_hint='--format',
        )
    _configure_logging(verbose)
    ctx.obj = {'format': output_format}


@app.command()
@_guarded
def holds(
    ctx: typer.Context,
    table: str = typer.Option(..., '--table', '-t', help="CSV table file."),
    dep: str = typer.Option(..., '--dep', '-d', help="A declaration."),
):
    """
    Check whether a table satisfies a dependency.
    """
    found = find_violation(load_table(table), parse_dependency(dep))

    if found is HOLDS:
        _emit(ctx, 'SATISFIED', [[('result', 'SATISFIED')]])
        _done(True)

    rows = ",".join(str(row) for row in found.rows)
    _emit(
        ctx,
        "VIOLATED(kind={0}, rows={1})".format(found.kind.value, rows),
        [[('result', 'VIOLATED'), ('kind', found.kind.value), ('rows', rows)]],
    )
    _done(False)


@app.command()
@_guarded
def imply(
    ctx: typer.Context,
    model: str = typer.Option(..., '--model', '-m', help=_MODEL_HELP),
    dep: str = typer.Option(..., '--dep', '-d', help="A declaration."),
):
    """
    Decide whether the constraints imply a dependency; prints a
    two-row counterexample when they do not.
    """
    verdict = decide(load_constraints(model), parse_dependency(dep))

    if verdict:
        _emit(ctx, 'IMPLIED', [[('result', 'IMPLIED')]])
        _done(True)

    table = verdict.counterexample
    _emit(
        ctx,
        'NOT-IMPLIED\n' + format_table(table),
        [[('result', 'NOT-IMPLIED')]] + _table_records(table),
    )
    _done(False)


@app.command()
@_guarded
def closure(
    ctx: typer.Context,
    model: str = typer.Option(..., '--model', '-m', help=_MODEL_HELP),
    max_len: int = typer.Option(2, '--max-len', help="Longest list to consider."),
):
    """
    List every implied OD between canonical lists up to a length.
    """
    implied = sorted(str(od) for od in implied_closure(load_constraints(model), max_len))
    _emit(ctx, '\n'.join(implied), [[('od', od)] for od in implied])
    _done(True)


@app.command()
@_guarded
def prove(
    ctx: typer.Context,
    model: str = typer.Option(..., '--model', '-m', help=_MODEL_HELP),
    dep: str = typer.Option(..., '--dep', '-d', help="The goal."),
    depth: int = typer.Option(None, '--depth', help="Search rounds."),
    max_len: int = typer.Option(None, '--max-len', help="Longest list kept."),
):
    """
    Search for a proof of a dependency.
    """
    proof = search_proof(
        load_constraints(model), parse_dependency(dep),
        max_depth=depth, max_list_len=max_len,
    )

    if proof is None:
        _emit(ctx, 'NOT-FOUND', [[('result', 'NOT-FOUND')]])
        _done(False)

    _emit(ctx, format_proof(proof), [
        [
            ('step', number), ('rule', step.rule.token),
            ('premises', ",".join(str(p) for p in step.premises)),
        ]
        for number, step in enumerate(proof.steps, 1)
    ])
    _done(True)


@app.command()
@_guarded
def verify(
    ctx: typer.Context,
    model: str = typer.Option(..., '--model', '-m', help=_MODEL_HELP),
    proof: str = typer.Option(..., '--proof', '-p', help="Proof trace file."),
):
    """
    Check a proof trace.
    """
    result = check_proof(load_constraints(model), load_proof(proof))

    records = [('result', 'VALID' if result else 'INVALID')]
    if not result:
        records.append(('step', 'goal' if result.step is None else result.step))
    _emit(ctx, str(result), [records])
    _done(bool(result))


def _report_records(report):
    return [[('result', report.result)]] + [
        [('removed', removal.attr), ('rule', removal.rule)]
        for removal in report.removals
    ]


@app.command()
@_guarded
def reduce(
    ctx: typer.Context,
    model: str = typer.Option(..., '--model', '-m', help=_MODEL_HELP),
    order: str = typer.Option(..., '--order', '-o', help="Order-by list, e.g. 'A,B,C'."),
    star: bool = typer.Option(True, '--star/--no-star', help="Also drop by ODs."),
):
    """
    Shorten an order-by list.
    """
    store = load_constraints(model)
    reducer = reduce_order_star if star else reduce_order
    report = reducer(parse_list(order), store)
    _emit(ctx, format_report(report), _report_records(report))
    _done(True)


@app.command('reduce-group')
@_guarded
def reduce_group(
    ctx: typer.Context,
    model: str = typer.Option(..., '--model', '-m', help=_MODEL_HELP),
    group: str = typer.Option(..., '--group', '-g', help="Group-by set, e.g. 'A,B'."),
    prefer: str = typer.Option(None, '--prefer', help="Attributes to keep first."),
):
    """
    Shorten a group-by set.
    """
    preference = parse_list(prefer) if prefer else None
    report = reduce_group_by(parse_set(group), load_constraints(model), preference)
    _emit(ctx, format_report(report), _report_records(report))
    _done(True)


@app.command()
@_guarded
def substitute(
    ctx: typer.Context,
    model: str = typer.Option(..., '--model', '-m', help=_MODEL_HELP),
    plan: str = typer.Option(..., '--plan', help="The order a plan provides."),
    query: str = typer.Option(..., '--query', help="The order the query asks for."),
):
    """
    Decide whether rows sorted by plan are sorted by query.
    """
    legal = can_substitute_order(
        parse_list(plan), parse_list(query), load_constraints(model)
    )
    answer = 'SUBSTITUTABLE' if legal else 'NOT-SUBSTITUTABLE'
    _emit(ctx, answer, [[('result', answer)]])
    _done(legal)


@app.command()
@_guarded
def witness(
    ctx: typer.Context,
    model: str = typer.Option(..., '--model', '-m', help=_MODEL_HELP),
    notes: bool = typer.Option(False, '--notes', help="Show where rows came from."),
):
    """
    Build a table that satisfies the constraints and falsifies every OD
    they do not imply.
    """
    built = build_armstrong_table(load_constraints(model))
    _emit(ctx, format_witness(built, notes=notes), _table_records(built.table))
    _done(True)


@app.command()
@_guarded
def selftest(
    ctx: typer.Context,
    seed: int = typer.Option(0, '--seed', help="Random seed."),
    count: int = typer.Option(200, '--count', help="Instances per rule."),
):
    """
    Replay random instances of the six axioms against the decision
    procedure and validate every derived rule.
    """
    rng = random.Random(seed)
    attrs = ['A', 'B', 'C', 'D', 'E']
    failures = []

    for rule in sorted(PRIMITIVE, key=lambda r: r.token):
        for _ in range(count):
            binding, premises, conclusion = random_instance(rule, rng, attrs)
            if not decide(ConstraintSet(premises, attrs), conclusion):
                failures.append((rule.token, str(binding)))
                logger.error("%s %s is not implied by its premises", rule.token, binding)

    derived = validate_all()
    broken = sorted(rule.token for rule, result in derived.items() if not result)

    text = "axioms: {0} instances, {1} failures\nderived: {2} rules, {3} failures".format(
        count * len(PRIMITIVE), len(failures), len(derived), len(broken)
    )
    if broken:
        text += "\nfailed: " + ", ".join(broken)

    _emit(ctx, text, [
        [('check', 'axioms'), ('instances', count * len(PRIMITIVE)),
         ('failures', len(failures))],
        [('check', 'derived'), ('rules', len(derived)), ('failures', len(broken))],
    ])
    _done(not failures and not broken)


def main():
    app(prog_name='odengine')
