"""
The textual formats: constraint documents, tables, proof traces and
bindings, plus the formatting of results.

Constraint documents hold one declaration per line:

    attrs year,quarter,month
    od [month] -> [quarter]     # month orders quarter
    oeq [A] <-> [B]
    oc [A] ~ [B]
    fd {A,B} => {C}
    const A

Proof traces hold one step per line:

    3: od [Y,X] -> [Y,Z] [Pref(2) {X=[X], Y=[Z], Z=[Y]}]
"""
import csv
import io
import re

from pyparsing import (
    Group,
    Keyword,
    Literal,
    Optional,
    ParseBaseException,
    ParseException,
    StringEnd,
    Suppress,
    Word,
    ZeroOrMore,
    alphanums,
    alphas,
    nums,
    rest_of_line,
)

from odengine.core import (
    AttrSet, ConstraintSet, Constant, Dependency, FuncDep, MarkedList,
    OrderCompat, OrderDep, OrderEquiv,
)
from odengine.exceptions import (
    DslSyntaxError, ShapeError, TableFormatError, ValueTypeError,
)
from odengine.instances import TableInstance
from odengine.proofs import Binding, Proof, ProofStep, Rule


__all__ = [
    'ConstraintDoc', 'parse_constraints', 'parse_dependency', 'parse_table',
    'parse_proof', 'parse_binding', 'parse_list', 'parse_set',
    'load_constraints', 'load_table', 'load_proof', 'format_dependency',
    'format_constraints', 'format_table', 'format_proof', 'format_witness',
    'format_report', 'format_records',
]


def _build_grammar():
    name = Word(alphas, alphanums + "_")
    comma = Suppress(",")

    attr_list = Group(
        Suppress("[") - Optional(name + ZeroOrMore(comma - name)) + Suppress("]")
    ).set_parse_action(lambda s, l, t: [MarkedList(t[0])])
    attr_set = Group(
        Suppress("{") - Optional(name + ZeroOrMore(comma - name)) + Suppress("}")
    ).set_parse_action(lambda s, l, t: [AttrSet(t[0])])

    od = (
        Suppress(Keyword("od")) - attr_list + Suppress("->") + attr_list
    ).set_parse_action(lambda s, l, t: [OrderDep(t[0], t[1])])
    oeq = (
        Suppress(Keyword("oeq")) - attr_list + Suppress("<->") + attr_list
    ).set_parse_action(lambda s, l, t: [OrderEquiv(t[0], t[1])])
    oc = (
        Suppress(Keyword("oc")) - attr_list + Suppress("~") + attr_list
    ).set_parse_action(lambda s, l, t: [OrderCompat(t[0], t[1])])
    fd = (
        Suppress(Keyword("fd")) - attr_set + Suppress("=>") + attr_set
    ).set_parse_action(lambda s, l, t: [FuncDep(t[0], t[1])])
    const = (
        Suppress(Keyword("const")) - name
    ).set_parse_action(lambda s, l, t: [Constant(t[0])])

    dependency = od | oeq | oc | fd | const

    attrs = (
        Keyword("attrs") - Group(name + ZeroOrMore(comma - name))
    ).set_parse_action(lambda s, l, t: [('attrs', AttrSet(t[1]))])

    comment = Literal("#") + rest_of_line

    declaration_line = Optional(dependency | attrs) + StringEnd()
    declaration_line.ignore(comment)

    dependency_text = dependency + StringEnd()
    dependency_text.ignore(comment)

    def _rule(s, l, t):
        try:
            return [Rule.from_token(t[0])]
        except ShapeError:
            raise ParseException(s, l, "unknown rule {0!r}".format(t[0]))

    integer = Word(nums).set_parse_action(lambda s, l, t: [int(t[0])])
    rule = Word(alphas).set_parse_action(_rule)
    premises = Group(
        Suppress("(") - Optional(integer + ZeroOrMore(comma - integer)) +
        Suppress(")")
    )
    assignment = Group(name + Suppress("=") - attr_list)
    binding = Group(
        Suppress("{") - Optional(assignment + ZeroOrMore(comma - assignment)) +
        Suppress("}")
    ).set_parse_action(
        lambda s, l, t: [Binding((pair[0], pair[1]) for pair in t[0])]
    )

    step = (
        integer + Suppress(":") - dependency +
        Suppress("[") + rule + premises + binding + Suppress("]")
    )
    step_line = Optional(step) + StringEnd()
    step_line.ignore(comment)

    binding_text = binding + StringEnd()

    bare_list = Group(
        Optional(name + ZeroOrMore(comma - name))
    ).set_parse_action(lambda s, l, t: [MarkedList(t[0])])
    list_text = (attr_list | bare_list) + StringEnd()

    bare_set = Group(
        Optional(name + ZeroOrMore(comma - name))
    ).set_parse_action(lambda s, l, t: [AttrSet(t[0])])
    set_text = (attr_set | bare_set) + StringEnd()

    return {
        'declaration': declaration_line,
        'dependency': dependency_text,
        'step': step_line,
        'binding': binding_text,
        'list': list_text,
        'set': set_text,
    }


_GRAMMAR = _build_grammar()


def _parse(grammar, text, line):
    try:
        return grammar.parse_string(text, parse_all=True)
    except ParseBaseException as error:
        raise DslSyntaxError(error.msg, line, error.col)


def _lines(text):
    # newline-agnostic
    return text.replace('\r\n', '\n').replace('\r', '\n').split('\n')


class ConstraintDoc(object):
    """
    A parsed constraint document.

    declarations: (line number, Dependency) pairs in document order.
    attrs: The AttrSet of the `attrs` declaration, or None.
    """
    def __init__(self, declarations=(), attrs=None):
        self.declarations = tuple(declarations)
        self.attrs = attrs

    @property
    def dependencies(self):
        return [dep for _, dep in self.declarations]

    def constraint_set(self):
        return ConstraintSet(self.dependencies, self.attrs or ())

    def __eq__(self, other):
        if not isinstance(other, ConstraintDoc):
            return NotImplemented
        return (
            self.dependencies == other.dependencies and
            self.attrs == other.attrs
        )

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __repr__(self):
        return "ConstraintDoc({0} declarations, attrs={1})".format(
            len(self.declarations), self.attrs
        )


def parse_constraints(text):
    """
    Parse a constraint document. Raises DslSyntaxError with the 1-based
    line and column of the first problem.
    """
    declarations = []
    attrs = None

    for number, line in enumerate(_lines(text), 1):
        parsed = _parse(_GRAMMAR['declaration'], line, number)
        if not parsed:
            continue

        item = parsed[0]
        if not isinstance(item, Dependency):
            if attrs is not None:
                raise DslSyntaxError(
                    "duplicate attrs declaration", number,
                    line.index('attrs') + 1
                )
            attrs = item[1]
        else:
            declarations.append((number, item))

    return ConstraintDoc(declarations, attrs)


def parse_dependency(text):
    """
    Parse a single declaration such as "od [A,B] -> [C]".
    """
    return _parse(_GRAMMAR['dependency'], text.strip(), 1)[0]


def parse_binding(text):
    """
    Parse "{X=[A,B], Y=[]}" into a Binding.
    """
    return _parse(_GRAMMAR['binding'], text.strip(), 1)[0]


def parse_list(text):
    """
    Parse "A,B,C" or "[A,B,C]" into a MarkedList.
    """
    return _parse(_GRAMMAR['list'], text.strip(), 1)[0]


def parse_set(text):
    """
    Parse "A,B" or "{A,B}" into an AttrSet.
    """
    return _parse(_GRAMMAR['set'], text.strip(), 1)[0]


def parse_proof(text, goal=None):
    """
    Parse a proof trace. Steps must be numbered 1, 2, 3, ...
    """
    steps = []

    for number, line in enumerate(_lines(text), 1):
        parsed = _parse(_GRAMMAR['step'], line, number)
        if not parsed:
            continue

        index, statement, rule, premises, binding = parsed
        if index != len(steps) + 1:
            raise DslSyntaxError(
                "expected step {0}, found {1}".format(len(steps) + 1, index),
                number, len(line) - len(line.lstrip()) + 1
            )

        steps.append(ProofStep(statement, rule, list(premises), binding))

    if not steps:
        raise DslSyntaxError("a proof needs at least one step", 1, 1)

    return Proof(steps, goal)


_INTEGER = re.compile(r'^[+-]?[0-9]+$')


def _cell(text):
    text = text.strip()
    if _INTEGER.match(text):
        return int(text)
    return text


def parse_table(text):
    """
    Parse comma-separated text whose first line is the header. Cells
    made of digits with an optional leading + or - become integers,
    others text. Blank lines and lines starting with # are skipped.
    """
    header = None
    rows = []
    tags = {}

    for number, line in enumerate(_lines(text), 1):
        if not line.strip() or line.lstrip().startswith('#'):
            continue

        cells = next(csv.reader([line]))

        if header is None:
            header = [cell.strip() for cell in cells]
            for position, name in enumerate(header):
                if not re.match('^[A-Za-z][A-Za-z0-9_]*$', name):
                    raise TableFormatError(
                        "invalid column name {0!r}".format(name), number,
                        position + 1
                    )
            if len(set(header)) != len(header):
                raise TableFormatError("duplicate column name", number)
            continue

        if len(cells) != len(header):
            raise TableFormatError(
                "expected {0} cells, found {1}".format(len(header), len(cells)),
                number
            )

        row = {}
        for name, raw in zip(header, cells):
            value = _cell(raw)
            tag = 'int' if isinstance(value, int) else 'text'
            if tags.setdefault(name, tag) != tag:
                raise TableFormatError(
                    "column mixes integer and text values", number, name
                )
            row[name] = value
        rows.append(row)

    if header is None:
        raise TableFormatError("missing header", 1)

    try:
        return TableInstance(header, rows)
    except ValueTypeError as error:
        raise TableFormatError(str(error), 1)


def _read(path):
    with io.open(path, encoding='utf-8') as handle:
        return handle.read()


def load_constraints(argument):
    """
    Load a constraint set from a file path, or from an inline literal
    in braces whose declarations are separated by ';' or newlines:
    "{od [month] -> [quarter]; const A}".
    """
    stripped = argument.strip()
    if stripped.startswith('{'):
        if not stripped.endswith('}'):
            raise DslSyntaxError(
                "inline constraints must end with '}'", 1, len(stripped)
            )
        text = '\n'.join(stripped[1:-1].split(';'))
    else:
        text = _read(argument)

    return parse_constraints(text).constraint_set()


def load_table(path):
    return parse_table(_read(path))


def load_proof(path):
    return parse_proof(_read(path))


def format_dependency(dep):
    return str(dep)


def format_constraints(constraints):
    """
    Format a ConstraintDoc or ConstraintSet as a document. A
    ConstraintSet gets an attrs line only when its universe has
    attributes no dependency mentions.
    """
    lines = []

    if isinstance(constraints, ConstraintDoc):
        if constraints.attrs is not None:
            lines.append("attrs {0}".format(",".join(sorted(constraints.attrs))))
        deps = constraints.dependencies
    else:
        mentioned = AttrSet()
        for dep in constraints:
            mentioned = mentioned | dep.attributes()
        if constraints.universe - mentioned:
            lines.append(
                "attrs {0}".format(",".join(sorted(constraints.universe)))
            )
        deps = constraints.deps

    lines.extend(str(dep) for dep in deps)
    return '\n'.join(lines)


def format_table(table):
    lines = [','.join(table.columns)]
    for values in table.tuples():
        lines.append(','.join(str(value) for value in values))
    return '\n'.join(lines)


def format_proof(proof):
    return str(proof)


def format_witness(witness, notes=False):
    """
    Format a witness table. With notes, provenance comments come
    before the rows.
    """
    text = format_table(witness.table)
    if not notes:
        return text

    comments = [
        "# rows {0}-{1}: {2}".format(first, last, note)
        for first, last, note in witness.notes
    ]
    return '\n'.join(comments + [text])


def format_report(report):
    """
    Format a RewriteReport: the result, then one line per removal.
    """
    lines = [str(report.result)]
    for removal in report.removals:
        lines.append(
            "removed {attr} by {rule} using {dep}".format(
                attr=removal.attr, rule=removal.rule, dep=removal.dependency
            )
        )
    return '\n'.join(lines)


def format_records(records):
    """
    One line per record: space separated key=value pairs, keys in the
    order given.
    """
    return '\n'.join(
        ' '.join("{0}={1}".format(key, value) for key, value in record)
        for record in records
    )
