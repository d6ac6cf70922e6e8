"""Text serialization for algebras and modules, plus the JSON report schema.

Algebra files are line-oriented: a header (field, name, dimension, labels,
unit, generators, reduced words) followed by sparse structure-constant
lines `mult i j k scalar`.  Module files carry one dense matrix per
generator.  Scalars use each field's own text syntax, which round-trips
bit-exactly, and the dump order is canonical, so dump(load(dump(x))) is
byte-identical to dump(x).

Reports are plain dicts rendered with sorted keys; identical inputs give
byte-identical JSON apart from the timing field, which callers strip when
comparing.
"""

import json

from . import __version__
from .algebra import Algebra
from .fields import field_make
from .linalg import Matrix
from .modules import Representation

SCHEMA_VERSION = "v1"


class FormatError(ValueError):
    pass


def field_to_text(field):
    if field.kind == "rationals":
        return "rationals"
    if field.kind == "prime":
        return "prime %d" % field.p
    if field.kind == "cyclotomic":
        return "cyclotomic %d" % field.ell
    raise FormatError("unknown field kind %r" % field.kind)


def field_from_text(text):
    parts = text.split()
    if parts == ["rationals"]:
        return field_make("rationals")
    if len(parts) == 2 and parts[0] == "prime":
        return field_make("prime", p=int(parts[1]))
    if len(parts) == 2 and parts[0] == "cyclotomic":
        return field_make("cyclotomic", ell=int(parts[1]))
    raise FormatError("bad field line: %r" % text)


def dump_algebra_text(alg):
    f = alg.field
    lines = [
        "algebra v1",
        "field %s" % field_to_text(f),
        "name %s" % alg.name,
        "dim %d" % alg.dim,
    ]
    for i, lab in enumerate(alg.labels):
        lines.append("label %d %s" % (i, lab))
    for i, c in enumerate(alg.unit):
        if not f.is_zero(c):
            lines.append("unit %d %s" % (i, f.format(c)))
    lines.append("gens" + "".join(" %d" % g for g in alg.gens))
    for i, w in enumerate(alg.words):
        lines.append("word %d" % i + "".join(" %d" % g for g in w))
    for i, j in sorted(alg.mult):
        for k, c in sorted(alg.mult[(i, j)], key=lambda t: t[0]):
            if not f.is_zero(c):
                lines.append("mult %d %d %d %s" % (i, j, k, f.format(c)))
    return "\n".join(lines) + "\n"


def load_algebra_text(text):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != "algebra v1":
        raise FormatError("not an algebra v1 file")
    field = None
    name = ""
    dim = None
    labels = {}
    unit_terms = []
    gens = []
    words = {}
    mult_terms = []
    for ln in lines[1:]:
        head, _, rest = ln.partition(" ")
        if head == "field":
            field = field_from_text(rest)
        elif head == "name":
            name = rest
        elif head == "dim":
            dim = int(rest)
        elif head == "label":
            i, _, lab = rest.partition(" ")
            labels[int(i)] = lab
        elif head == "unit":
            i, _, scal = rest.partition(" ")
            unit_terms.append((int(i), scal))
        elif head == "gens":
            gens = [int(x) for x in rest.split()] if rest else []
        elif head == "word":
            xs = rest.split()
            words[int(xs[0])] = tuple(int(x) for x in xs[1:])
        elif head == "mult":
            i, j, k, scal = rest.split(" ", 3)
            mult_terms.append((int(i), int(j), int(k), scal))
        else:
            raise FormatError("unknown line %r" % ln)
    if field is None or dim is None:
        raise FormatError("missing field or dim")
    label_list = [labels[i] for i in range(dim)]
    unit = [field.zero] * dim
    for i, scal in unit_terms:
        unit[i] = field.parse(scal)
    word_list = [words.get(i, ()) for i in range(dim)]
    mult = {(i, j): [] for i in range(dim) for j in range(dim)}
    for i, j, k, scal in mult_terms:
        mult[(i, j)].append((k, field.parse(scal)))
    return Algebra(field, label_list, mult, unit, gens, word_list, name=name)


def _dump_matrix_lines(field, mat):
    return ["row " + "\t".join(field.format(c) for c in row) for row in mat.data]


def dump_module_text(rep):
    f = rep.algebra.field
    lines = [
        "module v1",
        "algebra %s" % rep.algebra.name,
        "dim %d" % rep.dim,
        "label %s" % rep.label,
    ]
    for g, mat in zip(rep.algebra.gens, rep.gen_action):
        lines.append("gen %d" % g)
        lines.extend(_dump_matrix_lines(f, mat))
    return "\n".join(lines) + "\n"


def load_module_text(text, alg):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != "module v1":
        raise FormatError("not a module v1 file")
    f = alg.field
    dim = None
    label = ""
    actions = []
    rows = None
    for ln in lines[1:]:
        head, _, rest = ln.partition(" ")
        if head == "algebra":
            if rest != alg.name:
                raise FormatError("module references algebra %r" % rest)
        elif head == "dim":
            dim = int(rest)
        elif head == "label":
            label = rest
        elif head == "gen":
            if rows is not None:
                actions.append(Matrix(f, dim, dim, rows))
            rows = []
        elif head == "row":
            rows.append([f.parse(x) for x in rest.split("\t")])
        else:
            raise FormatError("unknown line %r" % ln)
    if rows is not None:
        actions.append(Matrix(f, dim, dim, rows))
    if dim is None or len(actions) != len(alg.gens):
        raise FormatError("module file incomplete")
    return Representation(alg, dim, actions, label=label, check=True)


# -- reports -------------------------------------------------------------


def make_report(command, status, payload, seed=None, timing_ms=None):
    """The shared report envelope; payload is any JSON-safe dict."""
    return {
        "schema": SCHEMA_VERSION,
        "tool": {"name": "artifact", "version": __version__},
        "command": list(command),
        "seed": seed,
        "status": status,
        "payload": payload,
        "timing_ms": timing_ms,
    }


def report_json(report):
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def strip_timing(report):
    out = dict(report)
    out.pop("timing_ms", None)
    return out


def _flatten(prefix, value, out):
    if isinstance(value, dict):
        for k in sorted(value):
            _flatten("%s.%s" % (prefix, k) if prefix else str(k), value[k], out)
    elif isinstance(value, (list, tuple)):
        out.append("%s: %s" % (prefix, json.dumps(value)))
    else:
        out.append("%s: %s" % (prefix, value))


def report_text(report):
    """Line projection of the JSON report; carries no extra information."""
    out = []
    _flatten("", report, out)
    return "\n".join(out) + "\n"
