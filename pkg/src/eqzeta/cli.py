"""Batch front end: one JSON job document in, one result out.

Usage::

    eqzeta job.json [--order N] [--strict | --no-strict] [--format text|structured]

Exit status: 0 on success, 2 for unparseable documents, 3 for validation
failures, 4 when a size limit is hit.  Diagnostics go to stderr only.
The document and output schemas are described in ``docs/schema.md``.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings
from fractions import Fraction

from .acampo import ResolutionStratum, milnor_fibre_euler, zeta_acampo
from .burnside import (
    GSetExplicit,
    burnside_ring,
    coset_gset,
    disjoint_union,
    format_fraction,
    gset_decompose,
    natural_gset,
    sym_power_explicit,
    to_permutation_character,
)
from .eqtop import (
    IsotropyStratum,
    LefschetzSequence,
    euler_from_cells,
    euler_from_strata,
    s_from_lefschetz,
    zeta_from_lefschetz,
)
from .errors import EqZetaError, SizeLimitError
from .groups import (
    build_group_from_permutations,
    builtin_group,
    generators_of,
    parse_cycles,
    subgroup_generated,
)
from .gseries import DEFAULT_ORDER, MAX_ORDER, lambda_series

SCHEMA_VERSION = 1
TASKS = ("marks", "lambda-series", "sym-power", "euler", "zeta-lefschetz",
         "zeta-acampo", "character")

EXIT_OK, EXIT_PARSE, EXIT_VALIDATION, EXIT_SIZE = 0, 2, 3, 4


class ParseError(Exception):
    pass


class ValidationError(Exception):
    pass


# Parsing
# -------

def _require(doc, key, where):
    if not isinstance(doc, dict) or key not in doc:
        raise ParseError(f"{where}: missing field {key!r}")
    return doc[key]


def parse_group(spec):
    if not isinstance(spec, dict):
        raise ParseError("group: expected an object")
    max_order = spec.get("max_order", 512)
    if "family" in spec:
        n = _require(spec, "n", "group")
        if not isinstance(n, int):
            raise ParseError("group.n must be an integer")
        try:
            return builtin_group(spec["family"], n, max_order=max_order)
        except ValueError as exc:
            raise ParseError(f"group: {exc}") from None
    degree = _require(spec, "degree", "group")
    gens = spec.get("generators", [])
    try:
        return build_group_from_permutations(degree, gens, max_order=max_order,
                                             label=spec.get("label"))
    except ValueError as exc:
        raise ParseError(f"group: {exc}") from None


def _element_id(G, g):
    if isinstance(g, int):
        if not 0 <= g < G.order:
            raise ValidationError(f"element id {g} out of range")
        return g
    if isinstance(g, str):
        if G.perms is None:
            raise ParseError("cycle notation needs a permutation group")
        try:
            p = parse_cycles(g, G.degree)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
        try:
            return G.perms.index(p)
        except ValueError:
            raise ValidationError(f"{g} is not an element of the group") from None
    raise ParseError(f"cannot read group element {g!r}")


def parse_subgroup(G, spec):
    """A list of generators (ids or cycle strings), or {"class": index}."""
    if isinstance(spec, dict):
        if "class" in spec:
            h = spec["class"]
            if not isinstance(h, int) or not 0 <= h < G.subgroup_classes.class_count:
                raise ValidationError(f"class index {h!r} out of range")
            return G.subgroup_classes[h].representative
        spec = _require(spec, "generators", "subgroup")
    if not isinstance(spec, list):
        raise ParseError(f"cannot read subgroup {spec!r}")
    return subgroup_generated(G, [_element_id(G, g) for g in spec])


def _fraction(x):
    try:
        if isinstance(x, (int, str)):
            return Fraction(x)
    except (ValueError, ZeroDivisionError):
        pass
    raise ParseError(f"cannot read rational number {x!r}")


def parse_element(G, spec):
    """Burnside element from its machine form or from {subgroup, coeff} terms."""
    R = burnside_ring(G)
    if not isinstance(spec, list):
        raise ParseError("Burnside element: expected a list of terms")
    total = R.zero
    for term in spec:
        if not isinstance(term, dict):
            raise ParseError(f"Burnside term {term!r} is not an object")
        if "class_index" in term:
            h = term["class_index"]
            if not isinstance(h, int) or not 0 <= h < R.rank:
                raise ValidationError(f"class index {h!r} out of range")
            q = Fraction(_fraction(term.get("numerator", 1)),
                         _fraction(term.get("denominator", 1)))
            total = total + R.basis(h) * q
        else:
            H = parse_subgroup(G, _require(term, "subgroup", "Burnside term"))
            total = total + R.coset(H) * _fraction(term.get("coeff", 1))
    return total


def parse_gset(G, spec):
    if not isinstance(spec, dict):
        raise ParseError("gset: expected an object")
    if spec.get("natural"):
        return natural_gset(G)
    parts = _require(spec, "cosets", "gset")
    X = None
    for part in parts:
        H = parse_subgroup(G, _require(part, "subgroup", "gset.cosets"))
        k = part.get("multiplicity", 1)
        if not isinstance(k, int) or k < 0:
            raise ParseError("gset multiplicity must be a non-negative integer")
        Y = coset_gset(G, H)
        for _ in range(k):
            X = Y if X is None else disjoint_union(X, Y)
    if X is None:
        X = GSetExplicit(G, 0, [[] for _ in G.elements])
    return X


def _int(x, what):
    if not isinstance(x, int) or isinstance(x, bool):
        raise ParseError(f"{what} must be an integer")
    return x


# Tasks
# -----

def _legend(G):
    out = []
    for c in G.subgroup_classes:
        gens = generators_of(G, c.representative)
        out.append({
            "class_index": c.index,
            "name": f"H{c.index}",
            "order": c.order,
            "conjugates": c.size,
            "normalizer_order": c.normalizer_order,
            "generators": [G.element_name(g) for g in gens],
        })
    return out


def _frac_json(q):
    return [q.numerator, q.denominator]


def task_marks(G, payload, N, strict):
    marks = G.marks.marks
    width = max(len(str(x)) for row in marks for x in row)
    lines = ["rows K, columns H: |(G/H)^K|"]
    lines += [" ".join(str(x).rjust(width) for x in row) for row in marks]
    return "\n".join(lines), {"marks": [list(r) for r in marks]}


def task_lambda_series(G, payload, N, strict):
    X = parse_gset(G, _require(payload, "gset", "payload"))
    S = lambda_series(X, N)
    return S.render(), {"series": S.to_json()}


def task_sym_power(G, payload, N, strict):
    X = parse_gset(G, _require(payload, "gset", "payload"))
    k = _int(_require(payload, "k", "payload"), "k")
    if k < 0:
        raise ValidationError("k must be non-negative")
    b = gset_decompose(sym_power_explicit(X, k))
    return b.render(), {"element": b.to_json()}


def task_euler(G, payload, N, strict):
    if "strata" in payload:
        strata = []
        for s in payload["strata"]:
            H = parse_subgroup(G, _require(s, "subgroup", "strata"))
            strata.append(IsotropyStratum(G.subgroup_classes.lookup[H.member_set],
                                          _int(_require(s, "chi", "strata"), "chi")))
        b = euler_from_strata(G, strata)
    elif "cells" in payload:
        cells = [(_int(_require(c, "dim", "cells"), "dim"),
                  parse_element(G, _require(c, "cellset", "cells")))
                 for c in payload["cells"]]
        b = euler_from_cells(G, cells)
    else:
        raise ParseError("euler payload needs 'strata' or 'cells'")
    return b.render(), {"element": b.to_json()}


def _zeta_output(z):
    text = [f"product: {z.product_form()}",
            f"degree: {z.degree.render()}",
            "classical: " + ", ".join(format_fraction(q) for q in z.classical_zeta),
            "series:",
            z.series.render()]
    return "\n".join(text), z.to_json()


def task_zeta_lefschetz(G, payload, N, strict):
    entries = _require(payload, "lefschetz", "payload")
    values = {}
    for e in entries:
        values[_int(_require(e, "m", "lefschetz"), "m")] = \
            parse_element(G, _require(e, "value", "lefschetz"))
    if sorted(values) != list(range(1, len(values) + 1)):
        raise ValidationError("Lefschetz entries must cover m = 1..M without gaps")
    L = LefschetzSequence([values[m] for m in sorted(values)])
    z = zeta_from_lefschetz(L, N)
    text, data = _zeta_output(z)
    S = s_from_lefschetz(L)
    data["s"] = [{"m": m, "value": s.to_json()} for m, s in S.items()]
    return text, data


def task_zeta_acampo(G, payload, N, strict):
    strata = []
    for s in _require(payload, "strata", "payload"):
        strata.append(ResolutionStratum(
            _int(_require(s, "m", "strata"), "m"),
            parse_subgroup(G, _require(s, "H", "strata")),
            parse_subgroup(G, _require(s, "Hhat", "strata")),
            _int(_require(s, "chi", "strata"), "chi")))
    for s in strata:
        if s.m < 1:
            raise ValidationError("stratum multiplicity must be positive")
    z = zeta_acampo(G, strata, N, strict=strict)
    text, data = _zeta_output(z)
    chi = milnor_fibre_euler(G, strata)
    data["milnor_fibre_euler"] = chi.to_json()
    return text + f"\nmilnor fibre euler: {chi.render()}", data


def task_character(G, payload, N, strict):
    b = parse_element(G, _require(payload, "element", "payload"))
    chi = to_permutation_character(b)
    classes = G.conjugacy_classes
    lines = [f"{G.element_name(c[0])} (size {len(c)}): {format_fraction(v)}"
             for c, v in zip(classes, chi)]
    data = {"classes": [{"representative": G.element_name(c[0]), "size": len(c),
                         "value": _frac_json(v)} for c, v in zip(classes, chi)]}
    return "\n".join(lines), data


_HANDLERS = {
    "marks": task_marks,
    "lambda-series": task_lambda_series,
    "sym-power": task_sym_power,
    "euler": task_euler,
    "zeta-lefschetz": task_zeta_lefschetz,
    "zeta-acampo": task_zeta_acampo,
    "character": task_character,
}


def run(job, order=None, strict=None, fmt=None):
    """Run a parsed job document.  Returns (stdout_text, stderr_text, exit_code)."""
    try:
        if not isinstance(job, dict):
            raise ParseError("job document must be an object")
        task = _require(job, "task", "job")
        if task not in _HANDLERS:
            raise ParseError(f"unknown task {task!r}; expected one of {', '.join(TASKS)}")
        N = order if order is not None else job.get("order", DEFAULT_ORDER)
        N = _int(N, "order")
        if not 0 <= N <= MAX_ORDER:
            raise SizeLimitError(f"order must be between 0 and {MAX_ORDER}")
        strict = job.get("strict", True) if strict is None else strict
        fmt = fmt or job.get("format", "text")
        if fmt not in ("text", "structured"):
            raise ParseError(f"unknown format {fmt!r}")
        G = parse_group(_require(job, "group", "job"))
        payload = job.get("payload", {})
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            text, data = _HANDLERS[task](G, payload, N, strict)
        notes = [str(w.message) for w in caught]
    except ParseError as exc:
        return "", f"parse error: {exc}\n", EXIT_PARSE
    except SizeLimitError as exc:
        return "", f"size limit: {exc}\n", EXIT_SIZE
    except EqZetaError as exc:
        diags = getattr(exc, "diagnostics", None) or [str(exc)]
        return "", "".join(f"validation error: {d}\n" for d in diags), EXIT_VALIDATION
    except (ValidationError, ValueError) as exc:
        return "", f"validation error: {exc}\n", EXIT_VALIDATION

    legend = _legend(G)
    if fmt == "structured":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "task": task,
            "group": {"label": G.label, "order": G.order},
            "order": N,
            "legend": legend,
            "result": data,
            "warnings": notes,
        }
        out = json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    else:
        lines = ["LEGEND", f"G = {G.label or 'G'}, order {G.order}"]
        for c in legend:
            lines.append(f"H{c['class_index']}: order {c['order']}, "
                         f"{c['conjugates']} conjugate(s), "
                         f"generated by {' '.join(c['generators']) or '()'}")
        lines += ["", "RESULT", text]
        if notes:
            lines += ["", "WARNINGS"] + notes
        out = "\n".join(lines) + "\n"
    return out, "", EXIT_OK


def main(argv=None):
    ap = argparse.ArgumentParser(prog="eqzeta", description=__doc__.splitlines()[0])
    ap.add_argument("job", help="job document (JSON), or - for stdin")
    ap.add_argument("--order", type=int, help="truncation order, overrides the document")
    ap.add_argument("--strict", dest="strict", action="store_true", default=None,
                    help="reject invalid resolution strata (default)")
    ap.add_argument("--no-strict", dest="strict", action="store_false",
                    help="accept invalid strata with warnings")
    ap.add_argument("--format", choices=("text", "structured"))
    args = ap.parse_args(argv)

    try:
        if args.job == "-":
            raw = sys.stdin.read()
        else:
            with open(args.job, encoding="utf-8") as fh:
                raw = fh.read()
        job = json.loads(raw)
    except (OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return EXIT_PARSE

    out, err, code = run(job, order=args.order, strict=args.strict, fmt=args.format)
    if out:
        sys.stdout.write(out)
    if err:
        sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
