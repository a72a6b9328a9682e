"""Command-line front end.

Every subcommand reads a preset (``--preset``) or a JSON input document
(``--input``), runs one computation and prints text, JSON or CSV.  JSON
output has the keys request, results, provenance and warnings; it embeds the
full input document, so it can be passed back through ``--input``.

Exit status: 2 for unreadable input or bad parameters, 3 for data that fails
validation, 4 when a computation bound is exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import warnings
from collections import Counter
from fractions import Fraction

from .algebra import CyclotomicNumber, TruncatedSeries
from .errors import (BoundExceeded, ConventionError, HilbAutError, InputError,
                     NonIntegralError, SpecValidationError)
from .fixed_points import enumerate_fixed_components
from .fock import (DEGREE_MODES, FockTraceOptions, betti_numbers, degree_modes_differ,
                   enumerate_basis, entropy, fock_trace_series, induced_spectral_radius,
                   lefschetz_number, poincare_series)
from .hodge import (HodgeRow, HodgeTable, aut_dimension, coefficient_status,
                    conjectural_hodge_series, h_top_minus_one, hodge_grid, hodge_p0_series)
from .surface import (PRESETS, dump_document, load_document, preset, root_exponent,
                      validate, validate_datum)

SUBCOMMANDS = ("lefschetz", "trace-series", "poincare", "hodge", "aut-dim", "conjecture",
               "fixed-points", "spectrum", "entropy")

LOCAL_TYPE_FLAG = ("local eigenvalue types at the isolated fixed points are part of the input; "
                   "presets use (zeta_p, zeta_p^-1) at every point")
BINOMIAL_FLAG = ("h^{2n-1,0} is read as h10 * C(h20 + n - 2, n - 1), the value forced by "
                 "expanding the generating function")
DEGREE_FLAG = ("degree mode 'shifted' gives q_m(u) degree 2(m-1) + deg u; 'paper-literal' keeps "
               "deg u only; both agree at t = -1")


# --- scalar rendering ---------------------------------------------------------

def _rational(r) -> int | str:
    r = Fraction(r)
    return r.numerator if r.denominator == 1 else str(r)


def render_scalar(c):
    """JSON form: plain int/"p/q" for rationals, otherwise exact terms
    [coefficient, k, m] (meaning coefficient * e^{2 pi i k/m}) plus a float
    approximation [re, im]."""
    if isinstance(c, complex):
        return {"approx": [c.real, c.imag]}
    if isinstance(c, float):
        return {"approx": [c, 0.0]}
    if isinstance(c, CyclotomicNumber):
        r = c.as_rational()
        if r is not None:
            return _rational(r)
        z = complex(c)
        return {"exact": [[_rational(a), k, m] for a, k, m in c.terms()],
                "approx": [round(z.real, 12), round(z.imag, 12)]}
    return _rational(c)


def scalar_text(c) -> str:
    if isinstance(c, complex):
        return f"{c.real:.12g}{c.imag:+.12g}i"
    if isinstance(c, CyclotomicNumber):
        if c.is_rational():
            return str(c.as_rational())
        ke = root_exponent(c)
        if ke is not None:
            return f"e({ke[0]}/{ke[1]})"
        return str(c)
    return str(c)


def _weight_text(w) -> str:
    if isinstance(w, CyclotomicNumber):
        ke = root_exponent(w)
        if ke is not None:
            return "1" if ke[0] == 0 else f"e({ke[0]}/{ke[1]})"
    return scalar_text(w)


def _poly_terms(s: TruncatedSeries, var: str = "t") -> list[tuple[int, object]]:
    i = s.variables.index(var)
    return [(e[i], c) for e, c in s.items()]


def _poly_text(s: TruncatedSeries, var: str = "t") -> str:
    parts = []
    for k, c in _poly_terms(s, var):
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        cs = scalar_text(c)
        if not mono:
            parts.append(cs)
        elif cs == "1":
            parts.append(mono)
        else:
            parts.append(f"({cs})*{mono}" if " " in cs else f"{cs}*{mono}")
    return " + ".join(parts) if parts else "0"


# --- subcommands ----------------------------------------------------------------
# each returns (results, csv_rows, text)

def cmd_lefschetz(spec, datum, args, ctx):
    value = lefschetz_number(spec, args.n)
    results = {"n": args.n, "lefschetz": value}
    ref = datum.reference_counts.get(args.n)
    if ref is not None:
        results["reference_isolated_count"] = ref
    return results, [{"n": args.n, "lefschetz": value}], str(value)


def cmd_trace_series(spec, datum, args, ctx):
    nmax = args.max_weight
    evaluate = args.evaluate_t
    opt = FockTraceOptions(nmax, args.degree_mode, evaluate)
    series = fock_trace_series(spec, opt)
    rows, coeffs, lines = [], [], []
    for n in range(nmax + 1):
        if evaluate is None:
            c = series.extract("q", n)
            terms = _poly_terms(c)
            coeffs.append({"n": n, "terms": [[k, render_scalar(v)] for k, v in terms]})
            rows += [{"n": n, "t_exponent": k, "coefficient": scalar_text(v)} for k, v in terms]
            lines.append(f"q^{n}: {_poly_text(c)}")
        else:
            v = series.coefficient(q=n)
            coeffs.append({"n": n, "value": render_scalar(v)})
            rows.append({"n": n, "t_exponent": "", "coefficient": scalar_text(v)})
            lines.append(f"q^{n}: {scalar_text(v)}")
    if spec.finite and evaluate is None:
        differing = [n for n in range(2, nmax + 1) if degree_modes_differ(spec, n)]
        if differing:
            ctx["warnings"].append("degree modes give different t-polynomials at weights "
                                   + ", ".join(map(str, differing)) + f"; shown: {args.degree_mode}")
    ctx["provenance"].append(DEGREE_FLAG)
    results = {"max_weight": nmax, "degree_mode": args.degree_mode,
               "evaluate_t": None if evaluate is None else _rational(evaluate), "coefficients": coeffs}
    return results, rows, "\n".join(lines)


def cmd_poincare(spec, datum, args, ctx):
    surface = spec.surface
    s = poincare_series(surface, args.n)
    polys, rows, lines = [], [], []
    for n in range(args.n + 1):
        b = betti_numbers(surface, n) if n else [1]
        polys.append({"n": n, "betti": b})
        rows += [{"n": n, "degree": k, "betti": v} for k, v in enumerate(b)]
        lines.append(f"q^{n}: {_poly_text(s.extract('q', n))}")
    return {"surface": surface.name, "series": polys}, rows, "\n".join(lines)


def _row(spec, label):
    rows = spec.surface.hodge_rows
    if label not in rows:
        raise InputError(f"no Hodge row labelled {label!r} (have {sorted(rows)})", field="surface.hodge_row")
    return HodgeRow(*rows[label])


def cmd_hodge(spec, datum, args, ctx):
    row = _row(spec, args.label)
    s = hodge_p0_series(row, args.n)
    out, rows, lines = [], [], []
    for n in range(args.n + 1):
        h = [s.coefficient(t=n, x=p) for p in range(2 * n + 1)]
        top = h_top_minus_one(row, n) if n else None
        out.append({"n": n, "h_p0": h, "h_top_minus_one": top})
        rows += [{"n": n, "p": p, "h_p0": v} for p, v in enumerate(h)]
        lines.append(f"n={n}: h^(p,0) = {h}" + (f"; h^(2n-1,0) = {top}" if n else ""))
    ctx["provenance"].append(BINOMIAL_FLAG)
    return {"label": args.label, "row": list(row), "values": out}, rows, "\n".join(lines)


def cmd_aut_dim(spec, datum, args, ctx):
    row = _row(spec, "canonical-dual")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        value = aut_dimension(row, args.n)
    ctx["warnings"] += [str(w.message) for w in caught]
    ctx["provenance"].append(BINOMIAL_FLAG)
    return {"n": args.n, "row": list(row), "aut_dimension": value}, [{"n": args.n, "aut_dimension": value}], str(value)


def cmd_conjecture(spec, datum, args, ctx):
    tables = spec.surface.hodge_tables
    if args.label not in tables:
        raise InputError(f"no Hodge table labelled {args.label!r} (have {sorted(tables)})",
                         field="surface.hodge_table")
    table = HodgeTable(tables[args.label], untwisted=args.label == "trivial")
    s = conjectural_hodge_series(table, args.n)
    grid = hodge_grid(s, args.n)
    rows = [{"n": args.n, "p": p, "q": q, "h": v, "status": coefficient_status(table, q)}
            for p, r in enumerate(grid) for q, v in enumerate(r)]
    status = sorted({r["status"] for r in rows})
    lines = [" ".join(f"{v:>5}" for v in r) for r in grid]
    lines.append("status: " + ", ".join(status))
    return {"n": args.n, "label": args.label, "grid": grid, "status": status}, rows, "\n".join(lines)


def cmd_fixed_points(spec, datum, args, ctx):
    report = enumerate_fixed_components(datum, args.n, spec)
    ctx["warnings"] += list(report.notes)
    comps, rows = [], []
    for c in report.components:
        weights = [_weight_text(w) for w in c.weights] if c.weights is not None else None
        entry = {"kind": c.kind, "description": c.description, "length": c.length,
                 "dimension": c.dimension, "degenerate": c.degenerate,
                 "fixed_subspace_dim": c.fixed_subspace_dim, "weights": weights}
        comps.append(entry)
        rows.append({**entry, "weights": " ".join(weights) if weights else ""})
    x = report.crosscheck
    check = {"lefschetz": x.lefschetz, "isolated_nondegenerate": x.isolated_nondegenerate,
             "declared_remainder": x.declared_remainder, "enumerated_total": x.enumerated_total,
             "remainder": x.remainder, "status": x.status, "reference_count": x.reference,
             "reference_agrees": x.reference_agrees}
    results = {"n": args.n, "isolated_nondegenerate_count": report.isolated_nondegenerate_count,
               "counts_by_kind": dict(sorted(report.count_by_kind().items())),
               "crosscheck": check, "components": comps}
    lines = [f"n = {args.n}"]
    for kind, k in sorted(report.count_by_kind().items()):
        lines.append(f"  {kind}: {k}")
    lines.append(f"isolated nondegenerate: {report.isolated_nondegenerate_count}")
    lines.append(f"Lefschetz number: {x.lefschetz}")
    if x.declared_remainder is not None:
        lines.append(f"declared positive-dimensional remainder: {x.declared_remainder}")
    lines.append(f"crosscheck: {x.status} (enumerated {x.enumerated_total}, remainder {x.remainder})")
    if x.reference is not None:
        lines.append(f"published count: {x.reference}" + ("" if x.reference_agrees else " (DISCREPANCY)"))
    if args.verbose:
        lines += [f"  [{c['kind']}] dim={c['dimension']} {c['description']}" for c in comps]
    return results, rows, "\n".join(lines)


def cmd_spectrum(spec, datum, args, ctx):
    basis = enumerate_basis(spec, args.n)
    counts = Counter((deg, lam) for _, lam, deg in basis)
    groups = sorted(counts.items(), key=lambda kv: (kv[0][0], scalar_text(kv[0][1])))
    entries = [{"degree": d, "eigenvalue": render_scalar(lam), "multiplicity": k}
               for (d, lam), k in groups]
    rows = [{"degree": d, "eigenvalue": scalar_text(lam), "multiplicity": k} for (d, lam), k in groups]
    lines = [f"H^{d}: {scalar_text(lam)} x{k}" for (d, lam), k in groups]
    lines.append(f"basis size: {len(basis)}")
    return {"n": args.n, "basis_size": len(basis), "eigenvalues": entries}, rows, "\n".join(lines)


def cmd_entropy(spec, datum, args, ctx):
    r1 = induced_spectral_radius(spec, 1)
    rn = induced_spectral_radius(spec, args.n)
    ent = entropy(spec, args.n)
    results = {"n": args.n, "spectral_radius": rn, "spectral_radius_surface": r1,
               "entropy": ent, "entropy_surface": math.log(r1)}
    text = f"spectral radius {rn:.12g} (surface {r1:.12g}); entropy {ent:.12g}"
    return results, [results], text


HANDLERS = {
    "lefschetz": cmd_lefschetz,
    "trace-series": cmd_trace_series,
    "poincare": cmd_poincare,
    "hodge": cmd_hodge,
    "aut-dim": cmd_aut_dim,
    "conjecture": cmd_conjecture,
    "fixed-points": cmd_fixed_points,
    "spectrum": cmd_spectrum,
    "entropy": cmd_entropy,
}


# --- argument handling --------------------------------------------------------------

def _t_value(text: str):
    if text.lower() == "none":
        return None
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return Fraction(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hilbaut", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in SUBCOMMANDS:
        p = sub.add_parser(name)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--preset", choices=sorted(PRESETS))
        src.add_argument("--input", metavar="PATH", help="JSON input document ('-' for stdin)")
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        if name == "trace-series":
            p.add_argument("--max-weight", type=_nonneg, default=4)
            p.add_argument("--degree-mode", choices=DEGREE_MODES, default="shifted")
            p.add_argument("--evaluate-t", type=_t_value, default=None,
                           help="substitute a rational value for t (e.g. -1)")
        else:
            default_n = {"poincare": 3, "hodge": 3, "conjecture": 2}.get(name, 2)
            p.add_argument("--n", type=_nonneg, default=default_n)
        if name in ("hodge", "conjecture"):
            p.add_argument("--label", default="trivial", help="which twist L to use")
        if name == "fixed-points":
            p.add_argument("--verbose", action="store_true", help="list every component in text output")
    return parser


def _request_record(args, doc) -> dict:
    options = {k: v for k, v in sorted(vars(args).items())
               if k not in ("command", "preset", "input", "format")}
    options = {k: (str(v) if isinstance(v, Fraction) else v) for k, v in options.items()}
    return {"subcommand": args.command, "preset": args.preset, "options": options, "input": doc}


def _read_input(args):
    if args.preset:
        return preset(args.preset), {"preset": args.preset}
    try:
        if args.input == "-":
            raw = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                raw = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read input: {exc.strerror}", field="input") from None
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON at line {exc.lineno}: {exc.msg}", field="input") from None
    return load_document(doc), doc


def _render_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    fields = list(rows[0])
    for r in rows[1:]:
        fields += [k for k in r if k not in fields]
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: ("" if v is None else v) for k, v in r.items()})
    return buf.getvalue()


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    ctx = {"warnings": [], "provenance": []}
    try:
        (spec, datum), doc = _read_input(args)
        violations = validate(spec)
        if violations:
            raise SpecValidationError(violations)
        if spec.finite:
            dviol, dwarn = validate_datum(datum, spec)
            if dviol:
                raise SpecValidationError(dviol)
            ctx["warnings"] += dwarn
        if args.preset or "preset" in doc:
            ctx["provenance"].append(f"preset data: {args.preset or doc['preset']}")
        if datum.notes and args.command in ("fixed-points", "lefschetz"):
            ctx["provenance"].append(LOCAL_TYPE_FLAG)
        results, rows, text = HANDLERS[args.command](spec, datum, args, ctx)
    except InputError as exc:
        print(f"hilbaut: input error: {exc}", file=stderr)
        return 2
    except (SpecValidationError, NonIntegralError) as exc:
        print(f"hilbaut: validation failed: {exc}", file=stderr)
        return 3
    except BoundExceeded as exc:
        print(f"hilbaut: bound exceeded: {exc}", file=stderr)
        return 4
    except ConventionError as exc:
        print(f"hilbaut: internal convention mismatch: {exc}", file=stderr)
        return 1
    except HilbAutError as exc:
        print(f"hilbaut: {exc}", file=stderr)
        return 1

    if args.format == "json":
        full_doc = dump_document(spec, datum)
        out = {"request": _request_record(args, full_doc), "results": results,
               "provenance": ctx["provenance"], "warnings": ctx["warnings"]}
        stdout.write(json.dumps(out, sort_keys=True, indent=2) + "\n")
    elif args.format == "csv":
        stdout.write(_render_csv(rows))
    else:
        stdout.write(text + "\n")
        for w in ctx["warnings"]:
            print(f"warning: {w}", file=stderr)
    return 0


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
