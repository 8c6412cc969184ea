"""Command-line interface.

Every number is printed exactly: ``p/q`` in text and CSV, and
``{"num": "p", "den": "q"}`` in JSON.  Exit status is 0 on success, 1 when
a verification check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import catalog as cat
from .branching import restrict_decompose, verify_isotropy_in_Vbeta
from .roots import (
    FAMILIES,
    build_root_system,
    casimir,
    dot,
    from_fundamental_weight_coords,
    fundamental_weight_coords,
    highest_root,
)
from .spectrum import DEFAULT_MAX_CUTOFF, SearchExhausted, classify_lambda_mu, first_function_eigenvalue
from .weights import RootDatum, verify_gordon_brown, weight_system

FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    pass


def fmt_rat(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rat_json(x) -> dict:
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def parse_rat_json(obj) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))


def fmt_vec(v) -> str:
    return "(" + ", ".join(fmt_rat(c) for c in v) + ")"


def fmt_labels(v) -> str:
    return "[" + ",".join(str(c) for c in v) + "]"


def parse_params(text: str | None) -> dict:
    if not text:
        return {}
    out = {}
    for item in text.split(","):
        key, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"bad parameter {item!r}; expected name=value")
        try:
            out[key.strip()] = int(value)
        except ValueError:
            raise UsageError(f"parameter {key.strip()!r} must be an integer") from None
    return out


def parse_int_list(text: str) -> list[int]:
    text = text.strip().strip("[]")
    try:
        return [int(c) for c in text.split(",")] if text else []
    except ValueError:
        raise UsageError(f"bad weight {text!r}; expected comma-separated integers") from None


def parse_cutoff(text: str) -> Fraction:
    try:
        c = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad cutoff {text!r}") from None
    if c <= 0:
        raise UsageError("cutoff must be positive")
    return c


def _pair(label, params):
    try:
        return cat.instantiate(label, **params)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# --------------------------------------------------------------------------
# commands; each returns (record, exit_status)

def table_rows():
    rows = []
    for e in cat.list_spaces():
        pair = cat.instantiate(e.label)
        iso = cat.isotropy_length_class(pair)
        mu = cat.first_eigenvalue_one_forms(pair)
        expected = e.expected_eigenvalue(**pair.params)
        rows.append(
            {
                "label": e.label,
                "space": e.display_name(**pair.params),
                "params": dict(pair.params),
                "root_lengths": len(pair.G.lengths),
                "isotropy_class": iso,
                "eigenvalue": mu,
                "expected_eigenvalue": expected,
                "expected_formula": e.formula,
                "expected_class": e.expected_length_class(**pair.params),
                "match": mu == expected and iso == e.expected_length_class(**pair.params),
            }
        )
    return rows


def cmd_table(args):
    rows = table_rows()
    return {"command": "table", "inputs": {}, "results": rows, "notes": []}, 0


def cmd_eigenvalue(args):
    params = parse_params(args.params)
    pair = _pair(args.space, params)
    entry = cat.get_entry(args.space)
    inputs = {"space": args.space, "params": dict(pair.params), "which": args.which}
    cutoff = parse_cutoff(args.cutoff) if args.cutoff else DEFAULT_MAX_CUTOFF
    if args.which == "one-forms":
        beta, word = cat.matched_beta(pair)
        mu = casimir(pair.G, beta)
        results = {
            "eigenvalue": mu,
            "beta": list(beta),
            "length_class": cat.isotropy_length_class(pair),
            "weyl_word": list(word),
            "expected": entry.expected_eigenvalue(**pair.params),
        }
        notes = ["value from the classification table"]
    else:
        inputs["cutoff"] = cutoff
        try:
            report = classify_lambda_mu(pair, cutoff)
        except SearchExhausted as exc:
            return {"command": "eigenvalue", "inputs": inputs, "results": {"error": str(exc)}, "notes": []}, 1
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        results = {
            "eigenvalue": report.lam,
            "witness": list(report.lambda_witness),
            "witness_fundamental": list(fundamental_weight_coords(pair.G, report.lambda_witness)),
            "one_form_eigenvalue": report.mu,
            "relation": report.relation,
            "expected_relation": report.expected_relation,
        }
        notes = ["relation from the classification of lambda vs mu"]
        if report.relation != cat.EQUAL:
            notes.append("lambda value derived by search")
        notes.extend(report.notes)
    return {"command": "eigenvalue", "inputs": inputs, "results": results, "notes": notes}, 0


def cmd_branch(args):
    params = parse_params(args.params)
    pair = _pair(args.space, params)
    coords = parse_int_list(args.weight)
    G = pair.G
    try:
        lam = from_fundamental_weight_coords(G, coords)
        dec = restrict_decompose(pair, lam)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    kinfo = pair.datum
    rows = []
    for k, m in dec.constituents:
        rows.append(
            {
                "labels": list(k.labels),
                "central": list(k.central),
                "highest": list(k.highest),
                "multiplicity": m,
                "dimension": kinfo.dimension(kinfo._lab(k.highest)),
            }
        )
    results = {
        "G": G.name,
        "K": pair.K_name,
        "K_simple_roots": [list(t) for t in pair.K_simple_roots],
        "central_directions": [list(z) for z in pair.central_directions],
        "constituents": rows,
        "dimension": sum(r["multiplicity"] * r["dimension"] for r in rows),
    }
    inputs = {"space": args.space, "params": dict(pair.params), "weight": coords}
    return {"command": "branch", "inputs": inputs, "results": results, "notes": []}, 0


def cmd_weights(args):
    try:
        rs = build_root_system(args.type)
        lam = from_fundamental_weight_coords(rs, parse_int_list(args.weight))
        ws = weight_system(rs, lam)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows = [
        {
            "weight": list(w),
            "fundamental": list(fundamental_weight_coords(rs, w)),
            "multiplicity": m,
            "orbit_size": ws.orbit_sizes[w],
        }
        for w, m in ws.dominant.items()
    ]
    results = {"type": rs.name, "dimension": ws.dimension, "casimir": casimir(rs, lam), "dominant_weights": rows}
    return {"command": "weights", "inputs": {"type": rs.name, "weight": list(fundamental_weight_coords(rs, lam))}, "results": results, "notes": []}, 0


IDENTITY_TYPES = (
    [("A", n) for n in range(1, 9)]
    + [("B", n) for n in range(2, 9)]
    + [("C", n) for n in range(2, 9)]
    + [("D", n) for n in range(3, 9)]
    + [("E6", None), ("E7", None), ("E8", None), ("F4", None), ("G2", None)]
)


def identity_checks():
    checks = []
    for fam, rank in IDENTITY_TYPES:
        rs = build_root_system(fam, rank)
        gb = verify_gordon_brown(rs)
        checks.append(_check(f"{rs.name} Gordon Brown", "Gordon Brown identity", gb.ok, f"{fmt_rat(gb.lhs)} = {gb.rhs}"))
        strange = rs.killing_scale * dot(rs.delta, rs.delta)
        checks.append(_check(f"{rs.name} strange formula", "strange formula", strange == Fraction(rs.dim, 24), fmt_rat(strange)))
        c = casimir(rs, highest_root(rs))
        checks.append(_check(f"{rs.name} c(highest long root)", "casimir of the highest root is 1", c == 1, fmt_rat(c)))
        ws = weight_system(rs, highest_root(rs))
        m0 = ws.multiplicity((Fraction(0),) * rs.ambient_dim)
        ok = m0 == rs.rank and ws.dimension == rs.dim
        checks.append(_check(f"{rs.name} adjoint weights", "mult(0) = rank in the adjoint", ok, f"mult(0)={m0}, dim={ws.dimension}"))
        if fam in ("B", "C"):
            n = rs.rank
            want = Fraction(1, 2 * (2 * n - 1)) if fam == "B" else Fraction(1, 4 * (n + 1))
            checks.append(_check(f"{rs.name} Killing scale", "Killing-form scalar product", rs.killing_scale == want, fmt_rat(rs.killing_scale)))
    f4 = build_root_system("F4")
    checks.append(_check("F4 Killing scale", "Killing-form scalar product", f4.killing_scale == Fraction(1, 18), fmt_rat(f4.killing_scale)))
    return checks


def catalog_checks():
    checks = []
    for row in table_rows():
        checks.append(
            _check(
                f"{row['label']} eigenvalue",
                "eigenvalue table",
                row["match"],
                f"{fmt_rat(row['eigenvalue'])} ({row['isotropy_class']}), expected {fmt_rat(row['expected_eigenvalue'])}",
            )
        )
        pair = cat.instantiate(row["label"])
        iso = verify_isotropy_in_Vbeta(pair)
        checks.append(_check(f"{row['label']} isotropy in V(beta)", "isotropy lemma", iso.ok, f"word {fmt_labels(iso.word)}"))
    return checks


def spectrum_checks():
    checks = []
    for e in cat.list_spaces():
        pair = cat.instantiate(e.label)
        r = classify_lambda_mu(pair)
        checks.append(
            _check(
                f"{e.label} lambda vs mu",
                "lambda-mu classification",
                r.agrees,
                f"mu={fmt_rat(r.mu)} lambda={fmt_rat(r.lam)} {r.relation}",
                notes=list(r.notes),
            )
        )
    return checks


def _check(name, anchor, ok, detail, notes=()):
    return {"check": name, "anchor": anchor, "ok": bool(ok), "detail": detail, "notes": list(notes)}


SCOPES = {"identities": identity_checks, "catalog": catalog_checks, "spectrum": spectrum_checks}


def cmd_verify(args):
    scopes = list(SCOPES) if args.scope == "all" else [args.scope]
    checks = [c for s in scopes for c in SCOPES[s]()]
    failed = [c["check"] for c in checks if not c["ok"]]
    results = {"checks": checks, "passed": len(checks) - len(failed), "failed": failed}
    return {"command": "verify", "inputs": {"scope": args.scope}, "results": results, "notes": []}, 1 if failed else 0


# --------------------------------------------------------------------------
# rendering

def to_jsonable(obj):
    if isinstance(obj, Fraction):
        return rat_json(obj)
    if isinstance(obj, dict):
        return {k: to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    return obj


def from_jsonable(obj):
    """Inverse of :func:`to_jsonable` for rationals."""
    if isinstance(obj, dict):
        if set(obj) == {"num", "den"}:
            return parse_rat_json(obj)
        return {k: from_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [from_jsonable(v) for v in obj]
    return obj


def _cell(v):
    if isinstance(v, Fraction):
        return fmt_rat(v)
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, dict):
        return ",".join(f"{k}={_cell(x)}" for k, x in v.items())
    if isinstance(v, (list, tuple)):
        if all(isinstance(c, int) and not isinstance(c, bool) for c in v):
            return fmt_labels(v)
        if all(isinstance(c, Fraction) for c in v):
            return fmt_vec(v)
        return "; ".join(_cell(c) for c in v)
    return str(v)


def _tabular(record):
    res = record["results"]
    cmd = record["command"]
    if cmd in ("table", "list"):
        return res
    if cmd == "branch":
        return res["constituents"]
    if cmd == "weights":
        return res["dominant_weights"]
    if cmd == "verify":
        return res["checks"]
    return [res]


def render(record, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(to_jsonable(record), indent=2) + "\n"
    rows = _tabular(record)
    if fmt == "csv":
        buf = io.StringIO()
        cols = list(rows[0]) if rows else []
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([_cell(r.get(c, "")) for c in cols])
        return buf.getvalue()
    return _render_text(record, rows)


def _render_text(record, rows) -> str:
    cmd = record["command"]
    res = record["results"]
    lines = []
    if cmd == "table":
        head = ("space", "lengths", "isotropy", "eigenvalue", "expected")
        body = [
            (r["space"], str(r["root_lengths"]), r["isotropy_class"], fmt_rat(r["eigenvalue"]), f"{r['expected_formula']} = {fmt_rat(r['expected_eigenvalue'])}")
            for r in rows
        ]
        widths = [max(len(x[i]) for x in [head] + body) for i in range(len(head))]
        for x in [head] + body:
            lines.append("  ".join(c.ljust(wd) for c, wd in zip(x, widths)).rstrip())
    elif cmd == "branch":
        lines.append(f"{res['G']} -> {res['K']}")
        for r in rows:
            central = f" central={fmt_vec(r['central'])}" if r["central"] else ""
            lines.append(f"  {fmt_labels(r['labels'])}{central}: {r['multiplicity']}  (dim {r['dimension']})")
        lines.append(f"total dimension {res['dimension']}")
    elif cmd == "weights":
        lines.append(f"{res['type']} highest weight {fmt_labels(record['inputs']['weight'])}: dimension {res['dimension']}, casimir {fmt_rat(res['casimir'])}")
        for r in rows:
            lines.append(f"  {fmt_labels(r['fundamental'])} {fmt_vec(r['weight'])}: mult {r['multiplicity']}, orbit {r['orbit_size']}")
    elif cmd == "verify":
        for c in rows:
            lines.append(f"{'PASS' if c['ok'] else 'FAIL'}  {c['check']}: {c['detail']}  [{c['anchor']}]")
            for n in c["notes"]:
                lines.append(f"      note: {n}")
        lines.append(f"{res['passed']}/{len(rows)} checks passed")
    else:
        inp = record["inputs"]
        lines.append(f"{inp['space']} {_cell(inp['params'])} {inp['which']}".replace("  ", " "))
        for k, v in res.items():
            lines.append(f"  {k}: {_cell(v)}")
        for n in record["notes"]:
            lines.append(f"  note: {n}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="symspec", description="Exact Lie-theoretic spectra of compact inner symmetric spaces.")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=FORMATS, default="text")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[fmt], help="first eigenvalue on 1-forms for all 16 families")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("eigenvalue", parents=[fmt], help="first eigenvalue of one space")
    p.add_argument("space", help="catalog label, e.g. F4:spin9")
    p.add_argument("--params", help="e.g. p=3,q=0")
    p.add_argument("--which", choices=("one-forms", "functions"), default="one-forms")
    p.add_argument("--cutoff", help="largest Casimir value scanned (rational), default 4")
    p.set_defaults(func=cmd_eigenvalue)

    p = sub.add_parser("branch", parents=[fmt], help="restrict a G-irreducible to K")
    p.add_argument("space")
    p.add_argument("--params")
    p.add_argument("--weight", required=True, help="highest weight in fundamental coordinates, e.g. 0,0,0,1")
    p.set_defaults(func=cmd_branch)

    p = sub.add_parser("weights", parents=[fmt], help="dominant weights of a G-irreducible")
    p.add_argument("type", help=f"root system, one of {', '.join(FAMILIES)} with rank, e.g. B3, F4")
    p.add_argument("--weight", required=True)
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("verify", parents=[fmt], help="run the verification suites")
    p.add_argument("scope", nargs="?", choices=("all",) + tuple(SCOPES), default="all")
    p.set_defaults(func=cmd_verify)

    sub.add_parser("list", parents=[fmt], help="catalog labels").set_defaults(func=cmd_list)
    return ap


def cmd_list(args):
    rows = [
        {"label": e.label, "space": e.name, "params": ",".join(e.param_names), "constraint": e.constraint, "defaults": dict(e.defaults)}
        for e in cat.list_spaces()
    ]
    return {"command": "list", "inputs": {}, "results": rows, "notes": []}, 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        record, status = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))  # exits with status 2
    if record["command"] == "list" and args.format == "text":
        out = "".join(f"{r['label']:<16} {r['space']}  ({r['constraint']})\n" for r in record["results"])
    else:
        out = render(record, args.format)
    sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
