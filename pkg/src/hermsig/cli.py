"""Command-line front end.

Subcommands:
  sig     signature of one irreducible for one real form
  corpus  sweep presets x small dominant weights, cross-checking the
          formula against both oracles; nonzero exit on any disagreement
  forms   list the built-in real forms

Exit codes: 0 success, 2 bad input, 3 unsupported input, 4 internal
consistency failure, 5 corpus disagreement.  Machine output is JSON with
sorted keys and is byte-for-byte reproducible; timing goes to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .errors import (
    ConsistencyError,
    InputError,
    UnsupportedInput,
)
from .oracle import (
    REP_CAP,
    build_intertwiner,
    build_representation,
    intertwiner_signature,
    weight_trace,
)
from .realform import RealForm, diagram_from_entry, preset_names, resolve_form
from .rootsys import Vector, dominant_weights_up_to
from .signature import SignatureReport, signature

Q = Fraction


# -- small serialization helpers ----------------------------------------


def _vec_strs(v: Vector) -> list[str]:
    return [str(c) for c in v]


def _emit_machine(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")


# -- case specification -------------------------------------------------


def _load_case_file(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read case file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"case file {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError("case file must contain a JSON object")
    allowed = {"group", "weight", "basis", "oracle", "dim_cap"}
    unknown = set(data) - allowed
    if unknown:
        raise InputError(f"unknown case file keys: {sorted(unknown)}")
    return data


def _resolve_group(group) -> RealForm:
    if isinstance(group, str):
        return resolve_form(group)
    if isinstance(group, dict):
        entry = {
            "type": group.get("cartan_type") or group.get("type"),
            "involution": group.get("involution"),
            "painting": group.get("painting", []),
        }
        if not entry["type"]:
            raise InputError("explicit group needs a 'cartan_type'")
        return RealForm(diagram_from_entry(entry))
    raise InputError("group must be a preset name or an explicit diagram object")


def _parse_weight_text(text: str) -> object:
    text = text.strip()
    if text == "adjoint":
        return "adjoint"
    parts = [p.strip() for p in text.replace(",", " ").split()]
    if not parts:
        raise InputError("empty weight")
    try:
        return [int(p) for p in parts]
    except ValueError as exc:
        raise InputError(
            f"weight {text!r} must be 'adjoint' or integers separated by commas"
        ) from exc


def _weight_vector(rf: RealForm, weight, basis: str) -> Vector:
    rs = rf.root_system
    if weight == "adjoint":
        return rs.highest_root()
    if not isinstance(weight, list) or not all(isinstance(c, int) for c in weight):
        raise InputError("weight must be 'adjoint' or a list of integers")
    if len(weight) != rs.rank:
        raise InputError(f"weight needs {rs.rank} coordinates, got {len(weight)}")
    if basis == "fundamental":
        if any(c < 0 for c in weight):
            raise InputError("fundamental-basis weight must have nonnegative coordinates")
        return rs.weight_from_fundamental(weight)
    lam = tuple(Q(c) for c in weight)
    if not rs.is_dominant(lam) or not rs.is_integral(lam):
        raise InputError("simple-root-basis weight is not dominant integral")
    return lam


# -- oracle bridge ------------------------------------------------------


def _oracle_results(
    rf: RealForm, lam: Vector, report: SignatureReport, run: bool, rep_cap: int
) -> dict:
    trace_entry: dict = {"status": "not-applicable", "value": None}
    matrix_entry: dict = {"status": "not-applicable", "value": None}
    if run and report.exists_form:
        if rf.equal_rank:
            value = weight_trace(rf, lam)
            trace_entry = {
                "status": "agree" if value == report.signature else "disagree",
                "value": value,
            }
        if report.dim_v <= rep_cap:
            rep = build_representation(rf.root_system, lam, rep_cap)
            value = intertwiner_signature(build_intertwiner(rep, rf))
            matrix_entry = {
                "status": "agree" if value == report.signature else "disagree",
                "value": value,
            }
    return {"weight_trace": trace_entry, "matrix": matrix_entry}


def _has_disagreement(oracles: dict) -> bool:
    return any(entry["status"] == "disagree" for entry in oracles.values())


# -- sig subcommand -----------------------------------------------------


def _term_rows(rf: RealForm, report: SignatureReport) -> list[dict]:
    rs = rf.root_system
    rows = []
    for term in report.terms:
        rows.append(
            {
                "word": term.element.word_str(),
                "length": len(term.element.word),
                "sign": term.sign,
                "lowering": [int(c) for c in term.lowering],
                "mu_simple_root": _vec_strs(term.mu),
                "mu_fundamental": _vec_strs(rs.fundamental_coords(term.mu)),
                "dim": term.dim,
            }
        )
    return rows


def _sig_document(case_echo: dict, rf: RealForm, lam: Vector,
                  report: SignatureReport, oracles: dict) -> dict:
    rs = rf.root_system
    return {
        "case": case_echo,
        "real_form": rf.describe(),
        "exists_form": report.exists_form,
        "dim_v": report.dim_v,
        "weight_simple_root": _vec_strs(lam),
        "weight_fundamental": _vec_strs(rs.fundamental_coords(lam)),
        "terms": _term_rows(rf, report),
        "signed_sum": report.signed_sum if report.exists_form else None,
        "divisor": report.divisor,
        "signature": report.signature,
        "inertia": list(report.inertia) if report.inertia is not None else None,
        "oracles": oracles,
    }


def _print_sig_human(doc: dict) -> None:
    rf = doc["real_form"]
    out = sys.stdout
    name = rf["name"] or "(explicit diagram)"
    out.write(f"group          {name}  [{rf['cartan_type']}, "
              f"involution {rf['involution']}, painting {rf['painting']}]\n")
    dims = rf["dims"]
    out.write(f"dims           g={dims['g']} k={dims['k']} s={dims['s']} "
              f"t={dims['t']} a={dims['a']}   r={rf['r']}   "
              f"{'equal rank' if rf['equal_rank'] else 'unequal rank'}\n")
    out.write(f"weight         simple-root {doc['weight_simple_root']}  "
              f"fundamental {doc['weight_fundamental']}\n")
    out.write(f"dim V          {doc['dim_v']}\n")
    out.write(f"form exists    {'yes' if doc['exists_form'] else 'no'}\n")
    if doc["exists_form"]:
        out.write("terms:\n")
        out.write("  word            sign  dim    mu (simple-root)"
                  "            mu (fundamental)\n")
        for row in doc["terms"]:
            sign = "+" if row["sign"] > 0 else "-"
            out.write(f"  {row['word']:<15} {sign:<5} {row['dim']:<6} "
                      f"{str(row['mu_simple_root']):<27} "
                      f"{str(row['mu_fundamental'])}\n")
        out.write(f"signed sum     {doc['signed_sum']}\n")
        out.write(f"divisor        {doc['divisor']}\n")
        out.write(f"signature      {doc['signature']}\n")
        p, q = doc["inertia"]
        out.write(f"inertia        ({p}, {q})\n")
    out.write("oracles:\n")
    for key in ("weight_trace", "matrix"):
        entry = doc["oracles"][key]
        value = "-" if entry["value"] is None else str(entry["value"])
        out.write(f"  {key:<13} {entry['status']:<15} {value}\n")


def _cmd_sig(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    case = _load_case_file(args.case) if args.case else {}
    if args.group is not None:
        case["group"] = args.group
    if args.weight is not None:
        case["weight"] = _parse_weight_text(args.weight)
    if args.basis is not None:
        case["basis"] = args.basis
    if args.oracle is not None:
        case["oracle"] = args.oracle
    if args.dim_cap is not None:
        case["dim_cap"] = args.dim_cap
    if "group" not in case:
        raise InputError("no group given (use --group or a case file)")
    if "weight" not in case:
        raise InputError("no weight given (use --weight or a case file)")
    case.setdefault("basis", "fundamental")
    case.setdefault("oracle", True)
    case.setdefault("dim_cap", REP_CAP)
    if case["basis"] not in ("fundamental", "simple-root"):
        raise InputError(f"unknown basis {case['basis']!r}")
    if not isinstance(case["dim_cap"], int) or case["dim_cap"] < 1:
        raise InputError("dim_cap must be a positive integer")

    rf = _resolve_group(case["group"])
    lam = _weight_vector(rf, case["weight"], case["basis"])
    report = signature(rf, lam)
    oracles = _oracle_results(rf, lam, report, case["oracle"], case["dim_cap"])
    doc = _sig_document(case, rf, lam, report, oracles)
    if args.format == "machine":
        _emit_machine(doc)
    else:
        _print_sig_human(doc)
    sys.stderr.write(f"elapsed {time.perf_counter() - start:.3f}s\n")
    return 4 if _has_disagreement(oracles) else 0


# -- corpus subcommand --------------------------------------------------


def _family_matches(type_str: str, family: str | None) -> bool:
    if family is None:
        return True
    components = type_str.split("+")
    if type_str == family:
        return True
    return all(c.startswith(family) for c in components)


def _corpus_groups(rank_cap: int, family: str | None) -> list[tuple[str, list[str]]]:
    """Presets passing the filters, grouped by Cartan type so each
    representation is built once and shared."""
    by_type: dict[str, list[str]] = {}
    for name in preset_names():
        rf = resolve_form(name)
        if rf.root_system.rank > rank_cap:
            continue
        if not _family_matches(str(rf.diagram.cartan_type), family):
            continue
        by_type.setdefault(str(rf.diagram.cartan_type), []).append(name)
    return sorted(by_type.items())


def _corpus_type_cases(task: tuple[str, list[str], int, int]) -> list[dict]:
    type_str, names, dim_cap, rep_cap = task
    forms = {name: resolve_form(name) for name in names}
    rs = forms[names[0]].root_system
    rows: list[dict] = []
    for coeffs, lam, dim in dominant_weights_up_to(rs, dim_cap):
        rep = None
        for name in names:
            rf = forms[name]
            report = signature(rf, lam)
            trace_entry: dict = {"status": "not-applicable", "value": None}
            matrix_entry: dict = {"status": "not-applicable", "value": None}
            if report.exists_form:
                if rf.equal_rank:
                    value = weight_trace(rf, lam)
                    trace_entry = {
                        "status": "agree" if value == report.signature else "disagree",
                        "value": value,
                    }
                if dim <= rep_cap:
                    if rep is None:
                        rep = build_representation(rs, lam, rep_cap)
                    value = intertwiner_signature(build_intertwiner(rep, rf))
                    matrix_entry = {
                        "status": "agree" if value == report.signature else "disagree",
                        "value": value,
                    }
            rows.append(
                {
                    "group": name,
                    "cartan_type": type_str,
                    "weight_fundamental": list(coeffs),
                    "dim_v": dim,
                    "exists_form": report.exists_form,
                    "signature": report.signature,
                    "weight_trace": trace_entry,
                    "matrix": matrix_entry,
                }
            )
    rows.sort(key=lambda r: (r["group"], r["weight_fundamental"]))
    return rows


def _cmd_corpus(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    if args.dim_cap < 1:
        raise InputError("dim_cap must be a positive integer")
    if args.jobs < 1:
        raise InputError("jobs must be a positive integer")
    groups = _corpus_groups(args.rank_cap, args.family)
    tasks = [(t, names, args.dim_cap, min(args.dim_cap, REP_CAP))
             for t, names in groups]
    if args.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_corpus_type_cases, tasks))
    else:
        results = [_corpus_type_cases(task) for task in tasks]
    cases: list[dict] = []
    for rows in results:
        cases.extend(rows)
    cases.sort(key=lambda r: (r["group"], r["weight_fundamental"]))

    def _count(key: str, status: str) -> int:
        return sum(1 for c in cases if c[key]["status"] == status)

    summary = {
        "cases": len(cases),
        "weight_trace": {s: _count("weight_trace", s)
                         for s in ("agree", "disagree", "not-applicable")},
        "matrix": {s: _count("matrix", s)
                   for s in ("agree", "disagree", "not-applicable")},
    }
    disagreements = [c for c in cases
                     if c["weight_trace"]["status"] == "disagree"
                     or c["matrix"]["status"] == "disagree"]
    if args.format == "machine":
        _emit_machine({"cases": cases, "summary": summary})
    else:
        out = sys.stdout
        out.write(f"cases          {summary['cases']}\n")
        for key in ("weight_trace", "matrix"):
            s = summary[key]
            out.write(f"{key:<14} agree {s['agree']}  disagree {s['disagree']}  "
                      f"not-applicable {s['not-applicable']}\n")
        for c in disagreements:
            out.write(f"DISAGREE {c['group']} weight {c['weight_fundamental']}: "
                      f"formula {c['signature']}, "
                      f"weight-trace {c['weight_trace']['value']}, "
                      f"matrix {c['matrix']['value']}\n")
    sys.stderr.write(f"elapsed {time.perf_counter() - start:.3f}s\n")
    return 5 if disagreements else 0


# -- forms subcommand ---------------------------------------------------


def _cmd_forms(args: argparse.Namespace) -> int:
    docs = [resolve_form(name).describe() for name in preset_names()]
    if args.format == "machine":
        _emit_machine({"forms": docs})
    else:
        out = sys.stdout
        out.write(f"{'name':<12} {'type':<8} {'involution':<14} {'painting':<10} "
                  f"{'dim k':<6} {'dim s':<6} rank-equal\n")
        for d in docs:
            out.write(f"{d['name']:<12} {d['cartan_type']:<8} "
                      f"{str(d['involution']):<14} {str(d['painting']):<10} "
                      f"{d['dims']['k']:<6} {d['dims']['s']:<6} "
                      f"{'yes' if d['equal_rank'] else 'no'}\n")
        out.write("plus compact(<type>) for any type, e.g. compact(A2)\n")
    return 0


# -- entry point --------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hermsig",
        description="Exact signatures of invariant hermitian forms on "
        "irreducible representations of real reductive Lie groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sig = sub.add_parser("sig", help="signature of a single irreducible")
    p_sig.add_argument("--case", help="JSON case file; flags override its values")
    p_sig.add_argument("--group", help="preset name or compact(<type>)")
    p_sig.add_argument("--weight",
                       help="'adjoint' or comma-separated integer coordinates")
    p_sig.add_argument("--basis", choices=("fundamental", "simple-root"),
                       help="basis for --weight coordinates (default fundamental)")
    p_sig.add_argument("--oracle", action=argparse.BooleanOptionalAction,
                       help="run the brute-force cross-checks (default on)")
    p_sig.add_argument("--dim-cap", type=int, dest="dim_cap",
                       help=f"matrix-oracle dimension cap (default {REP_CAP})")
    p_sig.add_argument("--format", choices=("human", "machine"), default="human")
    p_sig.set_defaults(func=_cmd_sig)

    p_corpus = sub.add_parser("corpus", help="formula-vs-oracle verification sweep")
    p_corpus.add_argument("--rank-cap", type=int, default=3, dest="rank_cap")
    p_corpus.add_argument("--family",
                          help="restrict to one family (e.g. A) or type (e.g. A3)")
    p_corpus.add_argument("--dim-cap", type=int, default=REP_CAP, dest="dim_cap",
                          help=f"max representation dimension (default {REP_CAP})")
    p_corpus.add_argument("--jobs", type=int, default=1,
                          help="worker processes (default 1)")
    p_corpus.add_argument("--format", choices=("human", "machine"), default="human")
    p_corpus.set_defaults(func=_cmd_corpus)

    p_forms = sub.add_parser("forms", help="list built-in real forms")
    p_forms.add_argument("--format", choices=("human", "machine"), default="human")
    p_forms.set_defaults(func=_cmd_forms)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except UnsupportedInput as exc:
        sys.stderr.write(f"unsupported: {exc}\n")
        return 3
    except ConsistencyError as exc:
        sys.stderr.write(f"internal consistency failure: {exc}\n")
        return 4


def main(argv: list[str] | None = None) -> None:
    raise SystemExit(run(argv))


if __name__ == "__main__":
    main()
