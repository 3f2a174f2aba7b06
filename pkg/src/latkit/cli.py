"""``latkit`` command line: ``info``, ``verify``, ``qtable`` and ``assoc``.

FILE is a JSON or TOML input file, or ``corpus:NAME`` for a bundled example.
Exit codes: 0 ok, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .algebra import IntegralForm, algebra_suite, build_alpha, mutate
from .discat import discat_suite, enumeration_cap, reduce_functor
from .errors import InfiniteGroup, LatkitError, NotAdmissible, ReductionMismatch
from .exact import Phase, frac_str
from .inputs import InputSpec, corpus_names, load_corpus, load_input
from .lattice import DiscriminantForm, EvenLattice, discriminant_group, make_section
from .locmod import locmod_suite
from .report import Window
from .space import admissibility_reason, grading_group, is_coisotropic, is_finite_grading, residual_metric

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
# |D|^3 above this omits the associator table from reports
TABLE_LIMIT = 1 << 18


def _resolve(path: str) -> InputSpec:
    if path.startswith("corpus:"):
        name = path.split(":", 1)[1]
        if name not in corpus_names():
            raise LatkitError(f"unknown corpus entry {name!r}; available: {', '.join(corpus_names())}")
        return load_corpus(name)
    return load_input(path)


def _fr(x) -> str:
    return frac_str(Fraction(x))


def _vec(v) -> list[str]:
    return [_fr(t) for t in v]


def _phase(p: Phase) -> str:
    return _fr(p.t)


def _as_lattice(spec: InputSpec) -> EvenLattice | None:
    sub = spec.subgroup()
    if admissibility_reason(sub) is not None or sub.rank != sub.space.dim:
        return None
    return EvenLattice(sub)


def structure(spec: InputSpec) -> dict:
    """Admissibility, coisotropy, grading group and, for lattices, the discriminant data."""
    sub = spec.subgroup()
    reason = admissibility_reason(sub)
    out: dict = {
        "input": spec.to_dict(),
        "rank": sub.rank,
        "admissible": reason is None,
        "coisotropic": is_coisotropic(sub),
    }
    if reason is not None:
        out["reason"] = reason
        return out
    gg = grading_group(sub)
    out["grading_group"] = {
        "invariant_factors": list(gg.invariant_factors),
        "free_rank": gg.free_rank,
        "finite": is_finite_grading(sub),
    }
    if gg.is_finite:
        out["grading_group"]["order"] = gg.order
    dim, gram = residual_metric(sub)
    out["residual_metric"] = {"dim": dim, "gram": [[_fr(x) for x in r] for r in gram.rows]}
    L = _as_lattice(spec)
    if L is not None:
        D = discriminant_group(L)
        sec = make_section(L, D)
        reps = [_vec(L.to_ambient(v)) for v in sec.values]
        out["lattice"] = {
            "det": L.det,
            "discriminant": {"invariant_factors": list(D.invariant_factors), "order": D.order},
            "simples": {"count": len(reps), "representatives": reps},
        }
        if D.order == 1:
            out["lattice"]["note"] = "1 simple local module"
    return out


def q_table(L: EvenLattice) -> dict:
    form = DiscriminantForm(L)
    sec = form.section
    els = list(form.group.elements())
    rows = [{"element": list(X), "lift": _vec(sec(X)), "ambient": _vec(L.to_ambient(sec(X))), "q": _phase(form.q(X))}
            for X in els]
    b = [[_phase(p) for p in row] for row in form.b_table()]
    return {"invariant_factors": list(form.group.invariant_factors), "rows": rows, "b": b}


def assoc_tables(L: EvenLattice, alpha=None) -> dict:
    R = reduce_functor(L, alpha=alpha)
    G = R.group
    out: dict = {"invariant_factors": list(G.invariant_factors), "associator": R.associator,
                 "section": [_vec(v) for v in R.section.values],
                 "c": [[_phase(p) for p in row] for row in R.c_table()]}
    if G.order**3 <= TABLE_LIMIT:
        els = [list(G.element(i)) for i in range(G.order)]
        nontrivial = []
        for i, m in enumerate(R.a_table()):
            for j, row in enumerate(m):
                for k, p in enumerate(row):
                    if not p.is_one:
                        nontrivial.append({"args": [els[i], els[j], els[k]], "t": _phase(p)})
        out["a_nontrivial"] = nontrivial
    else:
        out["a_omitted"] = f"|D|^3 = {G.order ** 3} exceeds {TABLE_LIMIT}"
    return out


def _window(spec: InputSpec, override: int | None, rank: int):
    r = override if override is not None else spec.window
    return None if r is None else Window.box(rank, r)


def verify(spec: InputSpec, window: int | None = None, seed: int | None = None,
           mutate_alpha: int | None = None) -> dict:
    """Full report: structure plus every verification suite that applies."""
    seed = seed if seed is not None else (spec.seed or 0)
    sub = spec.subgroup()
    reason = admissibility_reason(sub)
    if reason is not None:
        raise NotAdmissible(reason)
    report = structure(spec)
    report["seed"] = seed
    L = _as_lattice(spec)
    form = L if L is not None else IntegralForm(sub)
    W = _window(spec, window, form.rank)
    alpha = build_alpha(form)
    if mutate_alpha is not None:
        alpha = mutate(alpha, mutate_alpha)
        report["mutation"] = {"seed": mutate_alpha, "x0": list(alpha.x0), "y0": list(alpha.y0)}
    suites: dict = {"algebra": [r.to_dict() for r in algebra_suite(form, W, alpha)]}
    if L is None:
        suites["skipped"] = "local modules and reduced category need a nondegenerate full-rank lattice"
    else:
        suites["locmod"] = [r.to_dict() for r in locmod_suite(L, W, alpha)]
        if discriminant_group(L).order <= enumeration_cap():
            try:
                reps, _ = discat_suite(L, seed=seed, alpha=alpha, window=W)
                suites["discat"] = [r.to_dict() for r in reps]
            except ReductionMismatch as exc:
                suites["discat"] = [{"name": "reduce_functor", "passed": False, "error": str(exc)}]
            report["q_table"] = q_table(L)
            report["reduced"] = assoc_tables(L, alpha)
        else:
            suites["discat_skipped"] = f"|D| exceeds the enumeration cap {enumeration_cap()}"
    report["suites"] = suites
    report["passed"] = all(r["passed"] for v in suites.values() if isinstance(v, list) for r in v)
    return report


# --------------------------------------------------------------------------
# rendering


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _md_verify(rep: dict) -> str:
    name = rep["input"]["name"]
    lines = [f"# latkit verify: {name}", "", f"- admissible: {rep['admissible']}",
             f"- coisotropic: {rep['coisotropic']}"]
    gg = rep.get("grading_group")
    if gg:
        lines.append(f"- grading group: factors {gg['invariant_factors']}, free rank {gg['free_rank']}")
    if "lattice" in rep:
        lines.append(f"- simple local modules: {rep['lattice']['simples']['count']}")
    lines += [f"- seed: {rep['seed']}", f"- overall: {'PASS' if rep['passed'] else 'FAIL'}", ""]
    lines += ["| suite | check | result | checked | failures |", "|---|---|---|---|---|"]
    for suite, items in rep["suites"].items():
        if not isinstance(items, list):
            lines.append(f"| {suite} | - | skipped | - | - |")
            continue
        for r in items:
            lines.append(f"| {suite} | {r['name']} | {'pass' if r['passed'] else 'FAIL'} | "
                         f"{r.get('checked', '-')} | {r.get('n_failures', '-')} |")
    witnesses = [(s, r) for s, items in rep["suites"].items() if isinstance(items, list)
                 for r in items if r.get("witnesses")]
    if witnesses:
        lines += ["", "## witnesses", ""]
        for s, r in witnesses:
            lines.append(f"- {s}/{r['name']}: `{json.dumps(r['witnesses'][0], sort_keys=True)}`")
    return "\n".join(lines) + "\n"


def _md_qtable(t: dict) -> str:
    lines = ["| element | lift | q (t for e^{i pi t}) |", "|---|---|---|"]
    for r in t["rows"]:
        lines.append(f"| {tuple(r['element'])} | ({', '.join(r['lift'])}) | {r['q']} |")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# entry point


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="latkit", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"latkit {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("info", help="structure report")
    s.add_argument("file")

    s = sub.add_parser("verify", help="run every verification suite")
    s.add_argument("file")
    s.add_argument("--window", type=int, help="box radius for all sweeps (default: budgeted windows)")
    s.add_argument("--seed", type=int)
    s.add_argument("--out", help="write the report here instead of stdout")
    s.add_argument("--format", choices=("json", "md"), default="json")
    s.add_argument("--mutate-alpha", type=int, metavar="SEED",
                   help="flip one cocycle value (negative control)")

    s = sub.add_parser("qtable", help="discriminant quadratic form table")
    s.add_argument("file")
    s.add_argument("--format", choices=("json", "md"), default="json")

    s = sub.add_parser("assoc", help="reduced associator and braiding tables")
    s.add_argument("file")
    return p


def _lattice_or_raise(spec: InputSpec) -> EvenLattice:
    sub = spec.subgroup()
    reason = admissibility_reason(sub)
    if reason is not None:
        raise NotAdmissible(reason)
    gg = grading_group(sub)
    if gg.free_rank > 0:
        raise InfiniteGroup(f"grading group has free rank {gg.free_rank}")
    L = _as_lattice(spec)
    if L is None:
        raise NotAdmissible("input is not a full-rank lattice")
    return L


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        spec = _resolve(args.file)
        if args.command == "info":
            sys.stdout.write(_dump(structure(spec)))
            return EXIT_OK
        if args.command == "qtable":
            t = q_table(_lattice_or_raise(spec))
            sys.stdout.write(_dump(t) if args.format == "json" else _md_qtable(t))
            return EXIT_OK
        if args.command == "assoc":
            L = _lattice_or_raise(spec)
            if discriminant_group(L).order > enumeration_cap():
                raise LatkitError(f"|D| exceeds the enumeration cap {enumeration_cap()}")
            sys.stdout.write(_dump(assoc_tables(L)))
            return EXIT_OK
        rep = verify(spec, args.window, args.seed, args.mutate_alpha)
        text = _dump(rep) if args.format == "json" else _md_verify(rep)
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
        return EXIT_OK if rep["passed"] else EXIT_FAIL
    except ReductionMismatch as exc:
        print(f"latkit: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except LatkitError as exc:
        print(f"latkit: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
