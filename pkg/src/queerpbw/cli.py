"""Command-line front end: normalize, act, roots, pbw-dim, verify, complete."""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction

from . import __version__
from . import classical, quantum
from . import superalg as sa
from .parser import ParseError, parse_expression
from .report import Report, summary
from .rewrite import property_failures
from .scalars import Scalar
from .weyl import beta_sequence, is_reduced, parse_word, sigma_word

VERBS = ("normalize", "act", "roots", "pbw-dim", "verify", "complete")
FORMATS = ("text", "json", "latex")
ENGINES = {"quantum": quantum, "classical": classical}


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- suites

def _rewriting_suite(engine: str, n: int, D, seed: int, samples: int = 1000) -> list[Report]:
    mod = ENGINES[engine]
    s = mod.system(n, D)
    rng = random.Random(seed)
    letters = sorted(mod.generator_letters(n)) if engine == "quantum" else mod.letters(n)
    if engine == "quantum":
        coeff = lambda r: Scalar.laurent({r.randint(-2, 2): r.choice((-2, -1, 1, 2))})
    else:
        coeff = lambda r: Fraction(r.choice((-3, -1, 1, 2)), r.choice((1, 2, 3)))
    counts: dict = {}
    witness = None
    for _ in range(samples):
        x = sa.random_element(rng, letters, coeff)
        y = sa.random_element(rng, letters, coeff)
        bad = property_failures(s, x, y, coeff(rng), coeff(rng), n - 1)
        for name in bad:
            counts[name] = counts.get(name, 0) + 1
        if bad and witness is None:
            witness = (x, y)
    anchor = "Rewriting engine properties"
    idx = {"engine": engine, "n": n, "samples": samples, "seed": seed}
    if counts:
        return [Report("rewrite.properties", anchor, idx, "fail", witness, data=counts)]
    return [Report("rewrite.properties", anchor, idx, "pass")]


def completion_report(engine: str, n: int, D=None) -> Report:
    mod = ENGINES[engine]
    D = mod.default_degree(n) if D is None else D
    s = mod.system(n, D)
    bad = s.certify(D)
    data = {"degree": D, "rules": len(s.rules), "overlaps_tested": s.overlaps_tested,
            "overlaps_deferred": s.overlaps_deferred, "unresolved": len(bad)}
    idx = {"engine": engine, "n": n}
    if bad:
        return Report("rewrite.completion", "Bounded completion", idx, "fail",
                      [sa.to_text(sa.Element.word(w)) for w in bad[:5]], data=data)
    return Report("rewrite.completion", "Bounded completion", idx, "pass", data=data)


def _pbw(engine, n, D, _seed):
    if engine == "quantum":
        return quantum.pbw_basis_check(n, 4 if n == 2 else 3)
    return classical.pbw_check(n, 4 if n == 2 else 3)


def _cor_rv(engine, n, D, _seed):
    if engine == "quantum":
        return quantum.verify_cor_rv(n, D)
    return classical.verify_nested_bracket_forms(n, D)


# name -> (quantum runner, classical runner); each takes (engine, n, D, seed)
SUITES = {
    "braid": (lambda e, n, D, _: quantum.verify_braid_relations(n, D),
              lambda e, n, D, _: classical.verify_braid_relations(n, D)),
    "well-defined": (lambda e, n, D, _: quantum.verify_well_defined(n, D),
                     lambda e, n, D, _: classical.verify_well_defined(n, D)),
    "automorphism": (lambda e, n, D, _: quantum.verify_automorphism(n, D),
                     lambda e, n, D, _: classical.verify_automorphism(n, D)),
    "inverses": (lambda e, n, D, _: quantum.verify_inverses(n, D),
                 lambda e, n, D, _: classical.verify_inverses(n, D)),
    "printed-inverses": (lambda e, n, D, _: quantum.verify_inverses(n, D, printed=True),
                         lambda e, n, D, _: classical.verify_inverses(n, D, printed=True)),
    "omega": (lambda e, n, D, _: quantum.verify_omega(n, D),
              lambda e, n, D, _: classical.verify_omega(n, D)),
    "examples": (lambda e, n, D, _: quantum.verify_example_tables(D),
                 lambda e, n, D, _: classical.verify_example_tables(D)),
    "cor-rv": (_cor_rv, _cor_rv),
    "pbw": (_pbw, _pbw),
    "weights": (lambda e, n, D, _: quantum.verify_weights(n), None),
    "lemma": (lambda e, n, D, _: quantum.verify_lemma_identities(n, D), None),
    "prop5": (lambda e, n, D, _: quantum.verify_prop5(n, D=D), None),
    "br-relation2": (lambda e, n, D, _: quantum.verify_br_relation2(n, D), None),
    "reduced-words": (lambda e, n, D, _: quantum.verify_reduced_words(n, D), None),
    "open-question": (lambda e, n, D, _: quantum.open_question_experiment(n), None),
    "note2": (None, lambda e, n, D, _: classical.verify_classicalnote2(n, D)),
    "cor1": (None, lambda e, n, D, _: classical.verify_cor_classical_1(n, D)),
    "commutation": (None, lambda e, n, D, _: classical.verify_commutation_table(n, D)),
    "sign": (None, lambda e, n, D, _: classical.verify_sign_theorem(n, D)),
    "zform": (None, lambda e, n, D, _: classical.zform_spot_checks(n)),
    "rewriting": (lambda e, n, D, seed: _rewriting_suite(e, n, D, seed),
                  lambda e, n, D, seed: _rewriting_suite(e, n, D, seed)),
    "completion": (lambda e, n, D, _: [completion_report(e, n, D)],
                   lambda e, n, D, _: [completion_report(e, n, D)]),
}


def run_suite(name: str, engine: str, n: int, D=None, seed: int = 0) -> list[Report]:
    if name not in SUITES:
        raise UsageError(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}")
    fn = SUITES[name][0 if engine == "quantum" else 1]
    if fn is None:
        raise UsageError(f"suite {name!r} is not available for the {engine} engine")
    return fn(engine, n, D, seed)


# ---------------------------------------------------------------- commands

def _parse(args) -> sa.Element:
    if args.expr is None:
        raise UsageError(f"{args.verb} needs an expression")
    return parse_expression(args.expr, args.n, args.engine)


def _word(args):
    w = sigma_word(args.n) if args.word is None else parse_word(args.word)
    if any(not 1 <= a < args.n for a in w):
        raise UsageError(f"word {args.word} uses an index outside 1..{args.n - 1}")
    return w


def cmd_normalize(args) -> list[Report]:
    x = _parse(args)
    nf = ENGINES[args.engine].system(args.n, args.degree).normal_form(x)
    return [Report("cli.normalize", "Normal form", {"n": args.n}, "pass",
                   data={"input": x, "result": nf})]


def cmd_act(args) -> list[Report]:
    x = _parse(args)
    mod = ENGINES[args.engine]
    w = () if args.word is None else _word(args)
    s = mod.system(args.n, args.degree)
    y = mod.apply_word(args.n, w, x, normalize=s.normal_form)
    return [Report("cli.act", "Braid group action", {"n": args.n, "word": list(w)}, "pass",
                   data={"input": x, "result": s.normal_form(y)})]


def cmd_roots(args) -> list[Report]:
    w = _word(args)
    n = args.n
    if not is_reduced(w, n) or len(w) != n * (n - 1) // 2:
        raise UsageError(f"word {list(w)} is not a reduced word of w0 for n={n}")
    mod = ENGINES[args.engine]
    if args.engine == "quantum":
        vecs = mod.quantum_root_vectors(n, w, args.degree, raw=False)
    else:
        vecs = mod.classical_root_vectors(n, w, args.degree)
    out = []
    for t, r in enumerate(beta_sequence(w, n), start=1):
        fam = {}
        for rv in vecs:
            if rv.t == t:
                name = ("e" if rv.i < rv.j else "f") + ("b" if rv.barred else "")
                fam[name] = rv.normal
        out.append(Report("cli.roots", "Root vectors of a reduced word", {"word": list(w), "t": t},
                          "pass", data={"beta": [r.i, r.j], **{k: fam[k] for k in ("e", "eb", "f", "fb")}}))
    return out


def cmd_pbw_dim(args) -> list[Report]:
    D = 3 if args.degree is None else args.degree
    if args.engine == "quantum":
        reps = quantum.pbw_basis_check(args.n, D)
    else:
        if args.n > 3 or D > 4:
            raise ValueError("pbw-dim is sized for n <= 3 and degree <= 4")
        reps = classical.pbw_check(args.n, D)
    return [r for r in reps if not r.claim_id.endswith(".block")]


def cmd_verify(args) -> list[Report]:
    if args.suite is None:
        raise UsageError("verify needs --suite")
    return run_suite(args.suite, args.engine, args.n, args.degree, args.seed)


def cmd_complete(args) -> list[Report]:
    return [completion_report(args.engine, args.n, args.degree)]


COMMANDS = {"normalize": cmd_normalize, "act": cmd_act, "roots": cmd_roots,
            "pbw-dim": cmd_pbw_dim, "verify": cmd_verify, "complete": cmd_complete}


# ---------------------------------------------------------------- output

def _render(x, fmt: str) -> str:
    if isinstance(x, sa.Element):
        return sa.to_latex(x) if fmt == "latex" else sa.to_text(x)
    if isinstance(x, dict):
        return "{" + ", ".join(f"{k}: {_render(v, fmt)}" for k, v in x.items()) + "}"
    if isinstance(x, (list, tuple)):
        return "[" + ", ".join(_render(v, fmt) for v in x) + "]"
    return str(x)


def _text_line(r: Report, fmt: str) -> str:
    line = f"{r.verdict.upper():7} {r.claim_id}  [{r.anchor}]  {_render(r.indices, fmt)}"
    if r.note:
        line += f"  ({r.note})"
    return line


def emit(fmt: str, payload: dict) -> str:
    """Render a command payload as json, text or latex."""
    if fmt == "json":
        body = dict(payload, reports=[r.as_dict() for r in payload["reports"]])
        return json.dumps(body, indent=2)
    lines = []
    for r in payload["reports"]:
        if r.claim_id in ("cli.normalize", "cli.act"):
            lines.append(_render(r.data["result"], fmt))
            continue
        if r.claim_id == "cli.roots":
            d = r.data
            lines.append(f"beta_{r.indices['t']} = eps_{d['beta'][0]} - eps_{d['beta'][1]}")
            for k in ("e", "eb", "f", "fb"):
                lines.append(f"  {k:3}: {_render(d[k], fmt)}")
            continue
        lines.append(_text_line(r, fmt))
        if r.data and fmt == "text" and payload["command"] in ("pbw-dim", "complete"):
            for k, v in r.data.items():
                if k == "per_degree":
                    for deg, row in v.items():
                        lines.append(f"    degree {deg}: count {row['monomials']}, "
                                     f"normal words {row['normal_words']}, rank {row['rank']}")
                else:
                    lines.append(f"    {k}: {v}")
        if r.witness is not None and r.verdict != "pass":
            for wv in r.witness:
                lines.append(f"    witness: {_render(wv, fmt)}")
    if payload["command"] == "verify":
        lines.append("summary: " + ", ".join(f"{k} {v}" for k, v in summary(payload["reports"]).items()))
    return "\n".join(lines)


# ---------------------------------------------------------------- entry point

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="queerpbw",
                                description="Rewriting and verification for U_v(q_n) and U(q_n).")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("expr", nargs="?", help="expression for normalize and act")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--degree", type=int, default=None,
                   help="completion degree (truncation degree for pbw-dim)")
    p.add_argument("--engine", choices=tuple(ENGINES), default="quantum")
    p.add_argument("--word", default=None, help="reduced word, e.g. 1,2,1")
    p.add_argument("--suite", default=None, choices=sorted(SUITES))
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--seed", type=int, default=0)
    return p


def run_command(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.n < 2:
        print("error: --n must be at least 2", file=sys.stderr)
        return 2
    if args.degree is not None and args.degree < 0:
        print("error: --degree must be nonnegative", file=sys.stderr)
        return 2
    t0 = time.perf_counter()
    try:
        reports = COMMANDS[args.verb](args)
    except (UsageError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    options = {"n": args.n, "degree": args.degree, "engine": args.engine, "word": args.word,
               "suite": args.suite, "format": args.format, "seed": args.seed}
    if args.expr is not None:
        options["expr"] = args.expr
    payload = {"tool_version": __version__, "command": args.verb, "options": options,
               "reports": reports, "elapsed_ms": round((time.perf_counter() - t0) * 1000)}
    print(emit(args.format, payload), file=out)
    return 1 if any(r.verdict == "fail" for r in reports) else 0


def main(argv=None) -> int:
    return run_command(argv)


if __name__ == "__main__":
    sys.exit(main())
