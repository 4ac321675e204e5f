"""Command-line front end.

Subcommands: shuffle | fox | cohomology | lhs | asphericity | selftest.
Exit codes: 0 success, 2 domain error, 3 resource budget exceeded.
Output is deterministic for a fixed seed; JSON reports follow the
schemas bundled under whlab/schemas/.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field as dc_field

from . import errors
from .cohomology import budget_from_env, hochschild_cohomology, minimal_resolution
from .fields import GF, QQ, field_from_name
from .groups import FiniteGroupTable, group_by_name, parse_group_table
from .hopf import TensorElement, shuffle as hopf_shuffle
from .modules import GModule
from .presentations import parse_presentation
from .asphericity import asphericity_probe, theorem_instances
from .spectral import lhs_double_complex, spectral_pages, validate_double_complex
from .words import fox_fundamental_check


@dataclass
class RunConfig:
    command: str
    field_spec: str = "Q"
    trunc: int = 4
    window: tuple = (2, 2)
    json_out: bool = False
    budget: int = dc_field(default_factory=budget_from_env)
    seed: int = 0

    def __post_init__(self):
        if self.trunc < 1:
            raise errors.WhlabError("N must be >= 1")
        if self.budget <= 0:
            raise errors.WhlabError("budget must be positive")


def _emit_json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _load_group(spec: str) -> FiniteGroupTable:
    if spec.endswith(".tbl") or "/" in spec:
        with open(spec, "r", encoding="utf-8") as fh:
            return parse_group_table(fh.read())
    return group_by_name(spec)


def _module_for(group: FiniteGroupTable, coeff: str, field) -> GModule:
    if coeff == "trivial":
        return GModule.trivial(group, field)
    if coeff == "regular":
        return GModule.regular(group, field)
    raise errors.WhlabError(f"unknown coefficient module {coeff!r} (trivial|regular)")


def cmd_shuffle(args, out) -> int:
    letters = sorted(set(args.left + args.right))
    if not letters:
        raise errors.WhlabError("empty words")
    field = field_from_name(args.field)
    idx = {c: i for i, c in enumerate(letters)}
    a = TensorElement.word(field, len(letters), tuple(idx[c] for c in args.left))
    b = TensorElement.word(field, len(letters), tuple(idx[c] for c in args.right))
    result = hopf_shuffle(a, b)
    if args.json:
        payload = {
            "command": "shuffle",
            "field": args.field,
            "left": args.left,
            "right": args.right,
            "terms": [{"monomial": "".join(letters[i] for i in m),
                       "coefficient": str(c)}
                      for m, c in sorted(result.coeffs.items(), key=lambda t: (len(t[0]), t[0]))],
        }
        out.write(_emit_json(payload))
    else:
        out.write(result.render(letters) + "\n")
    return 0


def cmd_fox(args, out) -> int:
    from .asphericity import build_quotient_algebra, fox_jacobian

    with open(args.presentation, "r", encoding="utf-8") as fh:
        pres = parse_presentation(fh.read())
    field = field_from_name(args.field) if args.field else pres.field
    cap = args.N or pres.trunc
    algebra = build_quotient_algebra(pres, field, cap, args.budget)
    jac = fox_jacobian(pres, algebra)
    names = [f"X{i}" for i in range(pres.n_gens)]
    identity_ok = all(fox_fundamental_check(w, pres.n_gens) for _, w in pres.relators)
    if args.json:
        payload = {
            "command": "fox",
            "presentation": args.presentation,
            "field": "Q" if field.char == 0 else f"F{field.char}",
            "N": cap,
            "fundamentalIdentity": identity_ok,
            "jacobian": [{"relator": lab,
                          "entries": [algebra.render_element(e, names) for e in row]}
                         for (lab, _), row in zip(pres.relators, jac)],
        }
        out.write(_emit_json(payload))
    else:
        out.write(f"fundamental identity: {'ok' if identity_ok else 'FAILED'}\n")
        for (lab, _), row in zip(pres.relators, jac):
            entries = ", ".join(algebra.render_element(e, names) for e in row)
            out.write(f"d2[{lab}] = ({entries})\n")
    return 0


def cmd_cohomology(args, out) -> int:
    field = GF(int(args.field[1:])) if args.field and args.field.startswith("F") else None
    group = _load_group(args.group)
    p = group.require_p_group(None if group.order > 1 else 2)
    field = field or GF(p)
    module = _module_for(group, args.coeff, field)
    hoch = hochschild_cohomology(group, module, args.nmax, args.budget, with_reps=False)
    dims = [d for (_, d, _) in hoch]
    methods_agree = None
    betti = None
    if args.coeff == "trivial":
        betti = minimal_resolution(group, args.nmax, p=field.char, budget=args.budget)
        methods_agree = (betti == dims)
    payload = {
        "command": "cohomology",
        "group": args.group,
        "module": args.coeff,
        "field": f"F{field.char}",
        "dims": [{"n": n, "dim": d} for n, (nn, d, _) in enumerate(hoch)],
        "method": "hochschild",
        "betti": betti,
        "methodsAgree": methods_agree,
    }
    if args.json:
        out.write(_emit_json(payload))
    else:
        out.write(f"H^n({args.group}, {args.coeff}/{payload['field']}): dims {dims}\n")
        if betti is not None:
            out.write(f"minimal resolution betti: {betti}  methods-agree={methods_agree}\n")
    return 0


def cmd_lhs(args, out) -> int:
    group = _load_group(args.group)
    sub = tuple(int(x) for x in args.subgroup.split(","))
    sub = group.subgroup_elements(sub)
    p = group.require_p_group(None if group.order > 1 else 2)
    field = GF(p)
    module = _module_for(group, args.coeff, field)
    window = tuple(int(x) for x in args.window.split(","))
    if len(window) != 2:
        raise errors.WhlabError("window must be 'p_max,q_max'")
    dc = lhs_double_complex(group, sub, module, window)
    violations = validate_double_complex(dc)
    if violations:
        raise errors.WhlabError("double complex violations: " + "; ".join(violations))
    pages = spectral_pages(dc, args.rmax)
    if args.json:
        dump = []
        for r in range(args.rmax + 1):
            cells = [{"p": p_, "q": q_, "dim": cell.dim, "stable": cell.stable,
                      "reliable": cell.reliable}
                     for (p_, q_), cell in sorted(pages.pages[r].items())
                     if p_ <= window[0] and q_ <= window[1]]
            dump.append({"r": r, "cells": cells})
        payload = {
            "command": "lhs",
            "group": args.group,
            "subgroup": list(sub),
            "module": args.coeff,
            "window": list(window),
            "pages": dump,
            "einf": [{"p": p_, "q": q_, "dim": d}
                     for (p_, q_), d in sorted(pages.einf.items())
                     if p_ <= window[0] and q_ <= window[1]],
            "totals": [{"n": n, "dim": d} for n, d in sorted(pages.total.items())
                       if n < dc.truncation_degree],
        }
        out.write(_emit_json(payload))
    else:
        for r in range(args.rmax + 1):
            out.write(f"E_{r}:\n")
            for q_ in range(window[1], -1, -1):
                row = []
                for p_ in range(window[0] + 1):
                    cell = pages.pages[r].get((p_, q_))
                    row.append(f"{cell.dim if cell else 0:>3}")
                out.write("  q=" + str(q_) + " |" + " ".join(row) + "\n")
        out.write("E_inf (window): " +
                  " ".join(f"({p_},{q_})={d}" for (p_, q_), d in sorted(pages.einf.items())
                           if p_ <= window[0] and q_ <= window[1]) + "\n")
        totals = {n: d for n, d in sorted(pages.total.items()) if n < dc.truncation_degree}
        out.write(f"H^n(Tot) dims: {totals}\n")
    return 0


def cmd_asphericity(args, out) -> int:
    with open(args.presentation, "r", encoding="utf-8") as fh:
        pres = parse_presentation(fh.read())
    field = field_from_name(args.field) if args.field else pres.field
    cap = args.N or pres.trunc
    table = theorem_instances(pres, field, cap, budget=args.budget)
    if args.json:
        payload = {
            "command": "asphericity",
            "presentation": args.presentation,
            "field": "Q" if field.char == 0 else f"F{field.char}",
            "N": cap,
            "rows": [{
                "subset": list(labels),
                "verdict": rep.verdict_line(),
                "dims": {
                    "algebra": rep.algebra_dim,
                    "perDegreeKernel": list(rep.per_degree_kernel),
                    "coinvariants": rep.coinvariants_dim,
                },
                "witness": [str(c) for c in rep.witness] if rep.witness else None,
            } for labels, rep in table.rows],
            "contradiction": table.contradiction,
        }
        out.write(_emit_json(payload))
    else:
        for labels, rep in table.rows:
            subset = "{" + ",".join(labels) + "}"
            out.write(f"{subset:>24}  {rep.verdict_line()}  "
                      f"(algebra dim {rep.algebra_dim}, coinv {rep.coinvariants_dim})\n")
        if table.contradiction:
            out.write("WARNING: parent/child verdict contradiction "
                      "(theorem instance violated at this truncation)\n")
    return 0


def cmd_selftest(args, out) -> int:
    rng = random.Random(args.seed)
    from .series import TruncatedSeries, series_mul
    from .words import GroupWord, fox_fundamental_check
    from .hopf import antipode_convolution, counit

    checks = []

    a = TensorElement.word(QQ, 4, (0, 1))
    b = TensorElement.word(QQ, 4, (2, 3))
    six = hopf_shuffle(a, b)
    checks.append(("shuffle ab∘xy has 6 terms", len(six.coeffs) == 6))
    aa = hopf_shuffle(TensorElement.word(QQ, 1, (0,) * 3), TensorElement.word(QQ, 1, (0,) * 2))
    checks.append(("shuffle aaa∘aa = 10·aaaaa", aa.coeffs == {(0,) * 5: QQ.of(10)}))

    ok = True
    for _ in range(50):
        letters = [(rng.randrange(3), rng.choice((1, -1))) for _ in range(rng.randrange(1, 9))]
        if not fox_fundamental_check(GroupWord(letters), 3):
            ok = False
    checks.append(("fox fundamental identity (50 random words)", ok))

    ok = True
    for _ in range(25):
        coeffs = {tuple(rng.randrange(2) for _ in range(rng.randrange(0, 4))): rng.randrange(-3, 4)
                  for _ in range(4)}
        elt = TensorElement(QQ, 2, coeffs)
        conv = antipode_convolution(elt)
        expect = TensorElement(QQ, 2, {(): counit(elt)})
        if conv != expect:
            ok = False
    checks.append(("antipode convolution law (25 random elements)", ok))

    failures = 0
    for name, passed in checks:
        out.write(f"{'PASS' if passed else 'FAIL'}  {name}\n")
        failures += 0 if passed else 1
    out.write(f"selftest: {len(checks) - failures}/{len(checks)} passed (seed {args.seed})\n")
    return 0 if failures == 0 else 2


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="whlab",
                                 description="homological calculator for group presentations")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument("--budget", type=int, default=budget_from_env(),
                       help="resource budget (WHLAB_BUDGET overrides the default)")
        p.add_argument("--seed", type=int, default=0, help="seed for randomized suites")

    p = sub.add_parser("shuffle", help="shuffle product of two words")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--field", default="Q")
    common(p)

    p = sub.add_parser("fox", help="Fox Jacobian of a presentation file")
    p.add_argument("presentation")
    p.add_argument("--field", default=None)
    p.add_argument("--N", type=int, default=None)
    common(p)

    p = sub.add_parser("cohomology", help="group cohomology dims, two methods")
    p.add_argument("--group", required=True, help="named group (Z4, Z2xZ2, UT3(2)) or table file")
    p.add_argument("--coeff", default="trivial", choices=("trivial", "regular"))
    p.add_argument("--nmax", type=int, default=3)
    p.add_argument("--field", default=None)
    common(p)

    p = sub.add_parser("lhs", help="Lyndon-Hochschild-Serre spectral sequence")
    p.add_argument("--group", required=True)
    p.add_argument("--subgroup", required=True, help="comma-separated element indices")
    p.add_argument("--coeff", default="trivial", choices=("trivial", "regular"))
    p.add_argument("--window", default="2,2")
    p.add_argument("--rmax", type=int, default=3)
    common(p)

    p = sub.add_parser("asphericity", help="asphericity probe over all subpresentations")
    p.add_argument("presentation")
    p.add_argument("--field", default=None)
    p.add_argument("--N", type=int, default=None)
    common(p)

    p = sub.add_parser("selftest", help="quick deterministic property checks")
    common(p)
    return ap


_COMMANDS = {
    "shuffle": cmd_shuffle,
    "fox": cmd_fox,
    "cohomology": cmd_cohomology,
    "lhs": cmd_lhs,
    "asphericity": cmd_asphericity,
    "selftest": cmd_selftest,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return _COMMANDS[args.command](args, out)
    except errors.BudgetExceeded as e:
        print(f"whlab: budget exceeded: {e}", file=sys.stderr)
        return 3
    except (errors.WhlabError, OSError, ValueError, KeyError) as e:
        print(f"whlab: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
