"""Batch command-line front end.

Subcommands: analyze, act, cosets, build-cu, crypto-demo, verify.  Every
command prints a findings report (or JSON with --json) and exits 0 only
when all checks pass.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import acts, closures, construction, core, cosets, crypto, verify
from .errors import WorkbenchError
from .report import Finding, Report


def _load_table(path: str) -> core.FiniteSemigroup:
    text = Path(path).read_text()
    return core.parse_cayley_table(text, name=Path(path).stem)


def _emit(report: Report, as_json: bool, extra_text: list[str] | None = None) -> int:
    if as_json:
        print(report.to_json())
    else:
        print(report.render())
        for block in extra_text or []:
            print(block)
    return report.exit_status


def cmd_analyze(args) -> int:
    report = Report(f"analyze {args.table}")
    S = _load_table(args.table)
    report.add(Finding("table-valid", True, f"order {S.n}"))
    if S.identity is not None:
        report.info("identity", S.identity)
    E = sorted(core.idempotents(S))
    report.info("idempotents", " ".join(map(str, E)))
    cls = core.classify_idempotents(S)
    report.info("band", cls.is_band)
    report.info("semilattice", cls.is_semilattice)
    report.info("e-dense", core.is_e_dense(S))
    report.info("e-unitary", core.is_e_unitary(S))
    report.info("group", core.is_group(S))
    report.info("inverse-semigroup", core.is_inverse_semigroup(S))
    report.info("regular-elements", " ".join(map(str, sorted(core.regular_elements(S)))))
    for s in S.elements:
        iv = core.inverse_sets(S, s)
        report.info(
            f"inverses[{s}]",
            f"W={sorted(iv.W)} V={sorted(iv.V)} L={sorted(iv.L)}",
        )
    return _emit(report, args.json)


def _act_from_args(S, args):
    if args.act_file:
        return acts.parse_act(Path(args.act_file).read_text(), S), f"file:{args.act_file}"
    carrier = None
    if args.carrier:
        carrier = sorted(closures.parse_subset(args.carrier))
    if args.munn:
        return acts.munn_act(S), "munn"
    rows, labels = acts.left_mult_total(S, carrier)
    return acts.wagner_preston(S, rows, labels), "wagner-preston"


def cmd_act(args) -> int:
    S = _load_table(args.table)
    act, kind = _act_from_args(S, args)
    report = Report(f"act {args.table} ({kind})")
    report.add(Finding("act-valid", True, f"{act.carrier} points"))
    props = acts.act_properties(act)
    report.info("effective", props.effective)
    report.info("transitive", props.transitive)
    report.info("indecomposable", props.indecomposable)
    report.info("locally-free", props.locally_free)
    for O in acts.orbits(act):
        report.info(f"orbit[{min(O)}]", " ".join(map(str, sorted(O))))
    for x in act.points:
        report.info(
            f"stabilizer[{x}]", " ".join(map(str, sorted(acts.stabilizer(act, x))))
        )
    g = acts.grading(act)
    if isinstance(g, acts.Grading):
        report.info("grading", " ".join(map(str, g.p)))
    else:
        report.info("grading-absent", f"{g.reason} (point {g.witness})")
    return _emit(report, args.json, [acts.format_act(act).rstrip()])


def cmd_cosets(args) -> int:
    S = _load_table(args.table)
    H = closures.parse_subset(args.subsemigroup)
    report = Report(f"cosets {args.table} H={{{closures.format_subset(H)}}}")
    space = cosets.coset_space(S, H)
    report.add(Finding("base-valid", True, f"{len(space.cosets)} cosets"))
    report.info("domain", closures.format_subset(space.domain))
    lines = []
    for c in space.cosets:
        lines.append(closures.format_subset(c.members))
        report.info(f"coset[{min(c.members)}]", closures.format_subset(c.members))
    self_conj = cosets.is_self_conjugate(S, H)
    report.info("self-conjugate", self_conj)
    extra = ["\n".join(lines)]
    if self_conj:
        Q = cosets.quotient_group(S, H)
        report.add(Finding("quotient-group", core.is_group(Q), f"order {Q.n}"))
        extra.append(core.format_cayley_table(Q).rstrip())
    return _emit(report, args.json, extra)


def cmd_build_cu(args) -> int:
    G = _load_table(args.group)
    if args.category:
        C, action, transitive, free = construction.parse_category(
            Path(args.category).read_text(), G
        )
        source = f"category:{args.category}"
    elif args.adjoin_band:
        C, action = construction.adjoin_band_category(G, args.adjoin_band)
        transitive = free = True
        source = f"adjoin-band:{args.adjoin_band}"
    else:
        C, action = construction.derived_category(G)
        transitive = free = True
        source = "derived"
    report = Report(f"build-cu {args.group} ({source})")
    report.info("objects", C.n_objects)
    report.info("morphisms", C.n_morphisms)
    report.add(Finding("strongly-connected", C.is_strongly_connected()))
    report.add(Finding("locally-idempotent", C.is_locally_idempotent()))
    report.add(Finding("action-transitive", transitive))
    report.add(Finding("action-free", free))
    u = args.object if args.object is not None else (G.identity or 0)
    cu = construction.c_u_monoid(C, action, u)
    S = cu.semigroup
    report.add(Finding("pair-monoid", True, f"order {S.n}"))
    report.add(Finding("e-unitary-dense", core.is_e_unitary(S) and core.is_e_dense(S)))
    report.info("idempotents", len(core.idempotents(S)))
    labels = " ".join(S.label(i) for i in S.elements)
    report.info("elements", labels)
    return _emit(report, args.json, [core.format_cayley_table(S).rstrip()])


def _demo_system(args, rng):
    if args.prime:
        ms = crypto.modexp_system(args.prime)
        key = rng.choice(ms.exponents)
        sys_ = ms.system(key)
        return sys_, f"modexp p={args.prime}"
    S = construction.fixture(args.fixture)
    sys_ = crypto.locally_free_system(S, 0)
    keys = [s for s in S.elements if crypto.uniform_decrypt_keys(sys_, s)]
    return sys_.with_key(rng.choice(keys)), f"fixture {args.fixture}"


def cmd_crypto_demo(args) -> int:
    rng = random.Random(args.seed)
    sys_, label = _demo_system(args, rng)
    S = sys_.semigroup
    report = Report(f"crypto-demo {label} protocol={args.protocol} seed={args.seed}")
    sizes = sorted(
        {
            len(crypto.decrypt_key_space(sys_, x, s))
            for s in S.elements
            for x in sys_.act.points
        }
    )
    report.info("key-space-sizes", " ".join(map(str, sizes)))
    keys = [s for s in S.elements if crypto.uniform_decrypt_keys(sys_, s)]
    x = rng.choice(range(sys_.carrier))
    if args.protocol == "mo":
        s, t = rng.choice(keys), rng.choice(keys)
        transcript = crypto.massey_omura(sys_, x, s, t)
    else:
        s, c, d = rng.choice(keys), rng.choice(keys), rng.choice(keys)
        transcript = crypto.elgamal(sys_, x, s, c, d)
    report.info("plaintext", x)
    report.add(Finding("recovered-plaintext", transcript.ok, str(transcript.recovered)))
    first_cipher = transcript.entries[0 if args.protocol == "mo" else 1][2]
    logs = crypto.discrete_log_candidates(sys_, x, first_cipher)
    report.info("discrete-log-candidates", " ".join(map(str, sorted(logs))))
    return _emit(report, args.json, [transcript.render()])


def cmd_verify(args) -> int:
    names = verify.SUITE_NAMES if args.suite == "all" else (args.suite,)
    if args.corpus:
        report = Report(f"verify --corpus --suite {args.suite}")
        report.extend(verify.corpus_findings(names))
    else:
        S = _load_table(args.table)
        report = Report(f"verify {args.table} --suite {args.suite}")
        report.extend(verify.suites_for_table(S, names))
        if "crypto" in names:
            try:
                sys_ = crypto.locally_free_system(S, min(S.elements))
            except WorkbenchError as exc:
                report.info("crypto-skipped", exc)
            else:
                for s in S.elements:
                    keyed = sys_.with_key(s)
                    for x in sys_.act.points:
                        for f in crypto.verify_key_space_theorem(keyed, x):
                            if not f.passed:
                                report.add(f)
                report.add(Finding("crypto.key-space-theorem", True))
    return _emit(report, args.json)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edense",
        description="Workbench for finite E-dense semigroups and act cryptosystems",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="structural invariants of a Cayley table")
    p.add_argument("table")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("act", help="build and validate a partial act")
    p.add_argument("table")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--wagner-preston", action="store_true", default=True)
    mode.add_argument("--munn", action="store_true")
    mode.add_argument("--act-file")
    p.add_argument("--carrier", help="left-ideal carrier ids, e.g. '3 4 5'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("cosets", help="coset space of a closed E-dense subsemigroup")
    p.add_argument("table")
    p.add_argument("--subsemigroup", required=True, help="ids, e.g. '0 3'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cosets)

    p = sub.add_parser("build-cu", help="pair monoid from a group acting on a category")
    p.add_argument("--group", required=True, help="Cayley table file of the group")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--derived", action="store_true", default=True)
    mode.add_argument("--adjoin-band", type=int, metavar="K")
    mode.add_argument("--category", help="category description file")
    p.add_argument("--object", type=int, help="base object (default: group identity)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_build_cu)

    p = sub.add_parser("crypto-demo", help="seeded protocol transcript")
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--prime", type=int)
    target.add_argument("--fixture", choices=construction.FIXTURE_NAMES)
    p.add_argument("--protocol", choices=("mo", "elgamal"), default="mo")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_crypto_demo)

    p = sub.add_parser("verify", help="run the lemma verification suites")
    p.add_argument("table", nargs="?")
    p.add_argument("--corpus", action="store_true")
    p.add_argument(
        "--suite", choices=verify.SUITE_NAMES + ("all",), default="all"
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and not args.corpus and not args.table:
        parser.error("verify needs a table file or --corpus")
    try:
        return args.func(args)
    except WorkbenchError as exc:
        report = Report(args.command)
        report.add(Finding(type(exc).__name__, False, str(exc)))
        if getattr(args, "json", False):
            print(report.to_json())
        else:
            print(report.render())
        return 1


if __name__ == "__main__":
    sys.exit(main())
