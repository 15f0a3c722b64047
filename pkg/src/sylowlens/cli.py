"""Command-line surface: per-group invariants, claim checks, corpus scans.

Exit codes: 0 when every applicable verdict holds, 1 when at least one
verdict failed (a potential counterexample or an engine bug), 2 on usage or
input errors. Recorded cap-skips do not affect the exit code.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .config import CapExceeded
from .corpus import build_corpus
from .group import Group
from .groupfile import GroupFileError, Report, load_group
from .products import find_factorizations, lemma_2_6_check
from .series import (derived_length, fitting_length, is_nilpotent,
                     is_p_nilpotent, is_p_solvable, is_solvable, p_length)
from .sylow import sylow_subgroup, tau_profile
from .theorems import (DEFAULT_SCAN_CLAIMS, conjecture_1_4_check,
                       conjecture_1_4_scan, hall_check, lemma_2_7_check,
                       scan_corpus, thm_1_1_check, thm_1_2a_check,
                       thm_1_2b_check, zhang_p_nilpotency_check)
from .verdicts import BoundVerdict

_CHECKABLE = ("thm_1_1", "thm_1_2a", "thm_1_2b", "lemma_2_6", "lemma_2_7",
              "hall", "zhang_pnilp", "conj_1_4")


def _emit(report: Report, out: Optional[str]) -> None:
    data = report.to_bytes()
    if out:
        with open(out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.write(data.decode("utf-8"))


def _print_json(doc: dict, out: Optional[str]) -> None:
    text = json.dumps(doc, indent=2) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _exit_code(report: Report) -> int:
    return 1 if report.summary.get("failed", 0) > 0 else 0


def _cmd_invariants(args) -> int:
    G = load_group(args.groupfile)
    primes = [args.p] if args.p else list(G.prime_divisors())
    doc = {
        "name": G.name,
        "order": G.order(),
        "degree": G.degree,
        "prime_divisors": list(G.prime_divisors()),
        "abelian": G.is_abelian(),
        "nilpotent": is_nilpotent(G),
        "solvable": is_solvable(G),
        "derived_length": derived_length(G),
        "fitting_length": fitting_length(G),
        "per_prime": {},
    }
    for p in primes:
        entry = {
            "p_solvable": is_p_solvable(G, p),
            "p_nilpotent": _try(lambda: is_p_nilpotent(G, p)),
        }
        entry["p_length"] = p_length(G, p) if entry["p_solvable"] else None
        doc["per_prime"][str(p)] = entry
    _print_json(doc, args.out)
    return 0


def _try(fn):
    try:
        return fn()
    except CapExceeded as exc:
        return {"error": str(exc)}


def _cmd_sylow(args) -> int:
    G = load_group(args.groupfile)
    profile = tau_profile(G)
    doc = {
        "name": G.name,
        "order": G.order(),
        "sylow": {
            str(q): {"n": n, "subgroup_order": sylow_subgroup(G, q).order()}
            for q, n in profile.sylow_numbers
        },
        "tau": profile.tau_of_group,
        "tau_p": {str(p): v for p, v in profile.tau_p_of_group},
    }
    _print_json(doc, args.out)
    return 0


def _cmd_factorizations(args) -> int:
    G = load_group(args.groupfile)
    witnesses = find_factorizations(G, require_mut_perm=args.mut_perm)
    doc = {
        "name": G.name,
        "order": G.order(),
        "mut_perm_only": bool(args.mut_perm),
        "factorizations": [
            {
                "A_order": w.a.order(),
                "B_order": w.b.order(),
                "A_generators": [list(g.images) for g in w.a.generators],
                "B_generators": [list(g.images) for g in w.b.generators],
                "mutually_permutable": w.holds,
                "trivial": w.is_trivial,
            }
            for w in witnesses
        ],
    }
    _print_json(doc, args.out)
    return 0


def _load_subgroup(G: Group, path: str):
    """Subgroup input: same file format, generators interpreted inside G."""
    from .groupfile import parse_group_file

    try:
        with open(path, "rb") as fh:
            spec = parse_group_file(fh.read())
    except OSError as exc:
        raise GroupFileError(f"cannot read {path}: {exc}") from None
    if spec.degree != G.degree:
        raise GroupFileError(
            f"subgroup degree {spec.degree} != ambient degree {G.degree}"
        )
    return G.subgroup(spec.generators, name=spec.name)


def _cmd_check(args) -> int:
    G = load_group(args.groupfile)
    claim = args.claim_id
    need_pair = claim in ("thm_1_1", "thm_1_2a", "thm_1_2b", "conj_1_4",
                          "lemma_2_6")
    A = B = None
    if need_pair:
        if not args.a or not args.b:
            raise GroupFileError(f"claim {claim} needs --a and --b subgroup files")
        A = _load_subgroup(G, args.a)
        B = _load_subgroup(G, args.b)
    verdicts: list[BoundVerdict]
    if claim == "thm_1_1":
        if not args.p:
            raise GroupFileError("thm_1_1 needs --p")
        verdicts = [thm_1_1_check(G, A, B, args.p)]
    elif claim == "conj_1_4":
        if not args.p:
            raise GroupFileError("conj_1_4 needs --p")
        verdicts = [conjecture_1_4_check(G, A, B, args.p)]
    elif claim == "thm_1_2a":
        verdicts = [thm_1_2a_check(G, A, B)]
    elif claim == "thm_1_2b":
        verdicts = [thm_1_2b_check(G, A, B)]
    elif claim == "lemma_2_6":
        if not args.p:
            raise GroupFileError("lemma_2_6 needs --p (the prime q)")
        verdicts = [lemma_2_6_check(G, A, B, args.p)]
    elif claim == "lemma_2_7":
        if not args.p:
            raise GroupFileError("lemma_2_7 needs --p")
        verdicts = [lemma_2_7_check(G, args.p)]
    elif claim == "hall":
        verdicts = hall_check(G)
    elif claim == "zhang_pnilp":
        verdicts = zhang_p_nilpotency_check(G)
    else:
        raise GroupFileError(f"unknown claim id {claim!r}")
    report = Report.from_verdicts(verdicts,
                                  description=f"check {claim} on {G.name or 'G'}")
    _emit(report, args.out)
    return _exit_code(report)


def _parse_claims(raw: Optional[str]) -> tuple[str, ...]:
    if not raw:
        return DEFAULT_SCAN_CLAIMS
    claims = tuple(c.strip() for c in raw.split(",") if c.strip())
    valid = set(DEFAULT_SCAN_CLAIMS) | {"bea", "conj_1_4"}
    for c in claims:
        if c not in valid:
            raise GroupFileError(
                f"unknown claim {c!r}; valid: {sorted(valid)}"
            )
    return claims


def _cmd_scan(args) -> int:
    claims = _parse_claims(args.claims)
    corpus = build_corpus(args.max_order)
    description = (f"family corpus, max_order={args.max_order}, "
                   f"claims={','.join(claims)}")
    if args.workers > 1:
        result = _parallel_scan(corpus, claims, description, args.workers,
                                conjecture=False)
    else:
        result = scan_corpus(corpus, claims, description=description)
    report = Report.from_scan(result)
    _emit(report, args.out)
    return _exit_code(report)


def _cmd_conjecture(args) -> int:
    corpus = build_corpus(args.max_order)
    description = f"conjecture scan, family corpus, max_order={args.max_order}"
    if args.workers > 1:
        result = _parallel_scan(corpus, (), description, args.workers,
                                conjecture=True)
    else:
        result = conjecture_1_4_scan(corpus, description=description)
    report = Report.from_scan(result)
    _emit(report, args.out)
    return _exit_code(report)


def _worker_payload(G: Group) -> tuple:
    return (G.degree, tuple(g.images for g in G.generators), G.name)


def _scan_chunk(payload) -> dict:
    chunk, claims, conjecture = payload
    groups = [Group(degree, [list(t) for t in gens], name=name)
              for degree, gens, name in chunk]
    if conjecture:
        result = conjecture_1_4_scan(groups)
    else:
        result = scan_corpus(groups, claims)
    return {
        "stats": result.stats,
        "claim_stats": result.claim_stats,
        "verdicts": [v.to_json() for v in result.verdicts],
        "complete": result.verdicts_complete,
        "equalities": result.equality_instances,
        "skips": result.group_skips,
    }


def _parallel_scan(corpus, claims, description, workers, conjecture):
    """Fan groups out over processes; merge deterministically."""
    from concurrent.futures import ProcessPoolExecutor

    from .theorems import ScanResult

    chunks: list[list] = [[] for _ in range(workers)]
    # balance by descending order so the big groups spread across workers
    for i, G in enumerate(sorted(corpus, key=lambda g: -g.order())):
        chunks[i % workers].append(_worker_payload(G))
    payloads = [(chunk, tuple(claims), conjecture) for chunk in chunks if chunk]
    stats: dict = {}
    claim_stats: dict = {}
    verdicts: list[BoundVerdict] = []
    complete = True
    equalities: list[dict] = []
    skips: list[dict] = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_scan_chunk, payloads):
            for k, v in part["stats"].items():
                stats[k] = stats.get(k, 0) + v
            for claim, counts in part["claim_stats"].items():
                agg = claim_stats.setdefault(claim, {})
                for k, v in counts.items():
                    agg[k] = agg.get(k, 0) + v
            verdicts.extend(BoundVerdict.from_json(v) for v in part["verdicts"])
            complete = complete and part["complete"]
            equalities.extend(part["equalities"])
            skips.extend(part["skips"])
    verdicts.sort(key=lambda v: (str(v.inputs.get("group")), v.claim_id,
                                 json.dumps(v.inputs, sort_keys=True, default=str)))
    equalities.sort(key=lambda e: (e["claim_id"] if "claim_id" in e else "",
                                   str(e.get("group")), e.get("p") or 0))
    return ScanResult(
        corpus_description=description,
        stats=stats,
        claim_stats={k: claim_stats[k] for k in sorted(claim_stats)},
        verdicts=verdicts,
        verdicts_complete=complete,
        equality_instances=equalities,
        group_skips=sorted(skips, key=lambda s: (s["order"], s["group"])),
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sylowlens",
        description="Finite-group invariants, Sylow numbers, and bound checks "
                    "for mutually permutable products",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="orders, lengths and predicates")
    p_inv.add_argument("groupfile")
    p_inv.add_argument("--p", type=int, default=None)
    p_inv.add_argument("--out", default=None)
    p_inv.set_defaults(fn=_cmd_invariants)

    p_syl = sub.add_parser("sylow", help="Sylow numbers and tau profile")
    p_syl.add_argument("groupfile")
    p_syl.add_argument("--out", default=None)
    p_syl.set_defaults(fn=_cmd_sylow)

    p_fac = sub.add_parser("factorizations", help="covering subgroup pairs")
    p_fac.add_argument("groupfile")
    p_fac.add_argument("--mut-perm", action="store_true", dest="mut_perm")
    p_fac.add_argument("--out", default=None)
    p_fac.set_defaults(fn=_cmd_factorizations)

    p_chk = sub.add_parser("check", help="check one claim on one group")
    p_chk.add_argument("claim_id", choices=_CHECKABLE)
    p_chk.add_argument("groupfile")
    p_chk.add_argument("--p", type=int, default=None)
    p_chk.add_argument("--a", default=None, help="subgroup file for factor A")
    p_chk.add_argument("--b", default=None, help="subgroup file for factor B")
    p_chk.add_argument("--out", default=None)
    p_chk.set_defaults(fn=_cmd_check)

    p_scan = sub.add_parser("scan", help="scan the generated corpus")
    p_scan.add_argument("--max-order", type=int, required=True)
    p_scan.add_argument("--claims", default=None,
                        help="comma-separated claim ids (default: all theorems)")
    p_scan.add_argument("--out", default=None)
    p_scan.add_argument("--workers", type=int, default=1)
    p_scan.set_defaults(fn=_cmd_scan)

    p_conj = sub.add_parser("conjecture",
                            help="search for unconditional p-length violations")
    p_conj.add_argument("--max-order", type=int, required=True)
    p_conj.add_argument("--out", default=None)
    p_conj.add_argument("--workers", type=int, default=1)
    p_conj.set_defaults(fn=_cmd_conjecture)

    return parser


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except (GroupFileError, CapExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())
