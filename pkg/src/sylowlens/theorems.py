"""Exact-arithmetic evaluation of the bound claims, plus corpus-wide scans.

Every logarithmic bound is compared in cleared-exponent integer form so a
verdict can never flip on floating-point rounding:

- p-length claim:   l_p(G) <= 1 + max(tau_p(A), tau_p(B)) / 2
                    as 2 (l_p - 1) <= max(tau_p(A), tau_p(B))
- Fitting claim:    F_l(G) <= 4 + 2 log3(u / 2),  u = max(tau, 1)
                    as 4 * 3^{F_l} <= 81 u^2
- derived claim:    dl(G/Phi(G)) <= 2 + 6 log2(u), u = max(tau, 1)
                    as 2^{dl} <= 4 u^6

u = max(tau, 1) is justified by the piecewise bound functions taking the
same value at 0 and 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .config import CapExceeded
from .group import Group, SubgroupHandle, quotient
from .lattice import all_subgroups, frattini
from .products import bea_lemma_suite, find_factorizations, \
    is_mutually_permutable
from .series import derived_length, fitting_length, is_p_nilpotent, \
    is_p_solvable, is_solvable, p_length
from .sylow import hall_admissible, sylow_number, tau_group, tau_p_group
from .verdicts import BoundVerdict

DEFAULT_SCAN_CLAIMS = ("thm_1_1", "thm_1_2a", "thm_1_2b", "lemma_2_7",
                       "hall", "zhang_pnilp")


def piecewise_f(x: float) -> float:
    """log3(x/2) for x > 0, and log3(1/2) at x = 0 (display only)."""
    return math.log((x if x > 0 else 1) / 2, 3)


def piecewise_g(x: float) -> float:
    """log2(x) for x > 0, and 0 at x = 0 (display only)."""
    return math.log(x, 2) if x > 0 else 0.0


def fitting_bound_holds(fl: int, tau: int) -> bool:
    """Exact form of F_l <= 4 + 2 f(tau)."""
    u = max(tau, 1)
    return 4 * 3 ** fl <= 81 * u * u


def derived_bound_holds(dl: int, tau: int) -> bool:
    """Exact form of dl <= 2 + 6 g(tau)."""
    u = max(tau, 1)
    return 2 ** dl <= 4 * u ** 6


def _group_inputs(G: Group, A: Optional[SubgroupHandle] = None,
                  B: Optional[SubgroupHandle] = None,
                  p: Optional[int] = None) -> dict:
    inputs = {"group": G.name or "G", "order": G.order()}
    if A is not None:
        inputs["A_order"] = A.order()
    if B is not None:
        inputs["B_order"] = B.order()
    if p is not None:
        inputs["p"] = p
    return inputs


def _mut_perm_precondition(G: Group, A: SubgroupHandle, B: SubgroupHandle,
                           assume: Optional[bool]) -> bool:
    if assume is not None:
        return assume
    return is_mutually_permutable(G, A, B).holds


def thm_1_1_check(G: Group, A: SubgroupHandle, B: SubgroupHandle, p: int,
                  assume_mut_perm: Optional[bool] = None) -> BoundVerdict:
    """p-length bound for a mutually permutable product of p-solvable factors.

    Preconditions: mutual permutability, both factors p-solvable, and either
    (a) gcd(|G|, p - 1) = 1 or (b) one factor is p-nilpotent. At p = 2
    condition (a) is gcd(|G|, 1) = 1 and always holds, which makes p = 2 the
    richest scan slice. Holds when 2 (l_p(G) - 1) <= max(tau_p(A), tau_p(B)).
    """
    A = A.rebase(G)
    B = B.rebase(G)
    inputs = _group_inputs(G, A, B, p)
    detail = {
        "mutually_permutable": _mut_perm_precondition(G, A, B, assume_mut_perm),
        "A_p_solvable": is_p_solvable(A.group, p),
        "B_p_solvable": is_p_solvable(B.group, p),
        "condition_a": math.gcd(G.order(), p - 1) == 1,
    }
    detail["condition_b"] = (
        is_p_nilpotent(A.group, p) or is_p_nilpotent(B.group, p)
        if detail["A_p_solvable"] and detail["B_p_solvable"] else False
    )
    met = (detail["mutually_permutable"] and detail["A_p_solvable"]
           and detail["B_p_solvable"]
           and (detail["condition_a"] or detail["condition_b"]))
    if not met:
        return BoundVerdict(claim_id="thm_1_1", inputs=inputs,
                            preconditions_met=False, precondition_detail=detail)
    if not is_p_solvable(G, p):
        return BoundVerdict(claim_id="thm_1_1", inputs=inputs,
                            preconditions_met=True, precondition_detail=detail,
                            error="product of p-solvable factors is not "
                                  "p-solvable; engine bug")
    lp = p_length(G, p)
    ta, tb = tau_p_group(A.group, p), tau_p_group(B.group, p)
    lhs, rhs = 2 * (lp - 1), max(ta, tb)
    return BoundVerdict(
        claim_id="thm_1_1", inputs={**inputs, "l_p": lp, "tau_p_A": ta,
                                    "tau_p_B": tb},
        lhs=lhs, rhs=rhs, holds=lhs <= rhs, preconditions_met=True,
        precondition_detail=detail,
        display=f"l_{p}(G) = {lp} <= max(1 + {ta}/2, 1 + {tb}/2) "
                f"= {1 + max(ta, tb) / 2}",
    )


def conjecture_1_4_check(G: Group, A: SubgroupHandle, B: SubgroupHandle, p: int,
                         assume_mut_perm: Optional[bool] = None) -> BoundVerdict:
    """The p-length bound with conditions (a)/(b) dropped entirely."""
    A = A.rebase(G)
    B = B.rebase(G)
    inputs = _group_inputs(G, A, B, p)
    detail = {
        "mutually_permutable": _mut_perm_precondition(G, A, B, assume_mut_perm),
        "A_p_solvable": is_p_solvable(A.group, p),
        "B_p_solvable": is_p_solvable(B.group, p),
    }
    if not all(detail.values()):
        return BoundVerdict(claim_id="conj_1_4", inputs=inputs,
                            preconditions_met=False, precondition_detail=detail)
    lp = p_length(G, p)
    ta, tb = tau_p_group(A.group, p), tau_p_group(B.group, p)
    lhs, rhs = 2 * (lp - 1), max(ta, tb)
    return BoundVerdict(
        claim_id="conj_1_4", inputs={**inputs, "l_p": lp, "tau_p_A": ta,
                                     "tau_p_B": tb},
        lhs=lhs, rhs=rhs, holds=lhs <= rhs, preconditions_met=True,
        precondition_detail=detail,
        display=f"l_{p}(G) = {lp} vs 1 + max(tau_p)/2 = {1 + max(ta, tb) / 2}",
    )


def thm_1_2a_check(G: Group, A: SubgroupHandle, B: SubgroupHandle,
                   assume_mut_perm: Optional[bool] = None) -> BoundVerdict:
    """Fitting-length bound for a mutually permutable product of solvable
    factors: F_l(G) <= max over factors of 4 + 2 f(tau(factor))."""
    A = A.rebase(G)
    B = B.rebase(G)
    inputs = _group_inputs(G, A, B)
    detail = {
        "mutually_permutable": _mut_perm_precondition(G, A, B, assume_mut_perm),
        "A_solvable": is_solvable(A.group),
        "B_solvable": is_solvable(B.group),
    }
    if not all(detail.values()):
        return BoundVerdict(claim_id="thm_1_2a", inputs=inputs,
                            preconditions_met=False, precondition_detail=detail)
    fl = fitting_length(G)
    if fl is None:
        return BoundVerdict(claim_id="thm_1_2a", inputs=inputs,
                            preconditions_met=True, precondition_detail=detail,
                            error="product of solvable factors is not solvable; "
                                  "engine bug")
    ta, tb = tau_group(A.group), tau_group(B.group)
    u = max(ta, tb, 1)
    lhs, rhs = 4 * 3 ** fl, 81 * u * u
    bound = 4 + 2 * piecewise_f(max(ta, tb))
    return BoundVerdict(
        claim_id="thm_1_2a", inputs={**inputs, "F_l": fl, "tau_A": ta,
                                     "tau_B": tb},
        lhs=lhs, rhs=rhs, holds=lhs <= rhs, preconditions_met=True,
        precondition_detail=detail,
        display=f"F_l(G) = {fl} <= max(4 + 2 f(tau)) = {bound:.4f}",
    )


def thm_1_2b_check(G: Group, A: SubgroupHandle, B: SubgroupHandle,
                   assume_mut_perm: Optional[bool] = None) -> BoundVerdict:
    """Frattini-quotient derived-length bound for a mutually permutable
    product of solvable factors: dl(G/Phi(G)) <= max of 2 + 6 g(tau)."""
    A = A.rebase(G)
    B = B.rebase(G)
    inputs = _group_inputs(G, A, B)
    detail = {
        "mutually_permutable": _mut_perm_precondition(G, A, B, assume_mut_perm),
        "A_solvable": is_solvable(A.group),
        "B_solvable": is_solvable(B.group),
    }
    if not all(detail.values()):
        return BoundVerdict(claim_id="thm_1_2b", inputs=inputs,
                            preconditions_met=False, precondition_detail=detail)
    phi = frattini(G)
    if phi.order() == 1:
        dl = derived_length(G)
    else:
        dl = derived_length(quotient(G, phi).image)
    if dl is None:
        return BoundVerdict(claim_id="thm_1_2b", inputs=inputs,
                            preconditions_met=True, precondition_detail=detail,
                            error="product of solvable factors is not solvable; "
                                  "engine bug")
    ta, tb = tau_group(A.group), tau_group(B.group)
    u = max(ta, tb, 1)
    lhs, rhs = 2 ** dl, 4 * u ** 6
    bound = 2 + 6 * piecewise_g(max(ta, tb))
    return BoundVerdict(
        claim_id="thm_1_2b", inputs={**inputs, "dl_mod_frattini": dl,
                                     "phi_order": phi.order(), "tau_A": ta,
                                     "tau_B": tb},
        lhs=lhs, rhs=rhs, holds=lhs <= rhs, preconditions_met=True,
        precondition_detail=detail,
        display=f"dl(G/Phi(G)) = {dl} <= max(2 + 6 g(tau)) = {bound:.4f}",
    )


def lemma_2_7_check(G: Group, p: int) -> BoundVerdict:
    """Single-group p-length bound: l_p(G) <= 1 + tau_p(G) / 2."""
    inputs = _group_inputs(G, p=p)
    detail = {"p_solvable": is_p_solvable(G, p)}
    if not detail["p_solvable"]:
        return BoundVerdict(claim_id="lemma_2_7", inputs=inputs,
                            preconditions_met=False, precondition_detail=detail)
    lp = p_length(G, p)
    tp = tau_p_group(G, p)
    lhs, rhs = 2 * (lp - 1), tp
    return BoundVerdict(
        claim_id="lemma_2_7", inputs={**inputs, "l_p": lp, "tau_p": tp},
        lhs=lhs, rhs=rhs, holds=lhs <= rhs, preconditions_met=True,
        precondition_detail=detail,
        display=f"l_{p}(G) = {lp} <= 1 + {tp}/2 = {1 + tp / 2}",
    )


def hall_check(G: Group) -> list[BoundVerdict]:
    """Sylow numbers of a solvable group factor as products q^a = 1 (mod p).

    One verdict per prime divisor; only the necessity direction is checked
    (realizability of admissible numbers is out of scope by design).
    """
    solvable = is_solvable(G)
    out = []
    for p in G.prime_divisors():
        inputs = _group_inputs(G, p=p)
        if not solvable:
            out.append(BoundVerdict(claim_id="hall", inputs=inputs,
                                    preconditions_met=False,
                                    precondition_detail={"solvable": False}))
            continue
        n = sylow_number(G, p)
        ok = hall_admissible(n, p)
        out.append(BoundVerdict(
            claim_id="hall",
            inputs={**inputs, "n_p": n, "direction": "necessity-only"},
            lhs=None, rhs=None, holds=ok, preconditions_met=True,
            precondition_detail={"solvable": True},
            display=f"n_{p}(G) = {n} is {'Hall-admissible' if ok else 'NOT Hall-admissible'}",
        ))
    return out


def zhang_p_nilpotency_check(G: Group) -> list[BoundVerdict]:
    """p-nilpotency vs Sylow-number coprimality.

    For p != 3 the two are equivalent; for p = 3 only the forward direction
    (3-nilpotent implies 3 coprime to every Sylow number) is asserted, the
    converse needing an extra normalizer condition that is out of scope.
    """
    primes = G.prime_divisors()
    numbers = {q: sylow_number(G, q) for q in primes}
    out = []
    for p in primes:
        coprime = all(n % p != 0 for n in numbers.values())
        nilp = is_p_nilpotent(G, p)
        inputs = {**_group_inputs(G, p=p),
                  "sylow_numbers": sorted(numbers.items()),
                  "coprime": coprime, "p_nilpotent": nilp}
        if p != 3:
            ok = coprime == nilp
            note = "equivalence"
        else:
            ok = (not nilp) or coprime
            note = "forward direction only (p = 3)"
        out.append(BoundVerdict(
            claim_id="zhang_pnilp", inputs=inputs, lhs=None, rhs=None,
            holds=ok, preconditions_met=True,
            display=f"p = {p}: coprime={coprime}, p-nilpotent={nilp} ({note})",
        ))
    return out


@dataclass
class ScanResult:
    """Aggregated outcome of a corpus scan.

    ``verdicts`` holds every produced verdict while the total stays under
    ``keep_limit``; otherwise only failures, errors and precondition records
    are retained and ``verdicts_complete`` is False. The tallies in ``stats``
    always reflect the full scan.
    """

    corpus_description: str
    stats: dict = field(default_factory=dict)
    claim_stats: dict = field(default_factory=dict)
    verdicts: list[BoundVerdict] = field(default_factory=list)
    verdicts_complete: bool = True
    equality_instances: list[dict] = field(default_factory=list)
    group_skips: list[dict] = field(default_factory=list)

    @property
    def failures(self) -> list[BoundVerdict]:
        return [v for v in self.verdicts if v.failed]


class _Tally:
    def __init__(self, keep_limit: int):
        self.keep_limit = keep_limit
        self.kept: list[BoundVerdict] = []
        self.dropped = 0
        self.stats = {"total": 0, "checked": 0, "held": 0, "failed": 0,
                      "precondition_failed": 0, "errors": 0}
        self.claim_stats: dict[str, dict] = {}
        self.equalities: dict[tuple, dict] = {}

    def add(self, v: BoundVerdict) -> None:
        s = self.stats
        c = self.claim_stats.setdefault(
            v.claim_id, {"total": 0, "checked": 0, "held": 0, "failed": 0,
                         "precondition_failed": 0, "errors": 0})
        s["total"] += 1
        c["total"] += 1
        if v.error is not None:
            s["errors"] += 1
            c["errors"] += 1
        elif not v.preconditions_met:
            s["precondition_failed"] += 1
            c["precondition_failed"] += 1
        else:
            s["checked"] += 1
            c["checked"] += 1
            if v.holds:
                s["held"] += 1
                c["held"] += 1
            else:
                s["failed"] += 1
                c["failed"] += 1
        if v.is_equality:
            key = (v.claim_id, v.inputs.get("group"), v.inputs.get("order"),
                   v.inputs.get("A_order"), v.inputs.get("B_order"),
                   v.inputs.get("p"), v.lhs, v.rhs)
            entry = self.equalities.setdefault(key, {
                "claim_id": v.claim_id,
                "group": v.inputs.get("group"),
                "order": v.inputs.get("order"),
                "A_order": v.inputs.get("A_order"),
                "B_order": v.inputs.get("B_order"),
                "p": v.inputs.get("p"),
                "lhs": v.lhs,
                "rhs": v.rhs,
                "count": 0,
            })
            entry["count"] += 1
        if len(self.kept) < self.keep_limit or v.failed or v.error is not None:
            self.kept.append(v)
        else:
            self.dropped += 1


def _scan_one_group(G: Group, claims: Sequence[str], tally: _Tally,
                    skips: list[dict], release_caches: bool = False) -> None:
    try:
        _scan_one_group_inner(G, claims, tally, skips)
    finally:
        if release_caches:
            # scans visit each group once; dropping its lattice, witnesses
            # and memo tables keeps whole-corpus memory flat
            G._cache.clear()


def _scan_one_group_inner(G: Group, claims: Sequence[str], tally: _Tally,
                          skips: list[dict]) -> None:
    claims = set(claims)
    try:
        all_subgroups(G)
    except CapExceeded as exc:
        skips.append({"group": G.name or "G", "order": G.order(),
                      "reason": str(exc)})
        return
    primes = G.prime_divisors()
    if "hall" in claims:
        for v in hall_check(G):
            tally.add(v)
    if "zhang_pnilp" in claims:
        for v in zhang_p_nilpotency_check(G):
            tally.add(v)
    if "lemma_2_7" in claims:
        for p in primes:
            tally.add(lemma_2_7_check(G, p))
    pair_claims = claims & {"thm_1_1", "thm_1_2a", "thm_1_2b", "conj_1_4",
                            "bea"}
    if not pair_claims:
        return
    witnesses = find_factorizations(G, require_mut_perm=True)
    for w in witnesses:
        A, B = w.a, w.b
        if "thm_1_1" in claims:
            for p in primes:
                tally.add(thm_1_1_check(G, A, B, p, assume_mut_perm=True))
        if "conj_1_4" in claims:
            for p in primes:
                tally.add(conjecture_1_4_check(G, A, B, p, assume_mut_perm=True))
        if "thm_1_2a" in claims:
            tally.add(thm_1_2a_check(G, A, B, assume_mut_perm=True))
        if "thm_1_2b" in claims:
            tally.add(thm_1_2b_check(G, A, B, assume_mut_perm=True))
        if "bea" in claims:
            for v in bea_lemma_suite(G, A, B):
                tally.add(v)


def scan_corpus(groups: Iterable[Group], claims: Sequence[str] = DEFAULT_SCAN_CLAIMS,
                description: str = "", keep_limit: int = 100000) -> ScanResult:
    """Run the requested claim checkers over every group of a corpus.

    Groups whose lattice exceeds a cap are recorded as skips and the scan
    continues. Verdicts are reported in deterministic (input) order.
    """
    tally = _Tally(keep_limit)
    skips: list[dict] = []
    for G in groups:
        _scan_one_group(G, claims, tally, skips, release_caches=True)
    equalities = sorted(tally.equalities.values(),
                        key=lambda e: (e["claim_id"], str(e["group"]),
                                       e["p"] if e["p"] is not None else 0,
                                       -(e["lhs"] or 0)))
    return ScanResult(
        corpus_description=description,
        stats=dict(tally.stats),
        claim_stats={k: dict(v) for k, v in sorted(tally.claim_stats.items())},
        verdicts=tally.kept,
        verdicts_complete=tally.dropped == 0,
        equality_instances=equalities,
        group_skips=skips,
    )


def conjecture_1_4_scan(corpus: Iterable[Group], keep_limit: int = 100000,
                        description: str = "") -> ScanResult:
    """Search for counterexamples to the unconditional p-length bound.

    Every violation would be a potential counterexample (none are expected);
    near-tight instances (slack 0 or 1 in integer form) are aggregated in
    ``equality_instances`` for inspection, with slack-1 entries flagged.
    """
    tally = _Tally(keep_limit)
    skips: list[dict] = []
    near_tight: dict[tuple, dict] = {}
    for G in corpus:
        try:
            all_subgroups(G)
        except CapExceeded as exc:
            skips.append({"group": G.name or "G", "order": G.order(),
                          "reason": str(exc)})
            continue
        witnesses = find_factorizations(G, require_mut_perm=True)
        for w in witnesses:
            for p in G.prime_divisors():
                v = conjecture_1_4_check(G, w.a, w.b, p, assume_mut_perm=True)
                tally.add(v)
                if v.holds and v.slack is not None and v.slack <= 1:
                    key = (v.inputs.get("group"), v.inputs.get("order"),
                           v.inputs.get("A_order"), v.inputs.get("B_order"),
                           p, v.lhs, v.rhs)
                    entry = near_tight.setdefault(key, {
                        "group": v.inputs.get("group"),
                        "order": v.inputs.get("order"),
                        "A_order": v.inputs.get("A_order"),
                        "B_order": v.inputs.get("B_order"),
                        "p": p, "lhs": v.lhs, "rhs": v.rhs,
                        "slack": v.slack, "count": 0,
                    })
                    entry["count"] += 1
        G._cache.clear()
    tight = sorted(near_tight.values(),
                   key=lambda e: (e["slack"], -(e["lhs"] or 0), str(e["group"]),
                                  e["p"]))
    return ScanResult(
        corpus_description=description,
        stats=dict(tally.stats),
        claim_stats={k: dict(v) for k, v in sorted(tally.claim_stats.items())},
        verdicts=tally.kept,
        verdicts_complete=tally.dropped == 0,
        equality_instances=tight,
        group_skips=skips,
    )
