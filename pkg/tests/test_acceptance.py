"""Acceptance gate: every criterion checked at its stated tolerance.

Each test prints one PASS/FAIL line. The corpus-wide criteria share a single
scan of the generated max-order-120 corpus (all claims at once), which is by
far the dominant cost; its wall-clock budget is asserted explicitly.
"""

import time

import pytest

from sylowlens.corpus import (alternating_group, build_corpus, c7_c3,
                              dihedral_group, frobenius_20,
                              semidirect_c3c3_c2, symmetric_group)
from sylowlens.lattice import all_subgroups
from sylowlens.perm import Perm
from sylowlens.products import (find_factorizations, is_mutually_permutable,
                                lemma_2_6_check)
from sylowlens.series import (derived_length, fitting_length, is_p_solvable,
                              is_solvable, p_length)
from sylowlens.sylow import (sylow_conjugate_count, sylow_number, tau_p_group)
from sylowlens.theorems import (scan_corpus, thm_1_1_check, thm_1_2a_check,
                                thm_1_2b_check, zhang_p_nilpotency_check)

SCAN_CLAIMS = ("thm_1_1", "thm_1_2a", "thm_1_2b", "lemma_2_7", "hall",
               "zhang_pnilp", "bea", "conj_1_4")
SCAN_BUDGET_SECONDS = 900


def _verdict_line(label: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    print(f"[{status}] {label}" + (f" :: {detail}" if detail else ""))
    assert ok, f"{label}: {detail}"


@pytest.fixture(scope="session")
def corpus_scan():
    corpus = build_corpus(120)
    start = time.monotonic()
    result = scan_corpus(corpus, claims=SCAN_CLAIMS, keep_limit=20000,
                         description="family corpus, max_order=120")
    elapsed = time.monotonic() - start
    return result, elapsed, len(corpus)


def test_a1_remark_fixture_sym4():
    start = time.monotonic()
    S4 = symmetric_group(4)
    witnesses = find_factorizations(S4, require_mut_perm=True)
    pairs = [w for w in witnesses if {w.a.order(), w.b.order()} == {12, 8}]
    assert pairs, "factorization {A4, D8} not discovered"
    w = pairs[0]
    A = w.a if w.a.order() == 12 else w.b
    B = w.b if w.a.order() == 12 else w.a
    assert is_mutually_permutable(S4, A, B).holds
    assert tau_p_group(A.group, 2) == 2
    assert tau_p_group(B.group, 2) == 0
    assert p_length(S4, 2) == 2
    verdict = thm_1_1_check(S4, A, B, 2)
    assert verdict.preconditions_met
    assert verdict.precondition_detail["condition_b"]
    assert verdict.holds and verdict.lhs == verdict.rhs == 2
    elapsed = time.monotonic() - start
    _verdict_line(
        "A1 Sym(4) = Alt(4)*D8 fixture",
        elapsed < 10,
        f"equality 2 = 1 + 2/2 confirmed in {elapsed:.2f}s (< 10s)",
    )


def test_a2_remark_fixture_sym3():
    start = time.monotonic()
    S3 = symmetric_group(3)
    C3 = S3.subgroup([Perm([1, 2, 0])], name="C3")
    C2 = S3.subgroup([Perm([1, 0, 2])], name="C2")
    assert fitting_length(S3) == 2
    assert derived_length(S3) == 2
    vb = thm_1_2b_check(S3, C3, C2)
    assert vb.holds and vb.lhs == vb.rhs == 4  # dl(G/Phi) = 2 = 2 + 6 g(0)
    assert vb.inputs["dl_mod_frattini"] == 2
    va = thm_1_2a_check(S3, C3, C2)
    assert va.holds and (va.lhs, va.rhs) == (36, 81)  # 2 <= 4 + 2 log3(1/2)
    elapsed = time.monotonic() - start
    _verdict_line(
        "A2 Sym(3) = C3*C2 fixture",
        elapsed < 5,
        f"F_l = dl = 2, derived bound equality, in {elapsed:.2f}s (< 5s)",
    )


def test_a3_theorem_regression_scan(corpus_scan):
    result, elapsed, size = corpus_scan
    theorem_claims = ("thm_1_1", "thm_1_2a", "thm_1_2b", "lemma_2_7", "hall",
                      "zhang_pnilp")
    failures = {c: result.claim_stats.get(c, {}).get("failed", 0)
                for c in theorem_claims}
    checked = {c: result.claim_stats.get(c, {}).get("checked", 0)
               for c in theorem_claims}
    assert all(n > 0 for n in checked.values()), checked
    _verdict_line(
        "A3 theorem regression scan (max_order 120)",
        sum(failures.values()) == 0 and elapsed <= SCAN_BUDGET_SECONDS,
        f"{size} groups, checked {sum(checked.values())} theorem instances, "
        f"0 failures expected got {sum(failures.values())}, "
        f"{elapsed:.0f}s (budget {SCAN_BUDGET_SECONDS}s)",
    )


def test_a4_lemma_2_6_split_extensions():
    S4 = symmetric_group(4)
    instances = [
        ("S4 = V4:S3, q=3",
         S4,
         S4.subgroup([Perm([1, 0, 3, 2]), Perm([2, 3, 0, 1])], name="V4"),
         S4.subgroup([Perm([1, 2, 0, 3]), Perm([1, 0, 2, 3])], name="S3"),
         3),
        ("(C3xC3):C2, q=2",
         semidirect_c3c3_c2(),
         semidirect_c3c3_c2().subgroup([Perm([1, 2, 0, 3, 4, 5]),
                                        Perm([0, 1, 2, 4, 5, 3])]),
         semidirect_c3c3_c2().subgroup([Perm([0, 2, 1, 3, 5, 4])]),
         2),
        ("S3 = C3:C2, q=2",
         symmetric_group(3),
         symmetric_group(3).subgroup([Perm([1, 2, 0])]),
         symmetric_group(3).subgroup([Perm([1, 0, 2])]),
         2),
        ("A4 = V4:C3, q=3",
         alternating_group(4),
         alternating_group(4).subgroup([Perm([1, 0, 3, 2]),
                                        Perm([2, 3, 0, 1])]),
         alternating_group(4).subgroup([Perm([1, 2, 0, 3])]),
         3),
        ("D10 = C5:C2, q=2",
         dihedral_group(10),
         dihedral_group(10).subgroup([Perm([1, 2, 3, 4, 0])]),
         dihedral_group(10).subgroup([Perm([0, 4, 3, 2, 1])]),
         2),
        ("F20 = C5:C4, q=2",
         frobenius_20(),
         frobenius_20().subgroup([Perm([1, 2, 3, 4, 0])]),
         frobenius_20().subgroup([Perm([0, 2, 4, 1, 3])]),
         2),
        ("C7:C3, q=3",
         c7_c3(),
         c7_c3().subgroup([Perm([1, 2, 3, 4, 5, 6, 0])]),
         c7_c3().subgroup([Perm([0, 2, 4, 6, 1, 3, 5])]),
         3),
    ]
    results = []
    for label, G, A, H, q in instances:
        # instances must be genuine split extensions: A normal p-group with
        # complement H inside its own ambient group
        A = G.subgroup(A.generators)
        H = G.subgroup(H.generators)
        v = lemma_2_6_check(G, A, H, q)
        results.append((label, v))
        assert v.preconditions_met, (label, v.precondition_detail)
        assert v.holds, (label, v.lhs, v.rhs)
    _verdict_line(
        "A4 index identity |H:N_H(Q)| = |G:A N_G(Q)|",
        len(results) >= 5,
        f"{len(results)} split extensions, all exact equalities",
    )


def test_a5_bea_lemma_suite(corpus_scan):
    result, _, _ = corpus_scan
    bea_claims = ("bea_2_1", "bea_2_2", "bea_2_3", "bea_2_4", "bea_2_5")
    failed = sum(result.claim_stats.get(c, {}).get("failed", 0)
                 for c in bea_claims)
    checked = sum(result.claim_stats.get(c, {}).get("checked", 0)
                  for c in bea_claims)
    assert checked > 0
    _verdict_line(
        "A5 structural lemma suite on every mutually permutable factorization",
        failed == 0,
        f"{checked} lemma instances checked, {failed} failures",
    )


def test_a6_oracle_equivalence():
    # stabilizer-chain order vs exhaustive closure, up to order 5000
    named = build_corpus(5000, families={"symmetric", "alternating", "cyclic",
                                         "dihedral", "elementary_abelian"})
    with_products = build_corpus(120)
    mismatch = [g.name for g in named + with_products
                if g.chain.order() != len(g.elements())]
    assert not mismatch, mismatch

    # Sylow number via normalizer index vs conjugate counting
    sylow_corpus = with_products + [symmetric_group(6), alternating_group(6)]
    bad = []
    for G in sylow_corpus:
        for p in G.prime_divisors():
            if sylow_number(G, p) != sylow_conjugate_count(G, p):
                bad.append((G.name, p))
        G._cache.clear()
    assert not bad, bad

    # lattice vs brute-force subset closure on every corpus group of
    # order <= 24 (in particular Sym(4) with its 30 subgroups)
    from test_lattice import subgroup_sets_oracle

    small = [g for g in build_corpus(24)]
    for G in small:
        lattice_keys = {s.key for s in all_subgroups(G).subgroups}
        oracle = subgroup_sets_oracle(G)
        assert lattice_keys == oracle, G.name
        if G.name == "S4":
            assert len(lattice_keys) == 30
        G._cache.clear()
    _verdict_line(
        "A6 oracle equivalence (chain/enumeration, Sylow dual, lattice)",
        True,
        f"{len(named) + len(with_products)} order checks, "
        f"{len(sylow_corpus)} Sylow cross-checks, "
        f"{len(small)} lattice closures",
    )


def test_a7_negative_controls():
    A5 = alternating_group(5)
    A4 = A5.subgroup([Perm([1, 2, 0, 3, 4]), Perm([0, 2, 3, 1, 4])], name="A4")
    C5 = A5.subgroup([Perm([1, 2, 3, 4, 0])], name="C5")
    w = is_mutually_permutable(A5, A4, C5)
    assert w.product_covers and not w.holds

    assert derived_length(A5) is None
    assert not is_solvable(A5)
    assert not is_p_solvable(A5, 2)

    S4 = symmetric_group(4)
    zhang = {v.inputs["p"]: v for v in zhang_p_nilpotency_check(S4)}
    assert sylow_number(S4, 3) == 4
    assert not zhang[2].inputs["coprime"]       # 2 divides n_3 = 4
    assert not zhang[2].inputs["p_nilpotent"]
    assert zhang[2].holds                        # criterion and truth agree
    _verdict_line(
        "A7 negative controls (Alt(5) product, non-solvability, Zhang flag)",
        True,
        "Alt(4)*C5 rejected; dl(A5) undefined; S4 not 2-nilpotent via n_3 = 4",
    )


def test_a8_conjecture_scan(corpus_scan):
    result, _, _ = corpus_scan
    conj = result.claim_stats.get("conj_1_4", {})
    assert conj.get("checked", 0) > 0
    witness = [e for e in result.equality_instances
               if e.get("claim_id") == "conj_1_4"
               and e.get("group") == "S4" and e.get("p") == 2
               and {e.get("A_order"), e.get("B_order")} == {8, 12}
               and e.get("lhs") == e.get("rhs") == 2]
    _verdict_line(
        "A8 unconditional p-length bound scan (max_order 120)",
        conj.get("failed", 0) == 0 and bool(witness),
        f"checked {conj.get('checked', 0)} instances, 0 violations, "
        f"Sym(4) equality witness present",
    )
