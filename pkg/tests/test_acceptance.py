"""One test per acceptance criterion; each prints a PASS/FAIL line.

The lines are collected and repeated in the terminal summary, so they are
visible even when pytest captures output.
"""

import itertools
import time

import numpy as np
import pytest

import oracles
from acta import io
from acta.classify import cofaithful_witness, right_annihilator, subgenerator_witness
from acta.claims import universe_report
from acta.cogen import enumerate_homs, is_generator
from acta.congruence import all_congruences, principal_congruence
from acta.universe import build_universe
from conftest import ACCEPTANCE_LINES, DATA


def report_line(n: int, ok: bool, detail: str) -> None:
    line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


@pytest.fixture(scope="module")
def full_report():
    t = time.perf_counter()
    U = build_universe()
    rep = universe_report(U)
    return U, rep, time.perf_counter() - t


def claim(rep, name):
    return next(c for c in rep["claims"] if c["claim"] == name)


def test_criterion_01_example():
    t = time.perf_counter()
    A = io.load_act(DATA / "act_ef0.json")
    M = A.monoid
    ef = [A.names.index("e"), A.names.index("f")]
    ann_diag = right_annihilator(A, ef).is_diagonal
    w = cofaithful_witness(A)
    sub = subgenerator_witness(A)
    gen = is_generator(A)
    elapsed = time.perf_counter() - t
    ok = ann_diag and w is not None and w.n == 2 and sub is None and not gen and elapsed < 1.0
    report_line(
        1, ok,
        f"R_S({{e,f}}) = Δ: {ann_diag}, cofaithful n = {w.n if w else None}, "
        f"subgenerator: {sub is not None}, generator: {gen}, {elapsed:.3f} s (|S| = {M.size})",
    )
    assert ok


def test_criterion_02_chain(full_report):
    U, rep, elapsed = full_report
    ch = claim(rep, "chain")
    gaps = {g["gap"]: g for g in rep["gaps"]}
    witnessed = gaps["cofaithful-not-subgenerator"]["witness"] is not None and gaps["subgenerator-not-generator"]["witness"] is not None
    absent = gaps["faithful-not-cofaithful"]["witness"] is None
    ok = not ch["violations"] and ch["checked"] == U.num_acts and witnessed and absent and elapsed < 300
    report_line(
        2, ok,
        f"{ch['checked']} acts, {len(ch['violations'])} chain violations, both strict gaps witnessed: {witnessed}, "
        f"faithful∧¬cofaithful absent: {absent}, full harness {elapsed:.1f} s",
    )
    assert ok


def test_criterion_03_faithful_cogenerates(full_report):
    """Checked literally over coproducts of up to three summands eS."""
    _, rep, _ = full_report
    reg = claim(rep, "faithful-cogenerates-regular")
    proj = claim(rep, "faithful-cogenerates-projectives")
    ok = not reg["violations"] and not proj["violations"]
    detail = (
        f"faithful ⟺ cogenerates S_S: {len(reg['violations'])} violations / {reg['checked']}; "
        f"⟺ cogenerates all coproducts of ≤ 3 eS: {len(proj['violations'])} violations / {proj['checked']}"
    )
    if proj["violations"]:
        v = proj["violations"][0]
        detail += f"; first: monoid {v['monoid']} act {v['action']} fails on {v['details'].get('first_failing_projective')}"
    report_line(3, ok, detail)
    assert ok, detail


def test_criterion_04_cotrace_minimality(full_report):
    """Both directions of cogenerates(𝒞, A/θ) ⟺ θ ⊇ cotr, checked literally."""
    _, rep, _ = full_report
    least = claim(rep, "cotrace-least")
    both = claim(rep, "cotrace-minimality")
    ok = not least["violations"] and not both["violations"]
    detail = (
        f"⟹ and least element: {len(least['violations'])} violations / {least['checked']}; "
        f"⟸: {len(both['violations'])} violations / {both['checked']}"
    )
    if both["violations"]:
        v = both["violations"][0]
        d = v["details"]
        detail += f"; first: monoid {v['monoid']} act {v['action']} class {d['cls']} θ {d['theta']}"
    report_line(4, ok, detail)
    assert ok, detail


def test_criterion_05_closure_and_sandwich(full_report):
    _, rep, _ = full_report
    names = ["cog-subobject-closure", "cog-product-closure", "cog-sandwich"]
    parts = [claim(rep, n) for n in names]
    ok = all(not c["violations"] and c["checked"] > 0 for c in parts)
    report_line(5, ok, ", ".join(f"{c['claim']}: {len(c['violations'])} / {c['checked']}" for c in parts))
    assert ok


def test_criterion_06_si_consistency(full_report):
    _, rep, _ = full_report
    c = claim(rep, "si-consistency")
    ok = not c["violations"] and c["confirmed"] > 0
    report_line(6, ok, f"{len(c['violations'])} violations / {c['checked']} ({c['skipped']} one-element acts skipped)")
    assert ok


def test_criterion_07_birkhoff(full_report):
    _, rep, _ = full_report
    c = claim(rep, "birkhoff")
    ok = not c["violations"] and c["confirmed"] == c["checked"] - c["skipped"] > 0
    report_line(7, ok, f"{len(c['violations'])} violations / {c['checked'] - c['skipped']} acts with |A| ≥ 2")
    assert ok


def test_criterion_08_radical_embedding(full_report):
    _, rep, _ = full_report
    c = claim(rep, "radical-embedding")
    split = len(c.get("notes", []))
    ok = not c["violations"] and c["confirmed"] > 0
    report_line(
        8, ok,
        f"{len(c['violations'])} violations, {c['confirmed']} confirmed, {c['skipped']} skipped "
        f"({split} with a split maximal subact logged)",
    )
    assert ok


def test_criterion_09_oracles(universe):
    hom_pairs = cong_acts = principal_pairs = 0
    mismatches = []
    for i, (M, acts) in enumerate(zip(universe.monoids, universe.acts)):
        for A, B in itertools.product(acts, repeat=2):
            got = sorted(h.map for h in enumerate_homs(A, B))
            if got != oracles.homs_vectorised(A.action.tolist(), B.action.tolist()):
                mismatches.append(("homs", i))
            hom_pairs += 1
        for A in acts:
            action = A.action.tolist()
            lattice = oracles.congruences(action)
            if M.size <= 3:
                cong_acts += 1
                if {c.labels for c in all_congruences(A)} != lattice:
                    mismatches.append(("congruences", i))
            for a, b in itertools.combinations(range(A.size), 2):
                rel = None
                for lab in lattice:
                    if lab[a] == lab[b]:
                        r = oracles.relation(lab)
                        rel = r if rel is None else rel & r
                expect = tuple(min(y for y in range(A.size) if (x, y) in rel) for x in range(A.size))
                principal_pairs += 1
                if principal_congruence(A, a, b).labels != expect:
                    mismatches.append(("principal", i))
    ok = not mismatches
    report_line(
        9, ok,
        f"{hom_pairs} hom pairs, {cong_acts} congruence lattices, {principal_pairs} principal congruences; "
        f"{len(mismatches)} mismatches",
    )
    assert ok, mismatches[:5]


def test_criterion_10_socle_report(full_report):
    U, rep, _ = full_report
    c = claim(rep, "socle-large")
    flagged = len(c["violations"])
    consistent = c["checked"] == c["confirmed"] + c["skipped"] + flagged == U.num_acts
    listed = all("action" in v for v in c["violations"])
    ok = consistent and listed
    report_line(
        10, ok,
        f"report-only: {c['checked']} checked = {c['confirmed']} confirmed + {c['skipped']} skipped + {flagged} flagged",
    )
    assert ok


def test_criterion_11_determinism(full_report):
    _, rep, _ = full_report
    again = universe_report(build_universe())
    a, b = io.dumps(rep), io.dumps(again)
    ok = a == b
    report_line(11, ok, f"two full runs, {len(a.encode())} bytes each, byte-identical: {ok}")
    assert ok
