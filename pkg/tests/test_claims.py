import pytest

from acta.act import regular_act
from acta.claims import (
    CLAIMS,
    GAPS,
    HARD,
    REPORT,
    ClaimResult,
    Context,
    find_counterexample,
    projective_family,
    run_claims,
    universe_report,
)
from acta.cogen import is_generator
from acta.classify import cofaithful_witness, subgenerator_witness
from acta.act import Act
from acta.monoid import build_named_semilattice_1oef, validate_monoid
from acta.universe import build_universe


@pytest.fixture(scope="module")
def small():
    return build_universe(2, 3, named=False)


def test_result_bookkeeping():
    r = ClaimResult("x", HARD)
    r.confirm(3)
    r.skip(2, {"why": "n/a"})
    r.violate({"monoid": 0})
    assert (r.checked, r.confirmed, r.skipped) == (6, 3, 2)
    assert r.consistent and r.failed
    j = r.to_json()
    assert j["notes"] == [{"why": "n/a"}] and len(j["violations"]) == 1
    assert not ClaimResult("y", REPORT, 1, 0, 0, [{}]).failed


def test_all_claims_on_small_universe(small):
    results = run_claims(small)
    assert [r.claim for r in results] == list(CLAIMS)
    for r in results:
        assert r.consistent, r.claim
        assert r.checked > 0, r.claim
        if r.mode == HARD:
            assert not r.violations, (r.claim, r.violations[:1])


def test_claim_selection_and_errors(small):
    ctx = Context(small)
    res = run_claims(small, ["birkhoff", "chain"], ctx=ctx)
    assert [r.claim for r in res] == ["birkhoff", "chain"]
    with pytest.raises(KeyError):
        run_claims(small, ["no-such-claim"])


def test_parallel_matches_serial(small):
    names = ["chain", "socle-large", "si-consistency"]
    a = [r.to_json() for r in run_claims(small, names)]
    b = [r.to_json() for r in run_claims(small, names, jobs=2)]
    assert a == b


def test_projective_family():
    M = build_named_semilattice_1oef()
    single = projective_family(M, 1)
    # eS for e in {1, 0, e, f}, pairwise non-isomorphic
    assert sorted(P.size for P in single) == [1, 2, 2, 4]
    assert len(projective_family(M, 2)) == 4 + 10


def test_report_structure(small):
    rep = universe_report(small, ["chain"], gaps=False)
    assert set(rep) == {"universe", "claims", "hard_violations"}
    assert rep["hard_violations"] == 0
    assert rep["universe"]["acts"] == small.num_acts


def test_gap_witnesses():
    w = find_counterexample("cofaithful-not-subgenerator", 3, 2)
    assert w["monoid"] == [[0, 0, 2], [0, 1, 2], [0, 2, 2]]
    M = validate_monoid(w["monoid"])
    A = Act(M, w["action"])
    assert cofaithful_witness(A) is not None and subgenerator_witness(A) is None
    w = find_counterexample("subgenerator-not-generator", 3, 3)
    A = Act(validate_monoid(w["monoid"]), w["action"])
    assert subgenerator_witness(A) is not None and not is_generator(A)
    assert find_counterexample("faithful-not-cofaithful", 2, 3) is None
    with pytest.raises(KeyError):
        find_counterexample("nope")
    assert set(GAPS) == {"cofaithful-not-subgenerator", "subgenerator-not-generator", "faithful-not-cofaithful"}


def test_regular_acts_generate(small):
    for M in small.monoids:
        assert is_generator(regular_act(M))
