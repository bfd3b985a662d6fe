import itertools

import pytest

from contweak import chain
from contweak.algebra import (
    IRL_LAWS, LBS_LAWS, algebra_from_table, check_involutive_rl_axioms, check_lbs_axioms,
    get_algebra, residual_left, run_laws,
)
from contweak.chain import ChainFn
from contweak.errors import StructureError

FINITE = ["bool", "sugihara", "chain:1", "chain:2"]


def all_reports(Q, **kw):
    return check_lbs_axioms(Q, **kw) + check_involutive_rl_axioms(Q, **kw)


@pytest.mark.parametrize("tag", FINITE)
def test_finite_algebras_pass_exhaustively(tag):
    reports = all_reports(get_algebra(tag))
    assert all(r.passed for r in reports), [str(r) for r in reports if not r.passed]
    assert all(r.exhaustive for r in reports)


def test_hemidistributive_case_count_on_chain2():
    (rep,) = [r for r in check_lbs_axioms(get_algebra("chain:2")) if r.law == "hemidistr1"]
    assert rep.passed and rep.cases == 6 ** 4


def test_law_names_cover_the_suite():
    names = {law.name for law in LBS_LAWS}
    assert {"hemidistr1p", "hemidistr2p", "hemidistr1", "hemidistr2", "mix"} <= names
    assert {"residuation", "star_involution", "zero_is_star_one", "mix_units"} <= {l.name for l in IRL_LAWS}


def test_step_sampled_and_unit_laws_skipped():
    Q = get_algebra("step")
    reports = all_reports(Q, budget=300, seed=5)
    assert all(r.passed for r in reports)
    assert all(not r.exhaustive and r.seed == 5 for r in reports)
    names = {r.law for r in reports}
    assert "tensor_unit" not in names and "mix_units" not in names


@pytest.mark.slow
def test_step_residuation_ten_thousand_triples():
    (law,) = [law for law in IRL_LAWS if law.name == "residuation"]
    (rep,) = run_laws(get_algebra("step"), [law], budget=10_000)
    assert rep.passed and rep.cases == 10_000


def test_chain_units():
    Q = get_algebra("chain:2")
    assert Q.unit0 == ChainFn(2, (0, 1)) == Q.star(Q.unit1)


def test_bool_units():
    Q = get_algebra("bool")
    assert (Q.unit1, Q.unit0) == (1, 0)
    assert Q.star(Q.unit1) == Q.unit0 and Q.leq(Q.unit0, Q.unit1)


def brute_residual(Q, a, b):
    cands = [c for c in Q.elements if Q.leq(Q.tensor(a, c), b)]
    (best,) = [c for c in cands if all(Q.leq(e, c) for e in cands)]
    return best


@pytest.mark.parametrize("tag", FINITE + ["chain:3"])
def test_residual_is_largest_solution(tag):
    Q = get_algebra(tag)
    for a, b in itertools.product(Q.elements, repeat=2):
        assert residual_left(Q, a, b) == brute_residual(Q, a, b)


def test_residual_examples():
    assert residual_left(get_algebra("bool"), 1, 0) == 0
    Q = get_algebra("chain:2")
    for f in Q.elements:
        assert residual_left(Q, chain.identity(2), f) == f
    # (0,1) (x) c <= bottom forces c(1) = 0, leaving c = (0,2) as the largest choice
    assert residual_left(Q, ChainFn(2, (0, 1)), ChainFn(2, (0, 0))) == ChainFn(2, (0, 2))


@pytest.mark.parametrize("tag", FINITE)
def test_star_sends_joins_to_meets(tag):
    Q = get_algebra(tag)
    for a, b in itertools.product(Q.elements, repeat=2):
        assert Q.star(Q.join(a, b)) == Q.meet(Q.star(a), Q.star(b))


def test_sugihara_tables():
    Q = get_algebra("sugihara")
    assert [Q.tensor(0, b) for b in (-1, 0, 1)] == [-1, 0, 1]
    assert Q.oplus(-1, 1) == 1 and Q.tensor(-1, 1) == -1
    assert Q.unit1 == Q.unit0 == 0


BOOL_TABLE = {
    "carrier": 2,
    "leq": [[1, 1], [0, 1]],
    "tensor": [[0, 0], [0, 1]],
    "oplus": [[0, 1], [1, 1]],
    "star": [1, 0],
}


def test_table_algebra_passes():
    Q = algebra_from_table(BOOL_TABLE)
    assert (Q.bottom, Q.top, Q.unit1, Q.unit0) == (0, 1, 1, 0)
    assert all(r.passed for r in all_reports(Q))


def test_failure_counterexample_is_reproducible():
    # tensor = max is associative but does not send bottom to bottom
    table = dict(BOOL_TABLE, tensor=[[0, 1], [1, 1]])
    Q = algebra_from_table(table)
    (rep,) = [r for r in check_lbs_axioms(Q) if r.law == "tensor_bottom"]
    assert not rep.passed and rep.counterexample
    (law,) = [law for law in LBS_LAWS if law.name == "tensor_bottom"]
    assert not law.holds(Q, *rep.counterexample)


def test_non_closed_operation_is_named():
    table = dict(BOOL_TABLE, tensor=[[0, 0], [0, 2]])
    with pytest.raises(StructureError, match=r"tensor\(1, 1\)"):
        algebra_from_table(table)


def test_get_algebra_errors():
    with pytest.raises(ValueError):
        get_algebra("nope")
    with pytest.raises(ValueError):
        get_algebra("chain:x")


def test_bad_budget():
    with pytest.raises(ValueError):
        check_lbs_axioms(get_algebra("bool"), budget=0)
