import random

import pytest

from symwasm import floats
from symwasm import terms as T
from symwasm.pathcond import PathCondition
from symwasm.solver import SAT, UNSAT, SolverPool, decide_by_bindings, holds, solve_fresh

X = [T.var(f"x{i}", T.BV8) for i in range(4)]


def random_pred(rng):
    a = rng.choice(X)
    k = T.bv(rng.randrange(256), 8)
    op = rng.choice([T.ult, T.ugt, T.eq, T.ule, T.sge])
    p = op(a, k) if rng.random() < 0.7 else op(T.bvadd(a, rng.choice(X)), k)
    return T.not_(p) if rng.random() < 0.3 else p


def query_stream(rng, n):
    """Random walks that keep extending a prefix, with restarts and repeats."""
    out = []
    pc = []
    while len(out) < n:
        r = rng.random()
        if r < 0.08 or len(pc) > 10:
            pc = []
        elif r < 0.2 and out:
            out.append(list(rng.choice(out)))
            continue
        pc = pc + [random_pred(rng)]
        out.append(list(pc))
    return out


def test_pool_is_transparent_over_10k_queries():
    rng = random.Random(5)
    pool = SolverPool()
    queries = query_stream(rng, 10_000)
    for preds in queries:
        got = pool.query(preds)
        want = solve_fresh(preds)
        assert got.verdict == want.verdict
        if got.sat:
            assert holds(preds, got.model)
    st = pool.stats()
    assert st["queries"] == 10_000
    assert st["tier1"] + st["tier2"] + st["tier3"] > 0.5 * st["queries"]
    assert st["cold"] + st["incremental"] < 10_000


def test_disabled_pool_always_calls_the_backend():
    rng = random.Random(6)
    pool = SolverPool(enabled=False)
    qs = query_stream(rng, 200)
    for preds in qs:
        assert pool.query(preds).verdict == solve_fresh(preds).verdict
    st = pool.stats()
    assert st["tier1"] == st["tier2"] == st["tier3"] == 0
    assert st["cold"] == 200 - st["trivial"] - st["propagated"]


def test_tier1_exact_hit_is_order_independent():
    pool = SolverPool()
    a, b = T.ult(X[0], T.bv(5, 8)), T.ugt(X[1], T.bv(3, 8))
    pool.query([a, b])
    pool.query([b, a])
    assert pool.stats()["tier1"] == 1


def test_tier2_unsat_core_subsumes_supersets():
    pool = SolverPool()
    core = [T.ult(X[0], T.bv(5, 8)), T.ugt(X[0], T.bv(9, 8))]
    assert pool.query(core).verdict == UNSAT
    r = pool.query(core + [T.eq(X[1], T.bv(1, 8))])
    assert r.verdict == UNSAT
    assert pool.stats()["tier2"] == 1


def test_tier3_reuses_a_satisfiable_subset():
    pool = SolverPool()
    pc = PathCondition().append(T.ult(X[0], T.bv(100, 8)))
    assert pool.check(pc).sat
    before = pool.stats()["tier3"]
    child = pc.append(T.ugt(X[1], T.bv(7, 8)))
    r = pool.check(child)
    assert r.sat and holds(child.preds, r.model)
    assert pool.stats()["tier3"] == before + 1


def test_trivial_queries():
    pool = SolverPool()
    assert pool.query([]).sat
    assert pool.query([T.FALSE]).verdict == UNSAT
    assert pool.stats()["trivial"] == 2


def test_lru_eviction_keeps_answers_correct():
    rng = random.Random(9)
    pool = SolverPool(max_entries=8)
    for preds in query_stream(rng, 300):
        assert pool.query(preds).verdict == solve_fresh(preds).verdict
    assert pool.stats()["entries"] <= 8


def test_bounds_and_enumerate():
    pool = SolverPool()
    x = T.var("w", T.BV32)
    pc = PathCondition().append(T.ule(T.bv32(10), x), T.ult(x, T.bv32(14)))
    assert pool.bounds(pc, x) == (10, 13)
    assert pool.enumerate(pc, x, 8) == [10, 11, 12, 13]
    assert pool.enumerate(pc, x, 3) is None
    assert pool.may_be_true(pc, T.eq(x, T.bv32(12)))
    assert pool.must_be_true(pc, T.ult(x, T.bv32(20)))


def test_fp_queries_are_answered():
    pool = SolverPool()
    p = T.var("p", T.F64)
    two = T.f64(floats.from_float(2.0, 64))
    six = T.f64(floats.from_float(6.0, 64))
    q = [T.feq(T.fdiv(six, p), T.fdiv(six, two)), T.not_(T.fisnan(p))]
    r = pool.query(q)
    assert r.sat
    assert floats.to_float(r.model["p"], 64) == 2.0
    assert pool.query(q + [T.flt(p, two)]).verdict == UNSAT
    # a prefix-extending FP query goes through the cache as well
    assert pool.query(q + [T.fle(p, two)]).verdict == SAT


@pytest.mark.parametrize("seed", range(3))
def test_insert_records_external_results(seed):
    rng = random.Random(seed)
    pool = SolverPool()
    preds = [random_pred(rng) for _ in range(3)]
    res = solve_fresh(preds)
    pool.insert(preds, res)
    assert pool.query(preds).verdict == res.verdict
    assert pool.stats()["tier1"] == 1


def test_bindings_decide_without_a_solver():
    x, y = X[0], X[1]
    pin = T.eq(x, T.bv(7, 8))
    assert decide_by_bindings([pin, T.ult(x, T.bv(3, 8))]).verdict == UNSAT
    assert decide_by_bindings([pin, T.eq(x, T.bv(8, 8))]).verdict == UNSAT
    r = decide_by_bindings([pin, T.ult(x, T.bv(9, 8))])
    assert r.sat and r.model == {"x0": 7}
    assert decide_by_bindings([pin, T.ult(y, T.bv(9, 8))]) is None
    assert decide_by_bindings([T.ult(x, T.bv(9, 8))]) is None


def test_recent_models_answer_other_paths():
    pool = SolverPool()
    a = PathCondition().append(T.eq(T.bvadd(X[0], X[1]), T.bv(9, 8)))
    assert pool.check(a).sat
    backend = pool.stats()["backend"]
    # a different path whose condition the first model happens to satisfy
    b = PathCondition().append(T.ult(T.bvadd(X[0], X[1]), T.bv(10, 8)))
    r = pool.check(b)
    assert r.sat and holds(b.preds, r.model)
    assert pool.stats()["backend"] == backend
    assert pool.stats()["model_reuse"] >= 1


def test_root_queries_use_the_empty_base():
    pool = SolverPool()
    assert pool.query([T.ugt(X[2], T.bv(200, 8))]).sat
    st = pool.stats()
    assert st["cold"] == 0 and st["tier3"] == 1


def test_core_verification_counts_as_backend_calls():
    pool = SolverPool(verify_cores=True)
    pc = [T.ult(X[0], T.bv(5, 8)), T.ugt(X[1], T.bv(3, 8))]
    assert pool.query(pc).sat
    assert pool.query(pc + [T.ugt(X[0], T.bv(9, 8))]).verdict == UNSAT
    st = pool.stats()
    assert st["core_checks"] == 1
    assert st["backend"] == st["incremental"] + st["cold"] + st["core_checks"]
