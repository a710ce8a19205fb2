import json

import pytest

import corpus
from symwasm import terms as T
from symwasm.engine import SELECTORS, Engine, RunConfig, make_selector
from symwasm.state import ExecState
from wasmgen import I32, ModuleBuilder, i32c


def outcome_set(sols):
    return sorted((s.status["kind"], s.return_value, s.stdout, s.stderr) for s in sols)


def test_selectors_order():
    states = [ExecState() for _ in range(3)]
    bfs = make_selector("bfs")
    dfs = make_selector("dfs")
    for s in states:
        bfs.add(s)
        dfs.add(s)
    assert bfs.pick() is states[0]
    assert dfs.pick() is states[2]
    rnd = make_selector("random", seed=3)
    for s in states:
        rnd.add(s)
    assert {rnd.pick(), rnd.pick(), rnd.pick()} == set(states)
    assert rnd.size() == 0
    with pytest.raises((KeyError, ValueError)):
        make_selector("nope")


@pytest.mark.parametrize("selector", sorted(SELECTORS))
def test_selectors_agree_on_outcomes(selector):
    p = corpus.program("p01_nested_if")
    _, base = corpus.explore(p)
    _, sols = corpus.explore(p, "--selector", selector, "--seed", "4")
    assert outcome_set(sols) == outcome_set(base)


def test_runs_are_deterministic():
    p = corpus.program("p08_two_chars")
    _, a = corpus.explore(p)
    _, b = corpus.explore(p)
    assert [json.dumps(s.to_json(), sort_keys=True) for s in a] == \
        [json.dumps(s.to_json(), sort_keys=True) for s in b]


def test_max_states_bounds_reported_paths():
    p = corpus.program("p04_search")
    _, full = corpus.explore(p)
    _, capped = corpus.explore(p, "--max-states", "2")
    finished = [s for s in capped if s.status["kind"] != "parked"]
    assert len(full) > 3
    assert len(finished) == 2
    # unfinished states are still reported, marked as parked on the budget
    assert all(s.status == {"kind": "parked", "detail": "budget"}
               for s in capped if s not in finished)


def test_max_depth_parks_deep_paths():
    p = corpus.program("p04_search")
    _, sols = corpus.explore(p, "--max-depth", "1")
    assert any(s.status == {"kind": "parked", "detail": "budget"} for s in sols)


def test_symbolic_exit_code_is_split():
    p = corpus.program("p13_select")
    eng, sols = corpus.explore(p)
    assert all(s.return_value is None or s.return_value.lstrip("-").isdigit() for s in sols)
    codes = {s.return_value for s in sols}
    assert len(codes) >= 2


def test_function_entry_result_stays_symbolic():
    b = ModuleBuilder()
    b.func([I32], [I32], [(0x20, 0), i32c(3), (0x6A,)], export="f")
    eng = Engine(b.load(), RunConfig(entry="f"))
    (s,) = eng.explore()
    assert s.exit_code.op is not T.CONST


def test_solution_json_shape():
    p = corpus.program("pwd")
    eng, sols = corpus.explore(p)
    found = [s for s in sols if s.stdout == b"Password found!\n"]
    assert len(found) == 1
    d = found[0].to_json()
    assert d["Return"] == "0"
    assert d["Solution"]["sym_arg_1"] == "hello"
    assert {"Return", "Solution", "Output"} <= set(d)
