import pytest

from symwasm import terms as T
from symwasm.errors import StackSortMismatch, StackUnderflow
from symwasm.external.fs import SymFileSystem
from symwasm.memory import SymMemory
from symwasm.pathcond import PathCondition
from symwasm.solver import SolverPool
from symwasm.state import EXITED, PARKED, RUNNING, TRAPPED, ExecState, fork, fork_indexed

x = T.var("x", T.BV32)


def make_state():
    mem = SymMemory(pages=1)
    mem._place(0, b"abcd")
    return ExecState(memory=mem, fs=SymFileSystem.standard(stdin=[T.bv(0x41, 8)]))


def test_stack_discipline():
    s = ExecState()
    s.push(T.bv32(1))
    with pytest.raises(StackSortMismatch):
        s.pop(T.BV64)
    assert s.pop(T.BV32) == T.bv32(1)
    with pytest.raises(StackUnderflow):
        s.pop()


def test_status_transitions():
    s = ExecState()
    assert s.running and s.status == RUNNING
    s.set_exit(T.bv32(3))
    assert s.status == EXITED and s.exit_code == T.bv32(3)
    t = ExecState()
    t.set_trap("unreachable")
    assert t.status == TRAPPED and t.trap == "unreachable"
    u = ExecState()
    u.park("solver")
    assert u.status == PARKED and u.park_reason == "solver"


def test_clone_is_independent():
    s = make_state()
    s.push(x)
    s.globals.append(T.bv32(7))
    c = s.clone()
    c.push(T.bv32(1))
    c.globals[0] = T.bv32(8)
    c.memory.write(0, 1, T.bv(0x7A, 8))
    c.fs.write(1, [T.bv(0x21, 8)])
    c.warn("child only")
    assert len(s.stack) == 1 and s.globals[0] == T.bv32(7)
    assert s.memory.read_concrete_bytes(0, 4) == b"abcd"
    assert c.memory.read_concrete_bytes(0, 4) == b"zbcd"
    assert s.fs.stream(1) == [] and len(c.fs.stream(1)) == 1
    assert s.warnings == []
    assert c.parent_id == s.id and c.id != s.id


def test_fs_cursor_is_per_fork():
    s = make_state()
    c = s.clone()
    assert [b.value for b in c.fs.read(0, 4)] == [0x41]
    assert c.fs.read(0, 4) == []
    assert [b.value for b in s.fs.read(0, 4)] == [0x41]


def test_fork_appends_exactly_one_constraint():
    s = make_state()
    s.add_constraint(T.ult(x, T.bv32(10)))
    base = s.path_condition.preds
    lt5, ge5, big = T.ult(x, T.bv32(5)), T.uge(x, T.bv32(5)), T.ugt(x, T.bv32(100))
    pairs = fork_indexed(s, [lt5, ge5, big], SolverPool())
    assert [i for i, _ in pairs] == [0, 1]  # x > 100 contradicts x < 10
    for i, child in pairs:
        assert child.path_condition.preds == base + ([lt5, ge5][i],)
    assert pairs[-1][1] is s  # the last feasible child reuses the parent
    assert all(c.fork_depth == 1 for _, c in pairs)


def test_fork_single_successor_keeps_depth():
    s = make_state()
    (c,) = fork(s, [T.TRUE], SolverPool())
    assert c is s and c.fork_depth == 0


def test_exhaustive_fork_skips_last_query():
    s = make_state()
    s.add_constraint(T.eq(x, T.bv32(3)))
    pool = SolverPool()
    out = fork(s, [T.eq(x, T.bv32(4)), T.not_(T.eq(x, T.bv32(4)))], pool, exhaustive=True)
    assert len(out) == 1
    assert pool.stats()["queries"] == 1


def test_path_condition_splits_conjunctions():
    pc = PathCondition().append(T.and_(T.ult(x, T.bv32(3)), T.ugt(x, T.bv32(1))))
    assert len(pc) == 2
    assert pc.append(T.TRUE) is pc
    child = pc.append(T.eq(x, T.bv32(2)))
    assert child.parent_key == pc.key
    with pytest.raises(T.SortError):
        pc.append(x)


def test_fresh_vars_are_unique_per_state():
    s = ExecState()
    a, b = s.fresh_var("v", T.BV32), s.fresh_var("v", T.BV32)
    assert a != b
