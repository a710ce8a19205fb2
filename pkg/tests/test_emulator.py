from symwasm import emulator as E
from symwasm import terms as T
from symwasm.engine import Engine, RunConfig
from symwasm.solver import solve_fresh
from symwasm.state import TRAPPED
from wasmgen import F64, I32, ModuleBuilder, i32c

INT_MIN = 0x80000000


def explore(b, **cfg):
    return Engine(b.load(), RunConfig(entry="f", **cfg)).explore()


def witness(s):
    r = solve_fresh(s.path_condition.preds)
    assert r.sat
    return r.model


def outcome(s):
    return s.trap if s.status == TRAPPED else "ok"


def test_signed_division_partitions_into_three():
    b = ModuleBuilder()
    b.func([I32, I32], [I32], [(0x20, 0), (0x20, 1), (0x6D,)], export="f")
    states = explore(b)
    kinds = {outcome(s): s for s in states}
    assert set(kinds) == {E.DIV_ZERO, E.OVERFLOW, "ok"}
    assert witness(kinds[E.DIV_ZERO])["param_1"] == 0
    m = witness(kinds[E.OVERFLOW])
    assert (m["param_0"], m["param_1"]) == (INT_MIN, 0xFFFFFFFF)


def test_unsigned_division_has_no_overflow_class():
    b = ModuleBuilder()
    b.func([I32, I32], [I32], [(0x20, 0), (0x20, 1), (0x6E,)], export="f")
    assert sorted(outcome(s) for s in explore(b)) == sorted([E.DIV_ZERO, "ok"])


def test_br_table_forks_per_label():
    b = ModuleBuilder()
    body = [(0x02, 0x40), (0x02, 0x40), (0x02, 0x40), (0x02, 0x40),
            (0x20, 0), (0x0E, (0, 1, 2), 3), (0x0B,),
            i32c(10), (0x0F,), (0x0B,),
            i32c(11), (0x0F,), (0x0B,),
            i32c(12), (0x0F,), (0x0B,),
            i32c(13)]
    b.func([I32], [I32], body, export="f")
    states = explore(b)
    assert len(states) == 4
    for s in states:
        idx = witness(s)["param_0"]
        assert s.exit_code.value == 10 + min(idx, 3)


def test_call_indirect_successor_classes():
    b = ModuleBuilder()
    good = b.func([], [I32], [i32c(7)])
    wrong = b.func([I32], [I32], [(0x20, 0)])
    b.table(4, [good, wrong])  # slots 2 and 3 stay empty
    ti = b.type([], [I32])
    b.func([I32], [I32], [(0x20, 0), (0x11, ti)], export="f")
    states = explore(b)
    by = {outcome(s): s for s in states}
    assert set(by) == {"ok", E.INDIRECT_MISMATCH, E.UNINITIALIZED_ELEMENT, E.UNDEFINED_ELEMENT}
    assert witness(by["ok"])["param_0"] == 0 and by["ok"].exit_code.value == 7
    assert witness(by[E.INDIRECT_MISMATCH])["param_0"] == 1
    assert witness(by[E.UNINITIALIZED_ELEMENT])["param_0"] in (2, 3)
    assert witness(by[E.UNDEFINED_ELEMENT])["param_0"] >= 4


def test_call_stack_exhaustion():
    b = ModuleBuilder()
    b.func([I32], [I32], [(0x20, 0), (0x10, 0)], export="f")
    (s,) = explore(b, max_call_depth=8)
    assert s.trap == E.STACK_EXHAUSTED


def test_float_to_int_traps():
    b = ModuleBuilder()
    b.func([F64], [I32], [(0x20, 0), (0xAA,)], export="f")  # i32.trunc_f64_s
    states = explore(b)
    kinds = sorted(outcome(s) for s in states)
    assert kinds == sorted([E.BAD_CONVERSION, E.OVERFLOW, "ok"])


def test_concrete_operands_do_not_fork():
    b = ModuleBuilder()
    body = [i32c(7), i32c(2), (0x6D,), i32c(3), (0x6C,)]
    b.func([], [I32], body, export="f")
    eng = Engine(b.load(), RunConfig(entry="f"))
    (s,) = eng.explore()
    assert s.exit_code == T.bv32(9)
    assert eng.solver.stats()["queries"] == 0
