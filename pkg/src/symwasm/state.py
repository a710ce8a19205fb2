"""Execution state of one explored path."""

import itertools

from symwasm import terms as T
from symwasm.binary import opcodes as oc
from symwasm.errors import StackSortMismatch, StackUnderflow
from symwasm.pathcond import PathCondition

RUNNING, EXITED, TRAPPED, PARKED = "running", "exited", "trapped", "parked"

SORT_OF = {oc.I32: T.BV32, oc.I64: T.BV64, oc.F32: T.F32, oc.F64: T.F64}
ZERO_OF = {oc.I32: T.bv32(0), oc.I64: T.bv64(0), oc.F32: T.f32(0), oc.F64: T.f64(0)}

_state_ids = itertools.count()


class Frame:
    __slots__ = ("func", "code", "locals", "ret_ip", "base", "arity")

    def __init__(self, func, code, locals_, ret_ip, base, arity):
        self.func = func
        self.code = code
        self.locals = locals_
        self.ret_ip = ret_ip
        self.base = base  # operand stack height when the frame was entered
        self.arity = arity

    def copy(self):
        return Frame(self.func, self.code, list(self.locals), self.ret_ip, self.base, self.arity)

    def __repr__(self):
        return f"Frame(func={self.func}, base={self.base})"


class ExecState:
    """Stack, frames, globals, memory, file system and path condition of one path."""

    __slots__ = ("ip", "stack", "frames", "globals", "memory", "fs", "path_condition",
                 "status", "exit_code", "trap", "park_reason", "fork_depth", "warnings",
                 "icount", "fresh", "inputs", "clock", "id", "parent_id", "result_types")

    def __init__(self, memory=None, fs=None, globals_=None, inputs=None):
        self.ip = 0
        self.stack = []
        self.frames = []
        self.globals = [] if globals_ is None else globals_
        self.memory = memory
        self.fs = fs
        self.path_condition = PathCondition()
        self.status = RUNNING
        self.exit_code = None
        self.trap = None
        self.park_reason = None
        self.fork_depth = 0
        self.warnings = []
        self.icount = 0
        self.fresh = 0
        self.inputs = {} if inputs is None else inputs  # shared, read-only after setup
        self.clock = None
        self.id = next(_state_ids)
        self.parent_id = None
        self.result_types = ()

    # -- program counter --------------------------------------------------

    @property
    def frame(self):
        return self.frames[-1]

    @property
    def pc(self):
        """``(function index, instruction offset)``."""
        if not self.frames:
            return (None, self.ip)
        return (self.frames[-1].func, self.ip)

    @property
    def running(self):
        return self.status == RUNNING

    # -- value stack --------------------------------------------------------

    def push(self, t):
        self.stack.append(t)

    def pop(self, sort=None):
        base = self.frames[-1].base if self.frames else 0
        if len(self.stack) <= base:
            raise StackUnderflow("pop from empty operand stack")
        t = self.stack[-1]
        if sort is not None and t.sort is not sort:
            raise StackSortMismatch(f"expected {sort}, found {t.sort}")
        return self.stack.pop()

    # -- bookkeeping ----------------------------------------------------------

    def fresh_var(self, prefix, sort):
        self.fresh += 1
        return T.var(f"{prefix}!{self.fresh}", sort)

    def warn(self, msg):
        if msg not in self.warnings:
            self.warnings.append(msg)

    def add_constraint(self, c):
        self.path_condition = self.path_condition.append(c)

    def set_trap(self, kind):
        self.status = TRAPPED
        self.trap = kind

    def set_exit(self, code):
        self.status = EXITED
        self.exit_code = code

    def park(self, reason):
        self.status = PARKED
        self.park_reason = reason

    # -- forking ----------------------------------------------------------------

    def clone(self):
        s = ExecState.__new__(ExecState)
        s.ip = self.ip
        s.stack = list(self.stack)
        s.frames = [f.copy() for f in self.frames]
        s.globals = list(self.globals)
        s.memory = self.memory.fork() if self.memory is not None else None
        s.fs = self.fs.fork() if self.fs is not None else None
        s.path_condition = self.path_condition
        s.status = self.status
        s.exit_code = self.exit_code
        s.trap = self.trap
        s.park_reason = self.park_reason
        s.fork_depth = self.fork_depth
        s.warnings = list(self.warnings)
        s.icount = self.icount
        s.fresh = self.fresh
        s.inputs = self.inputs
        s.clock = self.clock
        s.id = next(_state_ids)
        s.parent_id = self.id
        s.result_types = self.result_types
        return s

    def __repr__(self):
        return f"ExecState#{self.id}({self.status}, pc={self.pc}, |P|={len(self.path_condition)})"


def fork_indexed(s, constraints, solver, exhaustive=False):
    """Fork ``s`` on ``constraints``; returns ``[(index, child), ...]`` for feasible ones.

    Each child's path condition is the parent's plus exactly its constraint.
    The last feasible child reuses ``s`` itself. With ``exhaustive`` the
    constraints are known to cover the parent's feasible space, so when every
    earlier one is infeasible the last needs no solver call. A constraint the
    solver cannot decide yields a parked child.
    """
    pc = s.path_condition
    feasible = []
    n = len(constraints)
    for i, c in enumerate(constraints):
        if T.is_false(c):
            continue
        if T.is_true(c) or (exhaustive and i == n - 1 and not feasible):
            feasible.append((i, c, None))
            continue
        r = solver.query(pc.preds + tuple(_conjuncts(c)), hint=pc.key)
        if r.sat:
            feasible.append((i, c, None))
        elif r.verdict == "unknown":
            feasible.append((i, c, "solver"))
    out = []
    depth = s.fork_depth + (len(feasible) > 1)
    for k, (i, c, park) in enumerate(feasible):
        child = s if k == len(feasible) - 1 else s.clone()
        child.path_condition = pc.append(c)
        child.fork_depth = depth
        if park:
            child.park(park)
        out.append((i, child))
    return out


def _conjuncts(c):
    return c.args if c.op == "and" else (c,)


def fork(s, constraints, solver, exhaustive=False):
    """Feasible children of ``s``, one per satisfiable constraint (see :func:`fork_indexed`)."""
    return [child for _, child in fork_indexed(s, constraints, solver, exhaustive)]
