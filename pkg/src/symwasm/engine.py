"""Exploration driver: frontier selection, stepping, and solution export."""

import collections
import logging
import os
import random
import time
from dataclasses import dataclass, field

from symwasm import floats
from symwasm import smt
from symwasm import terms as T
from symwasm.binary.opcodes import F32, F64
from symwasm.emulator import Emulator
from symwasm.errors import Exhausted
from symwasm.external.fs import STDERR, STDOUT
from symwasm.solver import SAT, UNSAT, SolverPool, solve_fresh
from symwasm.state import EXITED, PARKED, RUNNING, TRAPPED

log = logging.getLogger("symwasm")


# -- selectors ------------------------------------------------------------------

class BFS:
    name = "bfs"

    def __init__(self, seed=0):
        self._q = collections.deque()

    def add(self, s):
        self._q.append(s)

    def pick(self):
        if not self._q:
            raise Exhausted("frontier is empty")
        return self._q.popleft()

    def size(self):
        return len(self._q)

    def drain(self):
        out = list(self._q)
        self._q.clear()
        return out


class DFS(BFS):
    name = "dfs"

    def pick(self):
        if not self._q:
            raise Exhausted("frontier is empty")
        return self._q.pop()


class RandomSelector(BFS):
    name = "random"

    def __init__(self, seed=0):
        super().__init__()
        self._q = []
        self._rng = random.Random(seed)

    def pick(self):
        if not self._q:
            raise Exhausted("frontier is empty")
        i = self._rng.randrange(len(self._q))
        self._q[i], self._q[-1] = self._q[-1], self._q[i]
        return self._q.pop()


SELECTORS = {"bfs": BFS, "dfs": DFS, "random": RandomSelector}


def make_selector(name, seed=0):
    try:
        return SELECTORS[name](seed)
    except KeyError:
        raise ValueError(f"unknown selector {name!r}; choose from {sorted(SELECTORS)}") from None


# -- configuration and results ----------------------------------------------------------

@dataclass
class RunConfig:
    entry: str = "_start"
    program_name: str = "main.wasm"
    sym_args: list = field(default_factory=list)   # byte length per symbolic argv slot
    sym_stdin: int = 0
    sym_files: tuple = (0, 0)                      # (count, size)
    args: list = field(default_factory=list)       # concrete argv[1:] preceding symbolic ones
    stdin: bytes = b""                             # concrete stdin (used when sym_stdin is 0)
    files: dict = field(default_factory=dict)      # concrete preopened files: name -> bytes
    environ: list = field(default_factory=list)    # "KEY=VALUE" strings
    selector: str = "bfs"
    verbosity: str = "warning"
    max_states: int | None = None
    max_depth: int | None = None
    max_time: float | None = None
    seed: int = 0
    use_cache: bool = True
    solver_timeout_ms: int | None = None
    dump_smt: str | None = None
    max_call_depth: int = 1024


@dataclass
class PathSolution:
    return_value: str | None
    solution: dict
    outputs: list
    status: dict
    instructions: int
    warnings: list = field(default_factory=list)
    inputs_hex: dict = field(default_factory=dict)
    stdout: bytes = b""
    stderr: bytes = b""
    state_id: int = 0

    def to_json(self):
        d = {}
        if self.return_value is not None:
            d["Return"] = self.return_value
        d["Solution"] = self.solution
        d["Output"] = self.outputs
        d["Status"] = {
            "kind": self.status["kind"],
            "detail": self.status.get("detail"),
            "instructions": self.instructions,
            "inputs_hex": self.inputs_hex,
            "warnings": self.warnings,
        }
        return d

    def key(self):
        """Identity used to compare solution sets across runs."""
        return (self.return_value, self.stdout, self.stderr, self.status["kind"],
                self.status.get("detail"), tuple(sorted(self.inputs_hex.items())))


@dataclass
class InputVar:
    name: str
    kind: str  # "arg", "stdin" or "file"
    length: int
    term: object
    slot: object = None  # argv index or file name


def _byte_terms(v, n):
    return [T.extract(8 * k + 7, 8 * k, v) for k in range(n)]


def _file_names(count):
    names = []
    for i in range(count):
        s, k = "", i
        while True:
            s = chr(ord("A") + k % 26) + s
            k = k // 26 - 1
            if k < 0:
                break
        names.append(s)
    return names


def build_inputs(config):
    """argv/stdin/file contents (byte-term lists) and the symbolic input variables."""
    inputs = []
    argv = [list(T.bv(b, 8) for b in config.program_name.encode()) + [T.bv(0, 8)]]
    for a in config.args:
        argv.append([T.bv(b, 8) for b in a.encode()] + [T.bv(0, 8)])
    for n in config.sym_args:
        idx = len(argv)
        v = T.var(f"sym_arg_{idx}", T.bv_sort(8 * n))
        inputs.append(InputVar(v.value, "arg", n, v, idx))
        argv.append(_byte_terms(v, n) + [T.bv(0, 8)])
    environ = [[T.bv(b, 8) for b in e.encode()] + [T.bv(0, 8)] for e in config.environ]
    if config.sym_stdin:
        v = T.var("sym_stdin", T.bv_sort(8 * config.sym_stdin))
        inputs.append(InputVar(v.value, "stdin", config.sym_stdin, v))
        stdin = _byte_terms(v, config.sym_stdin)
    else:
        stdin = [T.bv(b, 8) for b in config.stdin]
    files = {name: [T.bv(b, 8) for b in data] for name, data in config.files.items()}
    count, size = config.sym_files
    for name in _file_names(count):
        v = T.var(f"sym_file_{name}", T.bv_sort(8 * size))
        inputs.append(InputVar(v.value, "file", size, v, name))
        files[name] = _byte_terms(v, size)
    return argv, environ, stdin, files, inputs


def render_bytes(data):
    """Printable rendering of a solved byte vector: cut at the first NUL, escape the rest."""
    cut = data.split(b"\0", 1)[0]
    out = []
    for b in cut:
        if 0x20 <= b < 0x7F and b != 0x5C:
            out.append(chr(b))
        else:
            out.append(f"\\x{b:02x}")
    return "".join(out)


def render_output(data):
    return data.decode("utf-8", "backslashreplace")


# -- engine --------------------------------------------------------------------------

class Engine:
    def __init__(self, module, config=None, solver=None, models=None):
        self.module = module
        self.config = config or RunConfig()
        c = self.config
        self.solver = solver or SolverPool(enabled=c.use_cache, seed=c.seed,
                                           timeout_ms=c.solver_timeout_ms)
        argv, environ, stdin, files, inputs = build_inputs(c)
        self.inputs = inputs
        self.emu = Emulator(module, self.solver, models=models, argv=argv, environ=environ,
                            max_call_depth=c.max_call_depth)
        self._stdin, self._files = stdin, files
        self.export_solves = 0
        self.stats = {}

    def root_state(self):
        entry = self.module.resolve_entry(self.config.entry)
        return self.emu.initial_state(entry, stdin=self._stdin, files=self._files,
                                      inputs={v.name: v for v in self.inputs})

    def explore(self):
        """Run exploration; returns terminal states in completion order."""
        c = self.config
        t0 = time.monotonic()
        frontier = make_selector(c.selector, c.seed)
        frontier.add(self.root_state())
        done = []
        while frontier.size():
            if c.max_time is not None and time.monotonic() - t0 > c.max_time:
                break
            if c.max_states is not None and len(done) >= c.max_states:
                break
            s = frontier.pick()
            for child in self.emu.run(s):
                if child.status == RUNNING:
                    if c.max_depth is not None and child.fork_depth > c.max_depth:
                        child.park("budget")
                        done.append(child)
                    else:
                        frontier.add(child)
                elif child.status == PARKED:
                    done.append(child)
                else:
                    done.extend(self.split_observables(child))
        for s in frontier.drain():
            s.park("budget")
            done.append(s)
        self.stats["explore_time"] = time.monotonic() - t0
        return done

    def split_observables(self, s):
        """One terminal state per distinct concrete (exit code, stdout, stderr).

        A path whose exit code or output bytes are still symbolic (a merged
        select, a table lookup) stands for several observable outcomes; each
        gets its own state so every outcome is reported. The value returned by
        a function-level entry is left symbolic.
        """
        parts = []
        program_exit = s.frames or not s.result_types
        if (s.status == EXITED and program_exit and s.exit_code is not None
                and s.exit_code.op is not T.CONST):
            parts.append(s.exit_code)
        for fd, key in ((1, STDOUT), (2, STDERR)):
            if s.fs.obj(key) is not None:
                parts.extend(b for b in s.fs.stream(fd) if b.op is not T.CONST)
        if not parts:
            return [s]
        obs = parts[0] if len(parts) == 1 else T.concat(*parts)
        vals = self.solver.enumerate(s.path_condition, obs, self.emu.max_enum)
        if vals is None:
            s.warn(f"more than {self.emu.max_enum} distinct outputs on one path; one is reported")
            return [s]
        pc = s.path_condition
        out = []
        for i, v in enumerate(vals):
            child = s if i == len(vals) - 1 else s.clone()
            child.path_condition = pc.append(T.eq(obs, T.const(obs.sort, v)))
            out.append(child)
        return out or [s]

    def run(self):
        t0 = time.monotonic()
        states = self.explore()
        sols = []
        for n, s in enumerate(states):
            sol = self.export_solution(s)
            sols.append(sol)
            if self.config.dump_smt:
                os.makedirs(self.config.dump_smt, exist_ok=True)
                with open(os.path.join(self.config.dump_smt, f"{n}.smt2"), "w") as f:
                    f.write(smt.to_smtlib(s.path_condition.preds))
            log.debug("path %d: %s", n, sol.to_json())
        self.stats["wall_time"] = time.monotonic() - t0
        return sols

    def _solve(self, s):
        """Canonical model of the final path condition (fresh solver, cache-independent)."""
        preds = list(s.path_condition.preds)
        prefer = [T.ult(b, T.bv(0x80, 8)) for v in self.inputs if v.kind == "arg"
                  for b in _byte_terms(v.term, v.length)]
        self.export_solves += 1
        if prefer:
            r = solve_fresh(preds + prefer, self.config.seed, self.config.solver_timeout_ms, isolated=True)
            if r.verdict == SAT:
                return r
            self.export_solves += 1
        return solve_fresh(preds, self.config.seed, self.config.solver_timeout_ms, isolated=True)

    def export_solution(self, s):
        status = {"kind": s.status}
        if s.status == TRAPPED:
            status["detail"] = s.trap
        elif s.status == PARKED:
            status["detail"] = s.park_reason
        r = self._solve(s)
        if r.verdict != SAT:
            status = {"kind": PARKED, "detail": "solver" if r.verdict != UNSAT else "infeasible"}
            model = {}
        else:
            model = r.model
        ev = _Evaluator(model)
        solution, inputs_hex = {}, {}
        for v in self.inputs:
            data = ev.bytes(_byte_terms(v.term, v.length))
            solution[v.name] = render_bytes(data)
            inputs_hex[v.name] = data.hex()
            if log.isEnabledFor(logging.DEBUG) and not T.free_vars(v.term) & _pc_vars(s):
                log.debug("%s is unconstrained on path %d", v.name, s.id)
        out = ev.bytes(s.fs.stream(1)) if s.fs.obj(STDOUT) is not None else b""
        err = ev.bytes(s.fs.stream(2)) if s.fs.obj(STDERR) is not None else b""
        ret = None
        if status["kind"] == EXITED:
            ret = self._render_return(s, ev)
        return PathSolution(
            return_value=ret,
            solution=solution,
            outputs=[{"name": "stdout", "output": render_output(out)},
                     {"name": "stderr", "output": render_output(err)}],
            status=status,
            instructions=s.icount,
            warnings=list(s.warnings),
            inputs_hex=inputs_hex,
            stdout=out,
            stderr=err,
            state_id=s.id,
        )

    def _render_return(self, s, ev):
        code = s.exit_code
        v = ev.value(code)
        if s.frames or not s.result_types:
            # proc_exit, or the entry returned nothing
            return str(v)
        vt = s.result_types[0]
        if vt in (F32, F64):
            return repr(floats.to_float(v, 32 if vt == F32 else 64))
        w = code.sort.width
        return str(v - (1 << w) if v >> (w - 1) else v)


def _pc_vars(s):
    out = set()
    for p in s.path_condition.preds:
        out |= T.free_vars(p)
    return out


class _Evaluator:
    __slots__ = ("model",)

    def __init__(self, model):
        self.model = model

    def value(self, t):
        return T.evaluate(t, self.model, default=0)

    def bytes(self, terms):
        return bytes(self.value(b) for b in terms)


def run(module, config=None, solver=None, models=None):
    """Explore ``module`` and return one :class:`PathSolution` per terminal state."""
    return Engine(module, config, solver, models).run()
