"""Small-step semantics for every Wasm 1.0 instruction over symbolic states.

Handlers take ``(state, instruction)``. They return ``None`` when execution
simply continues in the same state, or the list of successor states when
the state forked or stopped. Concrete operands take a fast path through
the arithmetic kernels; symbolic ones build terms, and operations with a
behavioural constraint (division, conversions, memory bounds, branches,
indirect calls) fork one child per feasible outcome.
"""

import math

from symwasm import _kernels as K
from symwasm import floats
from symwasm import terms as T
from symwasm.binary import opcodes as oc
from symwasm.binary.module import KIND_FUNC
from symwasm.errors import SymWasmError
from symwasm.external.fs import SymFileSystem
from symwasm.external.models import ModelSet, dispatch_import
from symwasm.memory import SymMemory
from symwasm.state import RUNNING, SORT_OF, ZERO_OF, ExecState, Frame, fork_indexed

# trap kinds
UNREACHABLE = "unreachable"
DIV_ZERO = "integer divide by zero"
OVERFLOW = "integer overflow"
BAD_CONVERSION = "invalid conversion to integer"
OOB = "out of bounds memory access"
UNDEFINED_ELEMENT = "undefined element"
UNINITIALIZED_ELEMENT = "uninitialized element"
INDIRECT_MISMATCH = "indirect call type mismatch"
STACK_EXHAUSTED = "call stack exhausted"

MASK32 = 0xFFFFFFFF


class StepResult:
    __slots__ = ("successors",)

    def __init__(self, successors):
        self.successors = successors

    @property
    def trap(self):
        traps = [s.trap for s in self.successors if s.trap is not None]
        return traps[0] if traps else None

    def __repr__(self):
        return f"StepResult({self.successors})"


# -- unsigned interval of a bit-vector term ------------------------------------

def interval(t):
    """A sound ``(lo, hi)`` unsigned range for bit-vector term ``t``."""
    memo = {}
    for n in T._postorder([t]):
        memo[id(n)] = _iv(n, memo)
    return memo[id(t)]


def _iv(n, memo):
    w = n.sort.width
    top = (1 << w) - 1
    op = n.op
    if op is T.CONST:
        return (n.value, n.value)
    if op is T.VAR or not n.args:
        return (0, top)
    a = memo.get(id(n.args[0]), (0, top)) if n.args[0].sort.is_bv else None
    b = memo.get(id(n.args[1])) if len(n.args) > 1 and n.args[1].sort.is_bv else None
    if op == "bvadd":
        lo, hi = a[0] + b[0], a[1] + b[1]
        return (lo, hi) if hi <= top else (0, top)
    if op == "bvsub":
        return (a[0] - b[1], a[1] - b[0]) if a[0] >= b[1] else (0, top)
    if op == "bvmul":
        return (a[0] * b[0], a[1] * b[1]) if a[1] * b[1] <= top else (0, top)
    if op == "bvshl" and b[0] == b[1]:
        k = b[0] % w
        return (a[0] << k, a[1] << k) if a[1] << k <= top else (0, top)
    if op == "bvlshr":
        if b[0] == b[1]:
            k = b[0] % w
            return (a[0] >> k, a[1] >> k)
        return (0, a[1])
    if op == "bvand":
        return (0, min(a[1], b[1]))
    if op == "bvor":
        return (max(a[0], b[0]), (1 << max(a[1].bit_length(), b[1].bit_length())) - 1)
    if op == "bvurem":
        if b[0] == b[1] and b[0]:
            return (0, min(a[1], b[0] - 1))
        return (0, a[1])
    if op == "bvudiv" and b[0] == b[1] and b[0]:
        return (a[0] // b[0], a[1] // b[0])
    if op == "zext":
        return a
    if op == "sext":
        iw = n.args[0].sort.width
        return a if a[1] < 1 << (iw - 1) else (0, top)
    if op == "extract":
        hi, lo = n.value
        if a[1] < 1 << (hi + 1):
            return (a[0] >> lo, a[1] >> lo)
        return (0, top)
    if op == "concat":
        lo = hi = 0
        for x in n.args:
            xw = x.sort.width
            r = memo[id(x)]
            lo, hi = (lo << xw) | r[0], (hi << xw) | r[1]
        return (lo, hi)
    if op == "ite":
        x, y = memo[id(n.args[1])], memo[id(n.args[2])]
        return (min(x[0], y[0]), max(x[1], y[1]))
    if op in ("bvclz", "bvctz", "bvpopcnt"):
        return (0, w)
    return (0, top)


# -- float helpers -----------------------------------------------------------------

def _fconst(x, sort):
    return T.const(sort, floats.from_float(x, sort.width))


# valid (exclusive or inclusive lower bound, exclusive upper bound) for trunc
def _trunc_range(src_sort, signed, width):
    if signed:
        lo = -(2.0 ** (width - 1))
        # -2^(w-1) is representable; for f64 -> i32 the bound -2^31 - 1 is too
        if src_sort is T.F64 and width == 32:
            return ("gt", -2.0 ** 31 - 1), 2.0 ** 31
        return ("ge", lo), 2.0 ** (width - 1)
    return ("gt", -1.0), 2.0 ** width


class Emulator:
    """Executes instructions of one module; shared by all states of a run."""

    def __init__(self, module, solver, models=None, argv=(), environ=(), max_call_depth=1024,
                 max_window=1024, max_enum=256, slice_steps=20000):
        self.module = module
        self.solver = solver
        self.models = models if models is not None else ModelSet(module)
        self.argv = list(argv)
        self.environ = list(environ)
        self.max_call_depth = max_call_depth
        self.max_window = max_window
        self.max_enum = max_enum
        self.slice_steps = slice_steps
        self.types = module.types
        self.func_types = [module.types[i] for i in module.func_type_indices()]
        self.nimp = module.num_imported_funcs
        self.imports = module.imported_funcs
        self.table = module.table_entries()
        self.import_models = [self.models.lookup(i.module, i.name) for i in self.imports]
        self.intercepted = {}
        for e in module.exports:
            if e.kind != KIND_FUNC or e.index < self.nimp:
                continue
            m = self.models.lookup_libc(e.name)
            if m is not None and (m.signature is None or m.signature == self.func_types[e.index]):
                self.intercepted[e.index] = m
        self.handlers = self._build_handlers()

    # -- setup ----------------------------------------------------------------

    def initial_state(self, entry, stdin=(), files=None, inputs=None):
        """Root state poised at the first instruction of ``entry`` (start function first)."""
        m = self.module
        mem = SymMemory.init_from_segments(m) if m.memory_limits is not None else None
        fs = SymFileSystem.standard(stdin=stdin, files=files)
        s = ExecState(memory=mem, fs=fs, inputs=inputs)
        for g in self._import_globals(s):
            s.globals.append(g)
        for g in m.globals:
            s.globals.append(self._global_init(s, g))
        if entry < self.nimp:
            raise SymWasmError("entry point must be defined in the module, not imported")
        ft = self.func_types[entry]
        params = [T.var(f"param_{i}", SORT_OF[vt]) for i, vt in enumerate(ft.params)]
        s.frames.append(self._frame(entry, params, 0, 0))
        s.result_types = ft.results
        if m.start is not None:
            if m.start < self.nimp:
                s.warn("start function is an import; skipped")
            else:
                s.frames.append(self._frame(m.start, [], 0, 0))
        return s

    def _import_globals(self, s):
        out = []
        for imp in self.module.imports:
            if imp.kind == 3:
                out.append(s.fresh_var(f"{imp.module}.{imp.name}", SORT_OF[imp.desc.valtype]))
                s.warn(f"imported global {imp.module}.{imp.name} is unconstrained")
        return out

    def _global_init(self, s, g):
        ins = g.init[0]
        sort = SORT_OF[g.type.valtype]
        if ins[0] == 0x23:
            return s.globals[ins[1]]
        return T.const(sort, ins[1])

    def _frame(self, idx, args, ret_ip, base):
        f = self.module.functions[idx - self.nimp]
        lt = f.local_types
        locals_ = list(args)
        for vt in lt[len(args):]:
            locals_.append(ZERO_OF[vt])
        return Frame(idx, f.code, locals_, ret_ip, base, len(self.func_types[idx].results))

    # -- driver -----------------------------------------------------------------

    def step(self, s):
        """Execute exactly one instruction of running state ``s``."""
        ins = s.frames[-1].code[s.ip]
        s.ip += 1
        s.icount += 1
        r = self.handlers[ins[0]](s, ins)
        return StepResult([s] if r is None else r)

    def run(self, s, limit=None):
        """Execute ``s`` until it forks, stops, or ``limit`` instructions elapse.

        Returns the successor list (``[s]`` when it merely paused).
        """
        handlers = self.handlers
        budget = self.slice_steps if limit is None else limit
        n = 0
        while True:
            ins = s.frames[-1].code[s.ip]
            s.ip += 1
            r = handlers[ins[0]](s, ins)
            n += 1
            if r is not None:
                s.icount += n
                n = 0
                if len(r) == 1 and r[0].status == RUNNING:
                    s = r[0]
                else:
                    return r
            if n >= budget:
                s.icount += n
                return [s]

    # -- solver helpers ---------------------------------------------------------------

    def concretize(self, s, t, what):
        """Pin ``t`` to its least feasible value (deterministic), with a warning."""
        if t.op is T.CONST:
            return t.value
        bits = T.fp_to_ieee(t) if t.sort.is_fp else t
        b = self.solver.bounds(s.path_condition, bits)
        if b is None:
            s.park("solver")
            return 0
        v = b[0]
        s.add_constraint(T.eq(bits, T.const(bits.sort, v)))
        s.warn(f"symbolic {what} concretized to {v}")
        return v

    def _fork(self, s, constraints):
        return fork_indexed(s, constraints, self.solver, exhaustive=True)

    # -- handler table --------------------------------------------------------------

    def _build_handlers(self):
        h = {}
        h[0x00] = self._unreachable
        for op in (0x01, 0x02, 0x03, 0x0B):
            h[op] = _nop
        h[0x04] = self._if
        h[0x05] = _else
        h[0x0C] = _br
        h[0x0D] = self._br_if
        h[0x0E] = self._br_table
        h[0x0F] = self._return
        h[0x10] = self._call
        h[0x11] = self._call_indirect
        h[0x1A] = _drop
        h[0x1B] = _select
        h[0x20] = _local_get
        h[0x21] = _local_set
        h[0x22] = _local_tee
        h[0x23] = _global_get
        h[0x24] = _global_set
        for code, _name, vt, width in oc.LOADS:
            h[code] = self._make_load(code, vt, width)
        for code, _name, vt, width in oc.STORES:
            h[code] = self._make_store(vt, width)
        h[0x3F] = _memory_size
        h[0x40] = self._memory_grow
        h[0x41] = _const(T.BV32)
        h[0x42] = _const(T.BV64)
        h[0x43] = _const(T.F32)
        h[0x44] = _const(T.F64)
        h[0x45] = _eqz(32)
        h[0x50] = _eqz(64)
        for base, width in ((0x46, 32), (0x51, 64)):
            for k, sym in enumerate(_CMP_SYM):
                h[base + k] = _icmp(k, width, sym)
        for base, width in ((0x67, 32), (0x79, 64)):
            for k, sym in enumerate((T.bvclz, T.bvctz, T.bvpopcnt)):
                h[base + k] = _iun(k, width, sym)
        for base, width in ((0x6A, 32), (0x7C, 64)):
            for k, sym in enumerate(_BIN_SYM):
                if k in (K.DIV_S, K.DIV_U, K.REM_S, K.REM_U):
                    h[base + k] = self._make_div(k, width, sym)
                else:
                    h[base + k] = _ibin(k, width, sym)
        for base in (0x5B, 0x61):
            for k, fn in enumerate(_FCMP):
                h[base + k] = _fcmp(fn)
        for base in (0x8B, 0x99):
            for k, fn in enumerate((T.fabs, T.fneg, T.fceil, T.ffloor, T.ftrunc, T.fnearest,
                                    T.fsqrt)):
                h[base + k] = _fun(fn)
        for base in (0x92, 0xA0):
            for k, fn in enumerate((T.fadd, T.fsub, T.fmul, T.fdiv, T.fmin, T.fmax,
                                    T.fcopysign)):
                h[base + k] = _fbin(fn)
        h[0xA7] = _unary(lambda a: T.extract(31, 0, a))
        for code, signed, width in ((0xA8, True, 32), (0xA9, False, 32), (0xAA, True, 32),
                                    (0xAB, False, 32), (0xAE, True, 64), (0xAF, False, 64),
                                    (0xB0, True, 64), (0xB1, False, 64)):
            h[code] = self._make_trunc(signed, width)
        h[0xAC] = _unary(lambda a: T.sext(a, 32))
        h[0xAD] = _unary(lambda a: T.zext(a, 32))
        h[0xB2] = _unary(lambda a: T.sbv_to_fp(a, T.F32))
        h[0xB3] = _unary(lambda a: T.ubv_to_fp(a, T.F32))
        h[0xB4] = _unary(lambda a: T.sbv_to_fp(a, T.F32))
        h[0xB5] = _unary(lambda a: T.ubv_to_fp(a, T.F32))
        h[0xB6] = _unary(lambda a: T.fp_convert(a, T.F32))
        h[0xB7] = _unary(lambda a: T.sbv_to_fp(a, T.F64))
        h[0xB8] = _unary(lambda a: T.ubv_to_fp(a, T.F64))
        h[0xB9] = _unary(lambda a: T.sbv_to_fp(a, T.F64))
        h[0xBA] = _unary(lambda a: T.ubv_to_fp(a, T.F64))
        h[0xBB] = _unary(lambda a: T.fp_convert(a, T.F64))
        h[0xBC] = _unary(T.fp_to_ieee)
        h[0xBD] = _unary(T.fp_to_ieee)
        h[0xBE] = _unary(lambda a: T.ieee_to_fp(a, T.F32))
        h[0xBF] = _unary(lambda a: T.ieee_to_fp(a, T.F64))
        missing = set(oc.OPCODES) - set(h)
        if missing:
            raise AssertionError(f"opcodes without handler: {sorted(missing)}")
        table = [None] * 256
        for k, v in h.items():
            table[k] = v
        return table

    # -- control ------------------------------------------------------------------

    def _unreachable(self, s, ins):
        s.set_trap(UNREACHABLE)
        return [s]

    def _if(self, s, ins):
        c = s.stack.pop()
        if c.op is T.CONST:
            if not c.value:
                s.ip = ins[1]
            return None
        taken = T.bv_to_bool(c)
        out = []
        for i, child in self._fork(s, [taken, T.not_(taken)]):
            if i == 1 and child.status == RUNNING:
                child.ip = ins[1]
            out.append(child)
        return out

    def _br_if(self, s, ins):
        c = s.stack.pop()
        if c.op is T.CONST:
            if c.value:
                _branch(s, ins[1], ins[2], ins[3])
            return None
        taken = T.bv_to_bool(c)
        out = []
        for i, child in self._fork(s, [taken, T.not_(taken)]):
            if i == 0 and child.status == RUNNING:
                _branch(child, ins[1], ins[2], ins[3])
            out.append(child)
        return out

    def _br_table(self, s, ins):
        return self.step_br_table(s, ins[1], s.stack.pop())

    def step_br_table(self, s, targets, index):
        """Branch to ``targets[min(index, n)]``; a symbolic index forks per label."""
        n = len(targets) - 1
        if index.op is T.CONST:
            t = targets[min(index.value, n)]
            _branch(s, t[0], t[1], t[2])
            return None
        cs = [T.eq(index, T.bv32(k)) for k in range(n)]
        cs.append(T.uge(index, T.bv32(n)))
        out = []
        for k, child in self._fork(s, cs):
            if child.status == RUNNING:
                t = targets[k]
                _branch(child, t[0], t[1], t[2])
            out.append(child)
        return out

    def _return(self, s, ins):
        f = s.frames.pop()
        st = s.stack
        arity = ins[1]
        if arity:
            vals = st[-arity:]
            del st[f.base:]
            st.extend(vals)
        else:
            del st[f.base:]
        if not s.frames:
            res = st[-1] if arity else T.bv32(0)
            s.set_exit(res)
            return [s]
        s.ip = f.ret_ip
        return None

    def _call(self, s, ins):
        return self.call(s, ins[1])

    def call(self, s, idx):
        st = s.stack
        ft = self.func_types[idx]
        np_ = len(ft.params)
        args = st[len(st) - np_:] if np_ else []
        if np_:
            del st[len(st) - np_:]
        if idx < self.nimp:
            imp = self.imports[idx]
            r = dispatch_import(s, self, imp.module, imp.name, ft, args, self.import_models[idx])
            if len(r) == 1 and r[0] is s and s.status == RUNNING:
                return None
            return r
        m = self.intercepted.get(idx)
        if m is not None:
            r = dispatch_import(s, self, "env", m.name, ft, args, m)
            if len(r) == 1 and r[0] is s and s.status == RUNNING:
                return None
            return r
        if len(s.frames) >= self.max_call_depth:
            s.set_trap(STACK_EXHAUSTED)
            return [s]
        s.frames.append(self._frame(idx, args, s.ip, len(st)))
        s.ip = 0
        return None

    def _call_indirect(self, s, ins):
        return self.step_call_indirect(s, ins[1], s.stack.pop())

    def step_call_indirect(self, s, type_index, operand):
        """Call through table slot ``operand``; a symbolic operand forks per matching slot."""
        expected = self.types[type_index]
        table = self.table
        if operand.op is T.CONST:
            kind = self._slot_check(operand.value, expected)
            if kind is not None:
                s.set_trap(kind)
                return [s]
            return self.call(s, table[operand.value])
        good, bad = [], {}
        for k in range(len(table)):
            kind = self._slot_check(k, expected)
            if kind is None:
                good.append(k)
            else:
                bad.setdefault(kind, []).append(k)
        cs = [T.eq(operand, T.bv32(k)) for k in good]
        kinds = []
        for kind in (UNINITIALIZED_ELEMENT, INDIRECT_MISMATCH):
            if kind in bad:
                kinds.append(kind)
                cs.append(T.or_(*[T.eq(operand, T.bv32(k)) for k in bad[kind]]))
        kinds.append(UNDEFINED_ELEMENT)
        cs.append(T.uge(operand, T.bv32(len(table))))
        out = []
        for i, child in self._fork(s, cs):
            if child.status != RUNNING:
                out.append(child)
            elif i < len(good):
                r = self.call(child, table[good[i]])
                out.extend([child] if r is None else r)
            else:
                child.set_trap(kinds[i - len(good)])
                out.append(child)
        return out

    def _slot_check(self, k, expected):
        if k >= len(self.table):
            return UNDEFINED_ELEMENT
        f = self.table[k]
        if f is None:
            return UNINITIALIZED_ELEMENT
        if self.func_types[f] != expected:
            return INDIRECT_MISMATCH
        return None

    # -- memory -----------------------------------------------------------------------

    def _resolve(self, s, base, offset, n):
        """Split ``s`` on whether ``base + offset`` is in bounds.

        Returns ``[(child, location)]`` in fork order, where location is
        ``None`` for trapped/parked children, an int for a single address, or
        ``("window", dest, lo, hi)`` / ``("values", dest, values)``.
        """
        lim = s.memory.size - n - offset if s.memory is not None else -1
        if lim < 0:
            s.set_trap(OOB)
            return [(s, None)]
        inb = T.ule(base, T.bv32(lim)) if lim < MASK32 else T.TRUE
        out = []
        for i, child in self._fork(s, [inb, T.not_(inb)]):
            if child.status != RUNNING:
                out.append((child, None))
            elif i == 1:
                child.set_trap(OOB)
                out.append((child, None))
            else:
                loc = self._locate(child, base, offset, lim)
                out.append((child, loc if child.status == RUNNING else None))
        return out

    def _locate(self, s, base, offset, lim):
        lo, hi = interval(base)
        hi = min(hi, lim)
        if hi - lo > self.max_window:
            b = self.solver.bounds(s.path_condition, base)
            if b is None:
                s.park("solver")
                return None
            lo, hi = b
        if lo == hi:
            return lo + offset
        dest = T.bvadd(base, T.bv32(offset))
        if hi - lo <= self.max_window:
            return ("window", dest, lo + offset, hi + offset)
        vals = self.solver.enumerate(s.path_condition, base, self.max_enum)
        if vals is not None:
            if len(vals) == 1:
                return vals[0] + offset
            return ("values", dest, [v + offset for v in vals])
        return self.concretize(s, base, "memory address") + offset

    def _load_at(self, s, loc, n):
        mem = s.memory
        if isinstance(loc, int):
            return mem.read(loc, n)
        if loc[0] == "window":
            return mem.load_window(loc[1], n, loc[2], loc[3])
        return mem.load_values(loc[1], n, loc[2])

    def _store_at(self, s, loc, n, val):
        mem = s.memory
        if isinstance(loc, int):
            mem.write(loc, n, val)
        elif loc[0] == "window":
            mem.store_window(loc[1], n, val, loc[2], loc[3])
        else:
            mem.store_values(loc[1], n, val, loc[2])

    def _make_load(self, code, vt, width):
        conv = _load_conv(code, vt, width)

        def load(s, ins):
            st = s.stack
            base = st.pop()
            if base.op is T.CONST:
                ea = base.value + ins[2]
                mem = s.memory
                if ea + width > mem.size:
                    s.set_trap(OOB)
                    return [s]
                st.append(conv(mem.read(ea, width)))
                return None
            out = []
            for child, loc in self._resolve(s, base, ins[2], width):
                if loc is not None:
                    child.stack.append(conv(self._load_at(child, loc, width)))
                out.append(child)
            return out
        return load

    def _make_store(self, vt, width):
        full = {oc.I32: 4, oc.I64: 8, oc.F32: 4, oc.F64: 8}[vt]

        def store(s, ins):
            st = s.stack
            val = st.pop()
            base = st.pop()
            if vt in (oc.F32, oc.F64):
                val = T.fp_to_ieee(val)
            elif width < full:
                val = T.extract(8 * width - 1, 0, val)
            if base.op is T.CONST:
                ea = base.value + ins[2]
                mem = s.memory
                if ea + width > mem.size:
                    s.set_trap(OOB)
                    return [s]
                mem.write(ea, width, val)
                return None
            out = []
            for child, loc in self._resolve(s, base, ins[2], width):
                if loc is not None:
                    self._store_at(child, loc, width, val)
                out.append(child)
            return out
        return store

    def _memory_grow(self, s, ins):
        st = s.stack
        d = st.pop()
        if d.op is T.CONST:
            delta = d.value
        else:
            delta = self.concretize(s, d, "memory.grow delta")
            if s.status != RUNNING:
                return [s]
        r = s.memory.grow(delta)
        st.append(T.bv32(r & MASK32))
        return None

    # -- arithmetic with traps ------------------------------------------------------

    def _make_div(self, k, width, sym):
        sort = T.bv_sort(width)
        mask = (1 << width) - 1
        int_min = 1 << (width - 1)
        binop = K.int_binop
        signed_div = k == K.DIV_S

        def div(s, ins):
            st = s.stack
            b = st.pop()
            a = st.pop()
            if b.op is T.CONST:
                if a.op is T.CONST:
                    r = binop(k, a.value, b.value, width)
                    if r < 0:
                        s.set_trap(DIV_ZERO if r == K.TRAP_DIV_ZERO else OVERFLOW)
                        return [s]
                    st.append(T.const(sort, r))
                    return None
                if b.value == 0:
                    s.set_trap(DIV_ZERO)
                    return [s]
                if not (signed_div and b.value == mask):
                    st.append(sym(a, b))
                    return None
            zero = T.eq(b, T.const(sort, 0))
            cases = [None, zero]
            if signed_div:
                ovf = T.and_(T.eq(a, T.const(sort, int_min)), T.eq(b, T.const(sort, mask)))
                cases.append(ovf)
                cases[0] = T.and_(T.not_(zero), T.not_(ovf))
            else:
                cases[0] = T.not_(zero)
            out = []
            for i, child in self._fork(s, cases):
                if child.status == RUNNING:
                    if i == 0:
                        child.stack.append(sym(a, b))
                    else:
                        child.set_trap(DIV_ZERO if i == 1 else OVERFLOW)
                out.append(child)
            return out
        return div

    def _make_trunc(self, signed, width):
        sort = T.bv_sort(width)
        mask = (1 << width) - 1
        conv = T.fp_to_sbv if signed else T.fp_to_ubv

        def trunc(s, ins):
            st = s.stack
            a = st.pop()
            (lkind, lo), hi = _trunc_range(a.sort, signed, width)
            if a.op is T.CONST:
                x = floats.to_float(a.value, a.sort.width)
                if x != x:
                    s.set_trap(BAD_CONVERSION)
                    return [s]
                if math.isinf(x) or not ((x > lo if lkind == "gt" else x >= lo) and x < hi):
                    s.set_trap(OVERFLOW)
                    return [s]
                st.append(T.const(sort, math.trunc(x) & mask))
                return None
            nan = T.fisnan(a)
            lo_ok = T.flt(_fconst(lo, a.sort), a) if lkind == "gt" else T.fle(_fconst(lo, a.sort), a)
            in_range = T.and_(lo_ok, T.flt(a, _fconst(hi, a.sort)))
            cases = [in_range, nan, T.and_(T.not_(nan), T.not_(in_range))]
            out = []
            for i, child in self._fork(s, cases):
                if child.status == RUNNING:
                    if i == 0:
                        child.stack.append(conv(a, width))
                    else:
                        child.set_trap(BAD_CONVERSION if i == 1 else OVERFLOW)
                out.append(child)
            return out
        return trunc


# -- simple handlers (no emulator context needed) ------------------------------------

def _nop(s, ins):
    return None


def _else(s, ins):
    s.ip = ins[1]
    return None


def _branch(s, target, arity, height):
    st = s.stack
    base = s.frames[-1].base + height
    if arity:
        vals = st[-arity:]
        del st[base:]
        st.extend(vals)
    else:
        del st[base:]
    s.ip = target


def _br(s, ins):
    _branch(s, ins[1], ins[2], ins[3])
    return None


def _drop(s, ins):
    s.stack.pop()
    return None


def _select(s, ins):
    st = s.stack
    c = st.pop()
    b = st.pop()
    a = st.pop()
    if c.op is T.CONST:
        st.append(a if c.value else b)
    else:
        st.append(T.ite(T.bv_to_bool(c), a, b))
    return None


def _local_get(s, ins):
    s.stack.append(s.frames[-1].locals[ins[1]])
    return None


def _local_set(s, ins):
    s.frames[-1].locals[ins[1]] = s.stack.pop()
    return None


def _local_tee(s, ins):
    s.frames[-1].locals[ins[1]] = s.stack[-1]
    return None


def _global_get(s, ins):
    s.stack.append(s.globals[ins[1]])
    return None


def _global_set(s, ins):
    s.globals[ins[1]] = s.stack.pop()
    return None


def _memory_size(s, ins):
    s.stack.append(T.bv32(s.memory.pages))
    return None


def _const(sort):
    def h(s, ins):
        s.stack.append(T.const(sort, ins[1]))
        return None
    return h


def _unary(fn):
    def h(s, ins):
        st = s.stack
        st.append(fn(st.pop()))
        return None
    return h


def _eqz(width):
    zero = T.bv(0, width)

    def h(s, ins):
        st = s.stack
        a = st.pop()
        if a.op is T.CONST:
            st.append(T.bv32(int(a.value == 0)))
        else:
            st.append(T.bool_to_bv(T.eq(a, zero)))
        return None
    return h


_BIN_SYM = (T.bvadd, T.bvsub, T.bvmul, T.bvsdiv, T.bvudiv, T.bvsrem, T.bvurem, T.bvand, T.bvor,
            T.bvxor, T.bvshl, T.bvashr, T.bvlshr, T.bvrotl, T.bvrotr)
_CMP_SYM = (T.eq, lambda a, b: T.not_(T.eq(a, b)), T.slt, T.ult, T.sgt, T.ugt, T.sle, T.ule,
            T.sge, T.uge)
_FCMP = (T.feq, lambda a, b: T.not_(T.feq(a, b)), T.flt, lambda a, b: T.flt(b, a), T.fle,
         lambda a, b: T.fle(b, a))


def _ibin(k, width, sym):
    sort = T.bv_sort(width)
    binop = K.int_binop

    def h(s, ins):
        st = s.stack
        b = st.pop()
        a = st[-1]
        if a.op is T.CONST and b.op is T.CONST:
            st[-1] = T.const(sort, binop(k, a.value, b.value, width))
        else:
            st[-1] = sym(a, b)
        return None
    return h


def _icmp(k, width, sym):
    cmp = K.int_cmp
    one, zero = T.bv32(1), T.bv32(0)

    def h(s, ins):
        st = s.stack
        b = st.pop()
        a = st[-1]
        if a.op is T.CONST and b.op is T.CONST:
            st[-1] = one if cmp(k, a.value, b.value, width) else zero
        else:
            st[-1] = T.bool_to_bv(sym(a, b))
        return None
    return h


def _iun(k, width, sym):
    sort = T.bv_sort(width)
    unop = K.int_unop

    def h(s, ins):
        st = s.stack
        a = st[-1]
        if a.op is T.CONST:
            st[-1] = T.const(sort, unop(k, a.value, width))
        else:
            st[-1] = sym(a)
        return None
    return h


def _fcmp(fn):
    def h(s, ins):
        st = s.stack
        b = st.pop()
        st[-1] = T.bool_to_bv(fn(st[-1], b))
        return None
    return h


def _fun(fn):
    def h(s, ins):
        st = s.stack
        st[-1] = fn(st[-1])
        return None
    return h


def _fbin(fn):
    def h(s, ins):
        st = s.stack
        b = st.pop()
        st[-1] = fn(st[-1], b)
        return None
    return h


def _load_conv(code, vt, width):
    if vt == oc.F32:
        return lambda v: T.ieee_to_fp(v, T.F32)
    if vt == oc.F64:
        return lambda v: T.ieee_to_fp(v, T.F64)
    full = 32 if vt == oc.I32 else 64
    if 8 * width == full:
        return lambda v: v
    signed = oc.OPCODES[code].name.endswith("_s")
    pad = full - 8 * width
    if signed:
        return lambda v: T.sext(v, pad)
    return lambda v: T.zext(v, pad)
