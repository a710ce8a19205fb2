"""Import models: registry, user hooks and dispatch.

A handler is a callable taking an :class:`ImportCall` and returning the
import's results (a Term, an int, a sequence of those, or ``None`` for no
results). Handlers may also end the path (``call.state.set_exit``) or ask
for a case split on a symbolic argument by raising :class:`SplitOn`.
"""

from symwasm import terms as T
from symwasm.binary.module import FuncType, PAGE_SIZE
from symwasm.errors import SignatureMismatch
from symwasm.state import RUNNING, SORT_OF, fork_indexed

SIDE_EFFECT = "side-effect"
STACK_BALANCE = "stack-balance"

WASI = "wasi_snapshot_preview1"
ALIASES = {"wasi_unstable": WASI}


class SplitOn(Exception):
    """Fork the call on ``cases`` (``[(constraint, replacement Term), ...]``) for argument ``index``."""

    def __init__(self, index, cases):
        super().__init__(index)
        self.index = index
        self.cases = cases


class Fault(Exception):
    """A guest pointer argument points outside linear memory."""


class ImportModel:
    __slots__ = ("module", "name", "handler", "strategy", "signature", "origin")

    def __init__(self, module, name, handler, strategy=SIDE_EFFECT, signature=None, origin="user"):
        self.module = module
        self.name = name
        self.handler = handler
        self.strategy = strategy
        self.signature = signature
        self.origin = origin

    def __repr__(self):
        return f"ImportModel({self.module}.{self.name}, {self.strategy}, {self.origin})"


class ModelSet:
    """Registry of import models. User hooks shadow built-ins; last registration wins."""

    def __init__(self, module=None, builtins=True):
        self.module = module
        self._user = {}
        self._builtin = {}
        if builtins:
            from symwasm.external import libc, wasi
            for name, (fn, sig) in wasi.MODELS.items():
                self._builtin[(WASI, name)] = ImportModel(WASI, name, fn, SIDE_EFFECT, sig, "builtin")
            for name, (fn, sig) in libc.MODELS.items():
                self._builtin[("env", name)] = ImportModel("env", name, fn, SIDE_EFFECT, sig, "builtin")

    @staticmethod
    def _key(module, name):
        return (ALIASES.get(module, module), name)

    def lookup(self, module, name):
        key = self._key(module, name)
        return self._user.get(key) or self._builtin.get(key)

    def lookup_libc(self, name):
        """Model for a module-defined function exported as ``name`` (libc interception)."""
        m = self._user.get(("env", name))
        if m is not None:
            return m
        return self._builtin.get(("env", name))

    def add(self, model):
        self._user[self._key(model.module, model.name)] = model
        return model


def register_hook(model_set, import_id, handler, strategy=SIDE_EFFECT, signature=None):
    """Install ``handler`` for ``import_id`` (``(module, name)``).

    ``signature`` is a :class:`FuncType` (or ``(params, results)`` of value
    types); when the bound module imports ``import_id`` with a different type,
    :class:`SignatureMismatch` is raised. Imports absent from the module are
    accepted and simply never called.
    """
    module, name = import_id
    if signature is not None and not isinstance(signature, FuncType):
        signature = FuncType(tuple(signature[0]), tuple(signature[1]))
    m = model_set.module
    if m is not None and signature is not None:
        for imp in m.imported_funcs:
            if ModelSet._key(imp.module, imp.name) == ModelSet._key(module, name):
                actual = m.types[imp.desc]
                if actual != signature:
                    raise SignatureMismatch(
                        f"hook for {module}.{name} declared {signature}, import has {actual}")
    return model_set.add(ImportModel(module, name, handler, strategy, signature, "user"))


class ImportCall:
    """Arguments and helpers handed to an import handler."""

    __slots__ = ("state", "emu", "args", "module", "name", "ftype")

    def __init__(self, state, emu, args, module, name, ftype):
        self.state = state
        self.emu = emu
        self.args = args
        self.module = module
        self.name = name
        self.ftype = ftype

    @property
    def memory(self):
        return self.state.memory

    @property
    def fs(self):
        return self.state.fs

    def arg(self, i):
        return self.args[i]

    def concrete(self, i, what=None):
        """Concrete value of argument ``i``; a symbolic one is pinned to one feasible value."""
        t = self.args[i]
        if t.op is T.CONST:
            return t.value
        v = self.emu.concretize(self.state, t, what or f"argument {i} of {self.name}")
        self.args[i] = T.const(t.sort, v)
        return v

    def fd(self, i):
        """Concrete fd argument; a symbolic fd splits into each open fd plus one invalid class."""
        t = self.args[i]
        if t.op is T.CONST:
            return t.value
        fds = sorted(self.state.fs.fds)
        cases = [(T.eq(t, T.bv32(fd)), T.bv32(fd)) for fd in fds]
        invalid = T.and_(*[T.not_(T.eq(t, T.bv32(fd))) for fd in fds])
        bad = max(fds, default=-1) + 1
        cases.append((invalid, T.bv32(bad)))
        raise SplitOn(i, cases)

    def fresh(self, prefix, sort):
        return self.state.fresh_var(prefix, sort)

    # -- guest memory ---------------------------------------------------------

    def check(self, addr, n):
        if addr < 0 or addr + n > self.state.memory.size:
            raise Fault(addr)

    def load(self, addr, n):
        self.check(addr, n)
        return self.state.memory.read(addr, n)

    def load_int(self, addr, n, what="memory value"):
        t = self.load(addr, n)
        if t.op is T.CONST:
            return t.value
        return self.emu.concretize(self.state, t, what)

    def u32(self, addr):
        return self.load_int(addr, 4)

    def store(self, addr, n, value):
        self.check(addr, n)
        if isinstance(value, int):
            value = T.bv(value, 8 * n)
        self.state.memory.write(addr, n, value)

    def read_bytes(self, addr, n):
        self.check(addr, n)
        return self.state.memory.read_bytes(addr, n)

    def write_bytes(self, addr, data):
        self.check(addr, len(data))
        self.state.memory.write_bytes(addr, data)

    def read_cstring(self, addr, limit=PAGE_SIZE):
        """Concrete NUL-terminated string (symbolic bytes are pinned)."""
        out = bytearray()
        while len(out) < limit:
            b = self.load(addr + len(out), 1)
            v = b.value if b.op is T.CONST else self.emu.concretize(self.state, b, "string byte")
            if v == 0:
                break
            out.append(v)
        return bytes(out)


def _coerce_results(results, ftype, name):
    if results is None:
        results = ()
    elif isinstance(results, (T.Term, int, float)):
        results = (results,)
    out = []
    if len(results) != len(ftype.results):
        raise SignatureMismatch(f"model for {name} returned {len(results)} values, "
                                f"signature {ftype} expects {len(ftype.results)}")
    for r, vt in zip(results, ftype.results):
        sort = SORT_OF[vt]
        if isinstance(r, int):
            r = T.const(sort, r)
        if r.sort is not sort:
            raise SignatureMismatch(f"model for {name} returned {r.sort}, expected {sort}")
        out.append(r)
    return out


def stack_balance(call):
    """Fallback: one fresh unconstrained value per declared result; no side effects."""
    s = call.state
    s.warn(f"import {call.module}.{call.name} emulated by stack balance")
    return [s.fresh_var(f"{call.module}.{call.name}", SORT_OF[vt]) for vt in call.ftype.results]


def dispatch_import(s, emu, module, name, ftype, args, model=None):
    """Run the model for import ``module.name`` on ``s`` (arguments already popped).

    Returns the successor states; running successors have the results pushed.
    """
    if model is None:
        model = emu.models.lookup(module, name)
    handler = model.handler if model is not None else stack_balance
    call = ImportCall(s, emu, list(args), module, name, ftype)
    try:
        results = handler(call)
    except SplitOn as sp:
        out = []
        pairs = fork_indexed(s, [c for c, _ in sp.cases], emu.solver, exhaustive=True)
        for i, child in pairs:
            if child.status != RUNNING:
                out.append(child)
                continue
            a2 = list(args)
            a2[sp.index] = sp.cases[i][1]
            out.extend(dispatch_import(child, emu, module, name, ftype, a2, model))
        return out
    if s.status != RUNNING:
        return [s]
    s.stack.extend(_coerce_results(results, ftype, f"{module}.{name}"))
    return [s]
