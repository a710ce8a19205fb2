"""Sorted symbolic terms.

Terms are immutable. Structural equality defines identity; every node caches
its hash so equality checks between different terms are usually O(1).
Constructors fold constants and apply cheap local rewrites; all rewrites are
semantics-preserving (checked by ``tests/test_terms.py`` against z3).

Bit-vector constants store their value reduced to ``[0, 2**w)``; float
constants store their IEEE bit pattern; boolean constants store ``True`` or
``False``.
"""

from symwasm import _kernels as K
from symwasm import floats
from symwasm.errors import SortError, UnboundVariable


class Sort:
    __slots__ = ("kind", "width", "name")

    def __init__(self, kind, width, name):
        self.kind = kind
        self.width = width
        self.name = name

    def __repr__(self):
        return self.name

    def __reduce__(self):
        if self.kind == "bv":
            return (bv_sort, (self.width,))
        return (_named_sort, (self.name,))

    @property
    def is_bv(self):
        return self.kind == "bv"

    @property
    def is_fp(self):
        return self.kind == "fp"

    @property
    def is_bool(self):
        return self.kind == "bool"


BOOL = Sort("bool", 1, "bool")
F32 = Sort("fp", 32, "f32")
F64 = Sort("fp", 64, "f64")
_BV_SORTS = {}


def bv_sort(width):
    s = _BV_SORTS.get(width)
    if s is None:
        if width <= 0:
            raise SortError(f"invalid bit-vector width {width}")
        s = _BV_SORTS[width] = Sort("bv", width, f"bv{width}")
    return s


def _named_sort(name):
    return {"bool": BOOL, "f32": F32, "f64": F64}[name]


BV1, BV8, BV16, BV32, BV64 = (bv_sort(w) for w in (1, 8, 16, 32, 64))


def fp_sort(width):
    return F32 if width == 32 else F64


CONST = "const"
VAR = "var"


class Term:
    __slots__ = ("op", "sort", "args", "value", "_hash", "_z3", "_fv")

    def __init__(self, op, sort, args=(), value=None):
        self.op = op
        self.sort = sort
        self.args = args
        self.value = value
        self._hash = hash((op, sort.name, value, args))
        self._z3 = None
        self._fv = None

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Term) or self._hash != other._hash:
            return False
        stack = [(self, other)]
        seen = set()
        while stack:
            a, b = stack.pop()
            if a is b:
                continue
            if (a._hash != b._hash or a.op != b.op or a.sort is not b.sort
                    or a.value != b.value or len(a.args) != len(b.args)):
                return False
            key = (id(a), id(b))
            if key in seen:
                continue
            seen.add(key)
            stack.extend(zip(a.args, b.args))
        return True

    def __ne__(self, other):
        return not self.__eq__(other)

    @property
    def is_const(self):
        return self.op is CONST

    @property
    def is_var(self):
        return self.op is VAR

    @property
    def width(self):
        return self.sort.width

    def __repr__(self):
        return to_str(self)

    def __bool__(self):
        raise TypeError("a Term has no truth value; use is_true()/is_false() or the solver")


def to_str(t, limit=2000):
    """Compact s-expression rendering, truncated after ``limit`` characters."""
    out = []
    budget = [limit]

    def emit(s):
        out.append(s)
        budget[0] -= len(s)

    stack = [t]
    while stack and budget[0] > 0:
        x = stack.pop()
        if isinstance(x, str):
            emit(x)
            continue
        if x.op is CONST:
            if x.sort is BOOL:
                emit("true" if x.value else "false")
            elif x.sort.kind == "fp":
                emit(f"{x.sort.name}:{floats.to_float(x.value, x.sort.width)!r}")
            else:
                emit(f"#x{x.value:0{(x.sort.width + 3) // 4}x}")
        elif x.op is VAR:
            emit(str(x.value))
        else:
            head = x.op if x.value is None else f"({x.op} {x.value})"
            emit(f"({head}")
            stack.append(")")
            for a in reversed(x.args):
                stack.append(a)
                stack.append(" ")
    if stack:
        out.append("...")
    return "".join(out)


# ---------------------------------------------------------------------------
# leaves

def const(sort, value):
    if sort.kind == "bv":
        value &= (1 << sort.width) - 1
    elif sort is BOOL:
        return TRUE if value else FALSE
    return Term(CONST, sort, (), value)


def bv(value, width):
    return Term(CONST, bv_sort(width), (), value & ((1 << width) - 1))


def bv32(value):
    return Term(CONST, BV32, (), value & 0xFFFFFFFF)


def bv64(value):
    return Term(CONST, BV64, (), value & 0xFFFFFFFFFFFFFFFF)


def f32(bits):
    return Term(CONST, F32, (), bits & 0xFFFFFFFF)


def f64(bits):
    return Term(CONST, F64, (), bits & 0xFFFFFFFFFFFFFFFF)


def var(name, sort):
    return Term(VAR, sort, (), name)


TRUE = Term(CONST, BOOL, (), True)
FALSE = Term(CONST, BOOL, (), False)
ZERO32 = bv32(0)
ONE32 = bv32(1)
ZERO64 = bv64(0)


def boolval(b):
    return TRUE if b else FALSE


def is_true(t):
    return t is TRUE or (t.op is CONST and t.sort is BOOL and t.value is True)


def is_false(t):
    return t is FALSE or (t.op is CONST and t.sort is BOOL and t.value is False)


def _signed(v, w):
    return v - (1 << w) if v >> (w - 1) else v


def _check_bv(*args):
    s = args[0].sort
    if s.kind != "bv":
        raise SortError(f"expected bit-vector, got {s}")
    for a in args[1:]:
        if a.sort is not s:
            raise SortError(f"sort mismatch: {s} vs {a.sort}")
    return s


def _check_fp(*args):
    s = args[0].sort
    if s.kind != "fp":
        raise SortError(f"expected float, got {s}")
    for a in args[1:]:
        if a.sort is not s:
            raise SortError(f"sort mismatch: {s} vs {a.sort}")
    return s


def _check_bool(*args):
    for a in args:
        if a.sort is not BOOL:
            raise SortError(f"expected bool, got {a.sort}")


# ---------------------------------------------------------------------------
# concrete semantics shared by folding and evaluation
# each entry: fn(sort, params, args, values) -> value

def _bvbin(kop):
    def f(sort, params, args, vals):
        w = sort.width
        a, b = vals
        if kop in (K.DIV_U, K.DIV_S, K.REM_U, K.REM_S) and b == 0:
            # SMT-LIB semantics for a zero divisor; the emulator traps before this
            if kop == K.DIV_U:
                return (1 << w) - 1
            if kop == K.REM_U or kop == K.REM_S:
                return a
            return 1 if _signed(a, w) < 0 else (1 << w) - 1
        if kop == K.DIV_S and b == (1 << w) - 1 and a == 1 << (w - 1):
            return a  # wraps
        return K.int_binop(kop, a, b, w)
    return f


def _bvcmp(kop):
    def f(sort, params, args, vals):
        return bool(K.int_cmp(kop, vals[0], vals[1], args[0].sort.width))
    return f


def _bvun(kop):
    def f(sort, params, args, vals):
        return K.int_unop(kop, vals[0], sort.width)
    return f


def _fold_concat(sort, params, args, vals):
    r = 0
    for a, v in zip(args, vals):
        r = (r << a.sort.width) | v
    return r


def _fold_ite(sort, params, args, vals):
    return vals[1] if vals[0] else vals[2]


def _fold_eq(sort, params, args, vals):
    return vals[0] == vals[1]


def _fold_fp_to_int(signed):
    def f(sort, params, args, vals):
        w = sort.width
        v = floats.trunc_to_int(vals[0], args[0].sort.width)
        if v is None:
            return 0
        lo, hi = (-(1 << (w - 1)), (1 << (w - 1)) - 1) if signed else (0, (1 << w) - 1)
        v = min(max(v, lo), hi)  # out-of-range is guarded by the emulator
        return v & ((1 << w) - 1)
    return f


def _fold_int_to_fp(signed):
    def f(sort, params, args, vals):
        n = vals[0]
        if signed:
            n = _signed(n, args[0].sort.width)
        return floats.int_to_float(n, sort.width)
    return f


FOLD = {
    "bvadd": _bvbin(K.ADD), "bvsub": _bvbin(K.SUB), "bvmul": _bvbin(K.MUL),
    "bvudiv": _bvbin(K.DIV_U), "bvsdiv": _bvbin(K.DIV_S),
    "bvurem": _bvbin(K.REM_U), "bvsrem": _bvbin(K.REM_S),
    "bvand": _bvbin(K.AND), "bvor": _bvbin(K.OR), "bvxor": _bvbin(K.XOR),
    "bvshl": _bvbin(K.SHL), "bvlshr": _bvbin(K.SHR_U), "bvashr": _bvbin(K.SHR_S),
    "bvrotl": _bvbin(K.ROTL), "bvrotr": _bvbin(K.ROTR),
    "bvclz": _bvun(K.CLZ), "bvctz": _bvun(K.CTZ), "bvpopcnt": _bvun(K.POPCNT),
    "bvnot": lambda s, p, a, v: v[0] ^ ((1 << s.width) - 1),
    "bvult": _bvcmp(K.LT_U), "bvule": _bvcmp(K.LE_U),
    "bvslt": _bvcmp(K.LT_S), "bvsle": _bvcmp(K.LE_S),
    "eq": _fold_eq,
    "extract": lambda s, p, a, v: (v[0] >> p[1]) & ((1 << (p[0] - p[1] + 1)) - 1),
    "concat": _fold_concat,
    "zext": lambda s, p, a, v: v[0],
    "sext": lambda s, p, a, v: _signed(v[0], a[0].sort.width) & ((1 << s.width) - 1),
    "ite": _fold_ite,
    "not": lambda s, p, a, v: not v[0],
    "and": lambda s, p, a, v: all(v),
    "or": lambda s, p, a, v: any(v),
    "fadd": lambda s, p, a, v: floats.binop("fadd", v[0], v[1], s.width),
    "fsub": lambda s, p, a, v: floats.binop("fsub", v[0], v[1], s.width),
    "fmul": lambda s, p, a, v: floats.binop("fmul", v[0], v[1], s.width),
    "fdiv": lambda s, p, a, v: floats.binop("fdiv", v[0], v[1], s.width),
    "fmin": lambda s, p, a, v: floats.binop("fmin", v[0], v[1], s.width),
    "fmax": lambda s, p, a, v: floats.binop("fmax", v[0], v[1], s.width),
    "fcopysign": lambda s, p, a, v: floats.binop("fcopysign", v[0], v[1], s.width),
    "fabs": lambda s, p, a, v: floats.unop("fabs", v[0], s.width),
    "fneg": lambda s, p, a, v: floats.unop("fneg", v[0], s.width),
    "fsqrt": lambda s, p, a, v: floats.unop("fsqrt", v[0], s.width),
    "fceil": lambda s, p, a, v: floats.unop("fceil", v[0], s.width),
    "ffloor": lambda s, p, a, v: floats.unop("ffloor", v[0], s.width),
    "ftrunc": lambda s, p, a, v: floats.unop("ftrunc", v[0], s.width),
    "fnearest": lambda s, p, a, v: floats.unop("fnearest", v[0], s.width),
    "feq": lambda s, p, a, v: floats.compare("feq", v[0], v[1], a[0].sort.width),
    "flt": lambda s, p, a, v: floats.compare("flt", v[0], v[1], a[0].sort.width),
    "fle": lambda s, p, a, v: floats.compare("fle", v[0], v[1], a[0].sort.width),
    "fisnan": lambda s, p, a, v: floats.is_nan_bits(v[0], a[0].sort.width),
    "fp_to_sbv": _fold_fp_to_int(True),
    "fp_to_ubv": _fold_fp_to_int(False),
    "sbv_to_fp": _fold_int_to_fp(True),
    "ubv_to_fp": _fold_int_to_fp(False),
    "fp_convert": lambda s, p, a, v: floats.convert(v[0], a[0].sort.width, s.width),
    "fp_to_ieee": lambda s, p, a, v: v[0],
    "ieee_to_fp": lambda s, p, a, v: v[0],
}


def raw(op, sort, args, value=None):
    """Build a node without any simplification (used by tests and fallbacks)."""
    return Term(op, sort, tuple(args), value)


def _fold(op, sort, args, value=None):
    v = FOLD[op](sort, value, args, [a.value for a in args])
    return const(sort, v)


def _all_const(args):
    for a in args:
        if a.op is not CONST:
            return False
    return True


def _is_const_ite(t):
    """ite(c, k1, k2) with constant branches."""
    return t.op == "ite" and t.args[1].op is CONST and t.args[2].op is CONST


# ---------------------------------------------------------------------------
# bit-vector constructors

def _bin(op, a, b, sort):
    return Term(op, sort, (a, b))


def bvadd(a, b):
    s = _check_bv(a, b)
    if a.op is CONST:
        if b.op is CONST:
            return const(s, a.value + b.value)
        a, b = b, a
    if b.op is CONST:
        if b.value == 0:
            return a
        if a.op == "bvadd" and a.args[1].op is CONST:
            return bvadd(a.args[0], const(s, a.args[1].value + b.value))
        if _is_const_ite(a):
            return ite(a.args[0], bvadd(a.args[1], b), bvadd(a.args[2], b))
    return _bin("bvadd", a, b, s)


def bvsub(a, b):
    s = _check_bv(a, b)
    if a.op is CONST and b.op is CONST:
        return const(s, a.value - b.value)
    if b.op is CONST:
        return bvadd(a, const(s, -b.value))
    if a == b:
        return const(s, 0)
    return _bin("bvsub", a, b, s)


def bvmul(a, b):
    s = _check_bv(a, b)
    if a.op is CONST:
        if b.op is CONST:
            return const(s, a.value * b.value)
        a, b = b, a
    if b.op is CONST:
        if b.value == 0:
            return b
        if b.value == 1:
            return a
    return _bin("bvmul", a, b, s)


def _divlike(op):
    def f(a, b):
        s = _check_bv(a, b)
        if a.op is CONST and b.op is CONST:
            return _fold(op, s, (a, b))
        if b.op is CONST and b.value == 1 and op in ("bvudiv", "bvsdiv"):
            return a
        return _bin(op, a, b, s)
    f.__name__ = op
    return f


bvudiv = _divlike("bvudiv")
bvsdiv = _divlike("bvsdiv")
bvurem = _divlike("bvurem")
bvsrem = _divlike("bvsrem")


def _bool_ite_pair(a, b):
    """Both operands of shape ite(c, 1, 0)?"""
    return (a.op == "ite" and b.op == "ite" and a.args[1].op is CONST and a.args[2].op is CONST
            and b.args[1].op is CONST and b.args[2].op is CONST
            and a.args[1].value == 1 and a.args[2].value == 0
            and b.args[1].value == 1 and b.args[2].value == 0)


def bvand(a, b):
    s = _check_bv(a, b)
    if a.op is CONST:
        if b.op is CONST:
            return const(s, a.value & b.value)
        a, b = b, a
    if b.op is CONST:
        if b.value == 0:
            return b
        if b.value == (1 << s.width) - 1:
            return a
        if _is_const_ite(a):
            return ite(a.args[0], bvand(a.args[1], b), bvand(a.args[2], b))
    if a == b:
        return a
    if _bool_ite_pair(a, b):
        return ite(and_(a.args[0], b.args[0]), a.args[1], a.args[2])
    return _bin("bvand", a, b, s)


def bvor(a, b):
    s = _check_bv(a, b)
    if a.op is CONST:
        if b.op is CONST:
            return const(s, a.value | b.value)
        a, b = b, a
    if b.op is CONST:
        if b.value == 0:
            return a
        if b.value == (1 << s.width) - 1:
            return b
        if _is_const_ite(a):
            return ite(a.args[0], bvor(a.args[1], b), bvor(a.args[2], b))
    if a == b:
        return a
    if _bool_ite_pair(a, b):
        return ite(or_(a.args[0], b.args[0]), a.args[1], a.args[2])
    return _bin("bvor", a, b, s)


def bvxor(a, b):
    s = _check_bv(a, b)
    if a.op is CONST:
        if b.op is CONST:
            return const(s, a.value ^ b.value)
        a, b = b, a
    if b.op is CONST:
        if b.value == 0:
            return a
        if _is_const_ite(a):
            return ite(a.args[0], bvxor(a.args[1], b), bvxor(a.args[2], b))
    if a == b:
        return const(s, 0)
    if _bool_ite_pair(a, b):
        return ite(not_(eq(a.args[0], b.args[0])), a.args[1], a.args[2])
    return _bin("bvxor", a, b, s)


def _shiftlike(op):
    def f(a, b):
        s = _check_bv(a, b)
        if a.op is CONST and b.op is CONST:
            return _fold(op, s, (a, b))
        if b.op is CONST and b.value % s.width == 0:
            return a
        return _bin(op, a, b, s)
    f.__name__ = op
    return f


bvshl = _shiftlike("bvshl")
bvlshr = _shiftlike("bvlshr")
bvashr = _shiftlike("bvashr")
bvrotl = _shiftlike("bvrotl")
bvrotr = _shiftlike("bvrotr")


def _unlike(op):
    def f(a):
        s = _check_bv(a)
        if a.op is CONST:
            return _fold(op, s, (a,))
        return Term(op, s, (a,))
    f.__name__ = op
    return f


bvclz = _unlike("bvclz")
bvctz = _unlike("bvctz")
bvpopcnt = _unlike("bvpopcnt")


def bvnot(a):
    s = _check_bv(a)
    if a.op is CONST:
        return const(s, ~a.value)
    if a.op == "bvnot":
        return a.args[0]
    return Term("bvnot", s, (a,))


def bvneg(a):
    return bvsub(const(_check_bv(a), 0), a)


# comparisons ---------------------------------------------------------------

def eq(a, b):
    if a.sort is not b.sort:
        raise SortError(f"eq: sort mismatch {a.sort} vs {b.sort}")
    if a.sort.kind == "fp":
        raise SortError("eq on floats is structural; use feq for IEEE equality")
    if a.op is CONST:
        if b.op is CONST:
            return boolval(a.value == b.value)
        a, b = b, a
    if a == b:
        return TRUE
    if a.sort is BOOL and b.op is CONST:
        return a if b.value else not_(a)
    if b.op is CONST:
        if _is_const_ite(a):
            return ite(a.args[0], eq(a.args[1], b), eq(a.args[2], b))
        if a.op == "zext":
            inner = a.args[0]
            if b.value >> inner.sort.width:
                return FALSE
            return eq(inner, const(inner.sort, b.value))
        if a.op == "bvadd" and a.args[1].op is CONST:
            return eq(a.args[0], const(a.sort, b.value - a.args[1].value))
        if a.op == "concat" and a.args[0].op is CONST:
            hi = a.args[0]
            rest_w = a.sort.width - hi.sort.width
            if (b.value >> rest_w) != hi.value:
                return FALSE
            rest = concat(*a.args[1:])
            return eq(rest, const(rest.sort, b.value))
    return Term("eq", BOOL, (a, b))


def _cmp(op, a, b):
    s = _check_bv(a, b)
    if a.op is CONST and b.op is CONST:
        return _fold(op, BOOL, (a, b))
    if a == b:
        return boolval(op in ("bvule", "bvsle"))
    w = s.width
    if op == "bvult":
        if b.op is CONST and b.value == 0:
            return FALSE
        if a.op is CONST and a.value == (1 << w) - 1:
            return FALSE
    if op == "bvule":
        if a.op is CONST and a.value == 0:
            return TRUE
        if b.op is CONST and b.value == (1 << w) - 1:
            return TRUE
    if _is_const_ite(a) and b.op is CONST:
        return ite(a.args[0], _cmp(op, a.args[1], b), _cmp(op, a.args[2], b))
    if _is_const_ite(b) and a.op is CONST:
        return ite(b.args[0], _cmp(op, a, b.args[1]), _cmp(op, a, b.args[2]))
    return Term(op, BOOL, (a, b))


def ult(a, b):
    return _cmp("bvult", a, b)


def ule(a, b):
    return _cmp("bvule", a, b)


def ugt(a, b):
    return _cmp("bvult", b, a)


def uge(a, b):
    return _cmp("bvule", b, a)


def slt(a, b):
    return _cmp("bvslt", a, b)


def sle(a, b):
    return _cmp("bvsle", a, b)


def sgt(a, b):
    return _cmp("bvslt", b, a)


def sge(a, b):
    return _cmp("bvsle", b, a)


# booleans ------------------------------------------------------------------

def not_(a):
    _check_bool(a)
    if a.op is CONST:
        return FALSE if a.value else TRUE
    if a.op == "not":
        return a.args[0]
    return Term("not", BOOL, (a,))


def _nary_bool(op, args, unit, zero):
    flat = []
    seen = set()
    for a in args:
        _check_bool(a)
        if a.op == op:
            items = a.args
        else:
            items = (a,)
        for x in items:
            if x.op is CONST:
                if x.value == zero:
                    return boolval(zero)
                continue
            if x in seen:
                continue
            seen.add(x)
            flat.append(x)
    if not flat:
        return boolval(unit)
    if len(flat) == 1:
        return flat[0]
    for x in flat:
        if x.op == "not" and x.args[0] in seen:
            return boolval(zero)
    return Term(op, BOOL, tuple(flat))


def and_(*args):
    return _nary_bool("and", args, True, False)


def or_(*args):
    return _nary_bool("or", args, False, True)


def implies(a, b):
    return or_(not_(a), b)


def ite(c, a, b):
    _check_bool(c)
    if a.sort is not b.sort:
        raise SortError(f"ite: branch sorts differ ({a.sort} vs {b.sort})")
    if c.op is CONST:
        return a if c.value else b
    if a == b:
        return a
    if a.sort is BOOL and a.op is CONST and b.op is CONST:
        return c if a.value else not_(c)
    if c.op == "not":
        return ite(c.args[0], b, a)
    return Term("ite", a.sort, (c, a, b))


# structure -----------------------------------------------------------------

def extract(hi, lo, a):
    s = _check_bv(a)
    if not 0 <= lo <= hi < s.width:
        raise SortError(f"extract [{hi}:{lo}] out of range for {s}")
    w = hi - lo + 1
    if w == s.width:
        return a
    if a.op is CONST:
        return const(bv_sort(w), a.value >> lo)
    op = a.op
    if op == "extract":
        base = a.value[1]
        return extract(hi + base, lo + base, a.args[0])
    if op == "concat":
        # walk from the least significant part
        pos = 0
        parts = []
        for part in reversed(a.args):
            pw = part.sort.width
            plo, phi = pos, pos + pw - 1
            if phi >= lo and plo <= hi:
                parts.append(extract(min(hi, phi) - plo, max(lo, plo) - plo, part))
            pos += pw
            if pos > hi:
                break
        parts.reverse()
        return concat(*parts)
    if op == "zext" or op == "sext":
        inner = a.args[0]
        iw = inner.sort.width
        if hi < iw:
            return extract(hi, lo, inner)
        if op == "zext" and lo >= iw:
            return const(bv_sort(w), 0)
    if _is_const_ite(a):
        return ite(a.args[0], extract(hi, lo, a.args[1]), extract(hi, lo, a.args[2]))
    return Term("extract", bv_sort(w), (a,), (hi, lo))


def concat(*args):
    if not args:
        raise SortError("concat of nothing")
    parts = []
    for a in args:
        _check_bv(a)
        items = a.args if a.op == "concat" else (a,)
        for x in items:
            if parts:
                prev = parts[-1]
                if prev.op is CONST and x.op is CONST:
                    parts[-1] = const(bv_sort(prev.sort.width + x.sort.width),
                                      (prev.value << x.sort.width) | x.value)
                    continue
                if (prev.op == "extract" and x.op == "extract" and prev.value[1] == x.value[0] + 1
                        and prev.args[0] == x.args[0]):
                    parts[-1] = extract(prev.value[0], x.value[1], x.args[0])
                    continue
            parts.append(x)
    if len(parts) == 1:
        return parts[0]
    width = sum(p.sort.width for p in parts)
    if parts[0].op is CONST and parts[0].value == 0 and len(parts) == 2:
        return zext(parts[1], parts[0].sort.width)
    return Term("concat", bv_sort(width), tuple(parts))


def zext(a, n):
    s = _check_bv(a)
    if n == 0:
        return a
    if a.op is CONST:
        return const(bv_sort(s.width + n), a.value)
    if a.op == "zext":
        return zext(a.args[0], n + a.value)
    if _is_const_ite(a):
        return ite(a.args[0], zext(a.args[1], n), zext(a.args[2], n))
    return Term("zext", bv_sort(s.width + n), (a,), n)


def sext(a, n):
    s = _check_bv(a)
    if n == 0:
        return a
    if a.op is CONST:
        return const(bv_sort(s.width + n), _signed(a.value, s.width))
    if _is_const_ite(a):
        return ite(a.args[0], sext(a.args[1], n), sext(a.args[2], n))
    return Term("sext", bv_sort(s.width + n), (a,), n)


def bool_to_bv(c, width=32):
    """ite(c, 1, 0) as a ``width``-bit vector."""
    return ite(c, bv(1, width), bv(0, width))


def bv_to_bool(a):
    """``a != 0``."""
    return not_(eq(a, const(a.sort, 0)))


# floats --------------------------------------------------------------------

def _fp_bin(op):
    def f(a, b):
        s = _check_fp(a, b)
        if a.op is CONST and b.op is CONST:
            return _fold(op, s, (a, b))
        return Term(op, s, (a, b))
    f.__name__ = op
    return f


def _fp_un(op):
    def f(a):
        s = _check_fp(a)
        if a.op is CONST:
            return _fold(op, s, (a,))
        if op == "fneg" and a.op == "fneg":
            return a.args[0]
        return Term(op, s, (a,))
    f.__name__ = op
    return f


def _fp_cmp(op):
    def f(a, b):
        _check_fp(a, b)
        if a.op is CONST and b.op is CONST:
            return _fold(op, BOOL, (a, b))
        return Term(op, BOOL, (a, b))
    f.__name__ = op
    return f


fadd, fsub, fmul, fdiv = (_fp_bin(o) for o in ("fadd", "fsub", "fmul", "fdiv"))
fmin, fmax, fcopysign = (_fp_bin(o) for o in ("fmin", "fmax", "fcopysign"))
fabs, fneg, fsqrt = (_fp_un(o) for o in ("fabs", "fneg", "fsqrt"))
fceil, ffloor, ftrunc, fnearest = (_fp_un(o) for o in ("fceil", "ffloor", "ftrunc", "fnearest"))
feq, flt, fle = (_fp_cmp(o) for o in ("feq", "flt", "fle"))


def fisnan(a):
    _check_fp(a)
    if a.op is CONST:
        return _fold("fisnan", BOOL, (a,))
    return Term("fisnan", BOOL, (a,))


def fp_to_sbv(a, width):
    _check_fp(a)
    s = bv_sort(width)
    if a.op is CONST:
        return _fold("fp_to_sbv", s, (a,))
    return Term("fp_to_sbv", s, (a,), width)


def fp_to_ubv(a, width):
    _check_fp(a)
    s = bv_sort(width)
    if a.op is CONST:
        return _fold("fp_to_ubv", s, (a,))
    return Term("fp_to_ubv", s, (a,), width)


def sbv_to_fp(a, sort):
    _check_bv(a)
    if a.op is CONST:
        return _fold("sbv_to_fp", sort, (a,))
    return Term("sbv_to_fp", sort, (a,), sort.name)


def ubv_to_fp(a, sort):
    _check_bv(a)
    if a.op is CONST:
        return _fold("ubv_to_fp", sort, (a,))
    return Term("ubv_to_fp", sort, (a,), sort.name)


def fp_convert(a, sort):
    _check_fp(a)
    if a.sort is sort:
        return a
    if a.op is CONST:
        return _fold("fp_convert", sort, (a,))
    return Term("fp_convert", sort, (a,), sort.name)


def fp_to_ieee(a):
    s = _check_fp(a)
    out = bv_sort(s.width)
    if a.op is CONST:
        return const(out, a.value)
    if a.op == "ieee_to_fp":
        return a.args[0]
    return Term("fp_to_ieee", out, (a,))


def ieee_to_fp(a, sort):
    s = _check_bv(a)
    if s.width != sort.width:
        raise SortError(f"reinterpret width mismatch {s} -> {sort}")
    if a.op is CONST:
        return const(sort, a.value)
    if a.op == "fp_to_ieee" and a.args[0].sort is sort:
        return a.args[0]
    return Term("ieee_to_fp", sort, (a,), sort.name)


# ---------------------------------------------------------------------------
# generic constructor

_BUILDERS = {
    "bvadd": bvadd, "bvsub": bvsub, "bvmul": bvmul, "bvudiv": bvudiv, "bvsdiv": bvsdiv,
    "bvurem": bvurem, "bvsrem": bvsrem, "bvand": bvand, "bvor": bvor, "bvxor": bvxor,
    "bvshl": bvshl, "bvlshr": bvlshr, "bvashr": bvashr, "bvrotl": bvrotl, "bvrotr": bvrotr,
    "bvclz": bvclz, "bvctz": bvctz, "bvpopcnt": bvpopcnt, "bvnot": bvnot, "bvneg": bvneg,
    "eq": eq, "bvult": ult, "bvule": ule, "bvslt": slt, "bvsle": sle,
    "bvugt": ugt, "bvuge": uge, "bvsgt": sgt, "bvsge": sge,
    "not": not_, "and": and_, "or": or_, "ite": ite, "concat": concat,
    "fadd": fadd, "fsub": fsub, "fmul": fmul, "fdiv": fdiv, "fmin": fmin, "fmax": fmax,
    "fcopysign": fcopysign, "fabs": fabs, "fneg": fneg, "fsqrt": fsqrt, "fceil": fceil,
    "ffloor": ffloor, "ftrunc": ftrunc, "fnearest": fnearest, "feq": feq, "flt": flt,
    "fle": fle, "fisnan": fisnan, "fp_to_ieee": fp_to_ieee,
}


def mk(op, *args, **params):
    """Generic constructor: ``mk("bvadd", a, b)``, ``mk("extract", a, hi=15, lo=8)``."""
    if op == "extract":
        return extract(params["hi"], params["lo"], args[0])
    if op in ("zext", "sext"):
        return (zext if op == "zext" else sext)(args[0], params["n"])
    if op in ("fp_to_sbv", "fp_to_ubv"):
        return (fp_to_sbv if op == "fp_to_sbv" else fp_to_ubv)(args[0], params["width"])
    if op in ("sbv_to_fp", "ubv_to_fp", "fp_convert", "ieee_to_fp"):
        fn = {"sbv_to_fp": sbv_to_fp, "ubv_to_fp": ubv_to_fp, "fp_convert": fp_convert,
              "ieee_to_fp": ieee_to_fp}[op]
        return fn(args[0], params["sort"])
    try:
        fn = _BUILDERS[op]
    except KeyError:
        raise SortError(f"unknown operator {op!r}") from None
    return fn(*args)


def rebuild(t, args):
    """Re-create ``t`` with new children through the simplifying constructors."""
    op = t.op
    if op == "extract":
        return extract(t.value[0], t.value[1], args[0])
    if op in ("zext", "sext"):
        return (zext if op == "zext" else sext)(args[0], t.value)
    if op in ("fp_to_sbv", "fp_to_ubv"):
        return (fp_to_sbv if op == "fp_to_sbv" else fp_to_ubv)(args[0], t.value)
    if op in ("sbv_to_fp", "ubv_to_fp", "fp_convert", "ieee_to_fp"):
        return mk(op, args[0], sort=t.sort)
    return _BUILDERS[op](*args)


# ---------------------------------------------------------------------------
# evaluation and traversal

def _postorder(roots):
    """Unique nodes of the DAGs under ``roots``, children before parents."""
    seen = set()
    order = []
    stack = [(r, False) for r in roots]
    while stack:
        t, done = stack.pop()
        if done:
            order.append(t)
            continue
        if id(t) in seen:
            continue
        seen.add(id(t))
        stack.append((t, True))
        for a in t.args:
            if id(a) not in seen:
                stack.append((a, False))
    return order


def evaluate(t, model, default=None):
    """Concrete value of ``t`` under ``model`` (a mapping name -> value).

    Bit-vectors evaluate to non-negative ints, floats to bit patterns and
    booleans to ``True``/``False``. Variables missing from ``model`` take
    ``default`` when it is given, else raise :class:`UnboundVariable`.
    """
    if t.op is CONST:
        return t.value
    memo = {}
    for n in _postorder([t]):
        if n.op is CONST:
            memo[id(n)] = n.value
        elif n.op is VAR:
            v = model.get(n.value, default)
            if v is None:
                raise UnboundVariable(n.value)
            if n.sort.kind == "bv":
                v &= (1 << n.sort.width) - 1
            memo[id(n)] = v
        else:
            vals = [memo[id(a)] for a in n.args]
            memo[id(n)] = FOLD[n.op](n.sort, n.value, n.args, vals)
    return memo[id(t)]


eval_term = evaluate


def has_fp(t):
    """True when a floating-point node occurs in ``t``."""
    return t.sort.is_fp or any(n.sort.is_fp for n in _postorder([t]))


def free_vars(t):
    """Frozenset of variable terms occurring in ``t`` (cached per node)."""
    if t._fv is not None:
        return t._fv
    if t.op is VAR:
        t._fv = frozenset((t,))
        return t._fv
    if not t.args:
        t._fv = frozenset()
        return t._fv
    for n in _postorder([t]):
        if n._fv is not None:
            continue
        if n.op is VAR:
            n._fv = frozenset((n,))
        elif not n.args:
            n._fv = frozenset()
        elif len(n.args) == 1:
            n._fv = n.args[0]._fv
        else:
            acc = set()
            for a in n.args:
                acc |= a._fv
            n._fv = frozenset(acc)
    return t._fv


def size(t):
    """Number of distinct nodes in the DAG."""
    return len(_postorder([t]))


def substitute(t, mapping):
    """Replace variables by terms (``mapping``: name -> Term), re-simplifying."""
    memo = {}
    for n in _postorder([t]):
        if n.op is VAR:
            memo[id(n)] = mapping.get(n.value, n)
        elif n.op is CONST:
            memo[id(n)] = n
        else:
            args = tuple(memo[id(a)] for a in n.args)
            if all(x is y for x, y in zip(args, n.args)):
                memo[id(n)] = n
            else:
                memo[id(n)] = rebuild(n, args)
    return memo[id(t)]
