"""Models of common C library functions.

They apply to imports from ``env`` and to module functions exported under
the same names. String and memory helpers read through the memory model and
fold symbolic bytes into merged ite terms instead of forking.
"""

import math

from symwasm import floats
from symwasm import terms as T
from symwasm.binary.module import FuncType
from symwasm.binary.opcodes import F64, I32
from symwasm.external.models import Fault

MAX_SCAN = 4096  # longest string a model walks before giving up

MODELS = {}


def _model(params, results):
    sig = FuncType(tuple(params), tuple(results))

    def deco(fn):
        def wrapper(call):
            try:
                return fn(call)
            except Fault:
                call.state.set_trap("out of bounds memory access")
                return None
        wrapper.__name__ = fn.__name__
        MODELS[fn.__name__] = (wrapper, sig)
        return fn
    return deco


# -- integer / float math ---------------------------------------------------------

def _iabs(x):
    return T.ite(T.slt(x, T.bv32(0)), T.bvneg(x), x)


@_model((I32,), (I32,))
def abs(call):  # noqa: A001 - C name
    return _iabs(call.arg(0))


@_model((I32,), (I32,))
def labs(call):
    return _iabs(call.arg(0))


@_model((F64,), (F64,))
def fabs(call):
    return T.fabs(call.arg(0))


@_model((F64,), (F64,))
def sqrt(call):
    return T.fsqrt(call.arg(0))


@_model((F64,), (F64,))
def floor(call):
    return T.ffloor(call.arg(0))


@_model((F64,), (F64,))
def ceil(call):
    return T.fceil(call.arg(0))


@_model((F64,), (F64,))
def trunc(call):
    return T.ftrunc(call.arg(0))


@_model((F64, F64), (F64,))
def pow(call):  # noqa: A001 - C name
    x, y = call.arg(0), call.arg(1)
    if y.op is not T.CONST:
        yv = call.emu.concretize(call.state, y, "pow exponent")
        y = T.f64(yv)
    e = floats.f64_to_float(y.value)
    if x.op is T.CONST:
        return T.f64(_pow_concrete(floats.f64_to_float(x.value), e))
    if e == 0.0:
        return T.f64(floats.float_to_f64(1.0))
    if e == 1.0:
        return x
    if e == 2.0:
        return T.fmul(x, x)
    if e == -1.0:
        return T.fdiv(T.f64(floats.float_to_f64(1.0)), x)
    if e == 0.5:
        # pow(-0, 0.5) is +0 and pow(-inf, 0.5) is +inf, unlike sqrt
        inf = T.f64(floats.float_to_f64(-math.inf))
        return T.ite(T.feq(x, inf), T.f64(floats.float_to_f64(math.inf)),
                     T.fabs(T.fsqrt(x)))
    if e.is_integer() and 0 < e <= 64:
        call.state.warn("pow with a symbolic base uses repeated multiplication")
        acc = x
        for _ in range(int(e) - 1):
            acc = T.fmul(acc, x)
        return acc
    call.state.warn("pow with a symbolic base and this exponent is not modelled exactly")
    return call.state.fresh_var("pow", T.F64)


def _pow_concrete(x, y):
    try:
        r = math.pow(x, y)
    except OverflowError:
        neg = x < 0 and float(y).is_integer() and int(y) % 2 == 1
        r = -math.inf if neg else math.inf
    except ValueError:
        if x == 0.0:
            neg = math.copysign(1.0, x) < 0 and float(y).is_integer() and int(y) % 2 == 1
            r = -math.inf if neg else math.inf
        else:
            r = math.nan
    return floats.float_to_f64(r)


# -- memory ---------------------------------------------------------------------

@_model((I32, I32, I32), (I32,))
def memcpy(call):
    dst, src, n = call.concrete(0), call.concrete(1), call.concrete(2, "memcpy length")
    if n:
        call.write_bytes(dst, call.read_bytes(src, n))
    return T.bv32(dst)


@_model((I32, I32, I32), (I32,))
def memmove(call):
    return memcpy(call)


@_model((I32, I32, I32), (I32,))
def memset(call):
    dst, n = call.concrete(0), call.concrete(2, "memset length")
    b = T.extract(7, 0, call.arg(1))
    if n:
        call.write_bytes(dst, [b] * n)
    return T.bv32(dst)


def _byte(call, addr):
    return call.load(addr, 1)


@_model((I32,), (I32,))
def strlen(call):
    p = call.concrete(0)
    conds = []
    for k in range(MAX_SCAN):
        b = _byte(call, p + k)
        z = T.eq(b, T.bv(0, 8))
        if T.is_true(z):
            break
        if not T.is_false(z):
            conds.append((k, z))
    else:
        call.state.warn("strlen scan limit reached")
    res = T.bv32(k)
    for i, z in reversed(conds):
        res = T.ite(z, T.bv32(i), res)
    return res


def _diff(a, b):
    return T.bvsub(T.zext(a, 24), T.zext(b, 24))


def _compare(call, l, r, limit):
    """Result of the libc ``strncmp`` loop over at most ``limit`` positions."""
    if limit == 0:
        return T.bv32(0)
    steps = []
    for k in range(min(limit, MAX_SCAN)):
        a, b = _byte(call, l + k), _byte(call, r + k)
        stop = T.or_(T.not_(T.eq(a, b)), T.eq(a, T.bv(0, 8)))
        if k == limit - 1:
            stop = T.TRUE
        steps.append((stop, _diff(a, b)))
        if T.is_true(stop):
            break
    else:
        call.state.warn("string comparison scan limit reached")
    res = steps[-1][1]
    for stop, d in reversed(steps[:-1]):
        if not T.is_false(stop):
            res = T.ite(stop, d, res)
    return res


@_model((I32, I32), (I32,))
def strcmp(call):
    return _compare(call, call.concrete(0), call.concrete(1), MAX_SCAN + 1)


@_model((I32, I32, I32), (I32,))
def strncmp(call):
    return _compare(call, call.concrete(0), call.concrete(1), call.concrete(2, "strncmp length"))
