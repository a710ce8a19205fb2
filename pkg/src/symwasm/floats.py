"""Concrete IEEE-754 helpers operating on raw bit patterns.

Arithmetic results that are NaN are canonicalized; sign-manipulating ops
(abs, neg, copysign) and reinterpretations are pure bit operations.
"""

import math
import struct

F32_CANON_NAN = 0x7FC00000
F64_CANON_NAN = 0x7FF8000000000000
F32_SIGN = 0x80000000
F64_SIGN = 0x8000000000000000

_pack_f = struct.Struct("<f").pack
_unpack_f = struct.Struct("<f").unpack
_pack_I = struct.Struct("<I").pack
_unpack_I = struct.Struct("<I").unpack
_pack_d = struct.Struct("<d").pack
_unpack_d = struct.Struct("<d").unpack
_pack_Q = struct.Struct("<Q").pack
_unpack_Q = struct.Struct("<Q").unpack


def f32_to_float(bits):
    return _unpack_f(_pack_I(bits))[0]


def f64_to_float(bits):
    return _unpack_d(_pack_Q(bits))[0]


def float_to_f64(x):
    if x != x:
        return F64_CANON_NAN
    return _unpack_Q(_pack_d(x))[0]


def float_to_f32(x):
    """Round a double to the nearest f32 (ties to even) and return its bits."""
    if x != x:
        return F32_CANON_NAN
    try:
        return _unpack_I(_pack_f(x))[0]
    except OverflowError:
        return 0xFF800000 if x < 0 else 0x7F800000


def to_float(bits, width):
    return f32_to_float(bits) if width == 32 else f64_to_float(bits)


def from_float(x, width):
    return float_to_f32(x) if width == 32 else float_to_f64(x)


def is_nan_bits(bits, width):
    if width == 32:
        return (bits & 0x7F800000) == 0x7F800000 and bits & 0x007FFFFF != 0
    return (bits & 0x7FF0000000000000) == 0x7FF0000000000000 and bits & 0x000FFFFFFFFFFFFF != 0


def canon_nan(width):
    return F32_CANON_NAN if width == 32 else F64_CANON_NAN


def sign_mask(width):
    return F32_SIGN if width == 32 else F64_SIGN


# arithmetic ---------------------------------------------------------------
# f32 ops are evaluated in double precision and rounded once; for + - * / sqrt
# this is exact because a double holds more than 2*24+2 significand bits.

def _div(a, b):
    if b == 0.0:
        if a != a or a == 0.0:
            return math.nan
        neg = (math.copysign(1.0, a) < 0) != (math.copysign(1.0, b) < 0)
        return -math.inf if neg else math.inf
    return a / b


def _sqrt(a):
    if a != a or a < 0:
        return math.nan
    return math.sqrt(a)


def binop(op, a_bits, b_bits, width):
    a = to_float(a_bits, width)
    b = to_float(b_bits, width)
    if op == "fadd":
        r = a + b
    elif op == "fsub":
        r = a - b
    elif op == "fmul":
        r = a * b
    elif op == "fdiv":
        r = _div(a, b)
    elif op == "fmin":
        if a != a or b != b:
            return canon_nan(width)
        if a == 0.0 and b == 0.0:
            return a_bits if a_bits & sign_mask(width) else b_bits
        r = min(a, b)
    elif op == "fmax":
        if a != a or b != b:
            return canon_nan(width)
        if a == 0.0 and b == 0.0:
            return b_bits if a_bits & sign_mask(width) else a_bits
        r = max(a, b)
    elif op == "fcopysign":
        s = sign_mask(width)
        return (a_bits & ~s) | (b_bits & s)
    else:
        raise ValueError(op)
    return from_float(r, width)


def _round_integral(x, mode):
    if x != x or math.isinf(x) or x == 0.0:
        return x
    if mode == "fceil":
        r = math.ceil(x)
    elif mode == "ffloor":
        r = math.floor(x)
    elif mode == "ftrunc":
        r = math.trunc(x)
    else:
        r = round(x)  # ties to even
    return math.copysign(float(r), x)


def unop(op, a_bits, width):
    s = sign_mask(width)
    if op == "fabs":
        return a_bits & ~s
    if op == "fneg":
        return a_bits ^ s
    a = to_float(a_bits, width)
    if a != a:
        return canon_nan(width)
    if op == "fsqrt":
        return from_float(_sqrt(a), width)
    if op in ("fceil", "ffloor", "ftrunc", "fnearest"):
        return from_float(_round_integral(a, op), width)
    raise ValueError(op)


def compare(op, a_bits, b_bits, width):
    a = to_float(a_bits, width)
    b = to_float(b_bits, width)
    if op == "feq":
        return a == b
    if op == "flt":
        return a < b
    if op == "fle":
        return a <= b
    raise ValueError(op)


# conversions --------------------------------------------------------------

def int_to_float(n, width):
    """Correctly rounded conversion of a Python int to f32/f64 bits."""
    if width == 64:
        return float_to_f64(float(n))
    if abs(n) < (1 << 53):
        return float_to_f32(float(n))
    # keep 30 significant bits plus a sticky bit so the final rounding is single
    sign = -1 if n < 0 else 1
    m = abs(n)
    k = m.bit_length() - 30
    sticky = 1 if m & ((1 << k) - 1) else 0
    m = (m >> k) | sticky
    return float_to_f32(sign * math.ldexp(float(m), k))


def convert(a_bits, src_width, dst_width):
    """f32.demote_f64 / f64.promote_f32."""
    x = to_float(a_bits, src_width)
    return from_float(x, dst_width)


def trunc_to_int(a_bits, width):
    """Truncate toward zero; ``None`` for NaN or infinity."""
    x = to_float(a_bits, width)
    if x != x or math.isinf(x):
        return None
    return math.trunc(x)
