# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled concrete kernels. Same contract as ``_pykernels``."""

from symwasm._kernels import _pykernels as _py

ctypedef unsigned long long u64
ctypedef long long i64

cdef enum:
    ADD, SUB, MUL, DIV_S, DIV_U, REM_S, REM_U, AND_, OR_, XOR_, SHL, SHR_S, SHR_U, ROTL, ROTR

cdef enum:
    EQ, NE, LT_S, LT_U, GT_S, GT_U, LE_S, LE_U, GE_S, GE_U

cdef enum:
    CLZ, CTZ, POPCNT, EQZ


def read_uleb(const unsigned char[:] data, Py_ssize_t pos, int bits=32):
    cdef u64 result = 0
    cdef int shift = 0
    cdef int maxbytes = (bits + 6) // 7
    cdef int n = 0
    cdef Py_ssize_t end = data.shape[0]
    cdef unsigned char b
    while True:
        if pos >= end:
            raise ValueError("truncated LEB128")
        b = data[pos]
        pos += 1
        n += 1
        if n == maxbytes:
            if b & 0x80:
                raise ValueError("integer representation too long")
            if (b >> (bits - shift)) != 0:
                raise ValueError("integer too large")
            result |= (<u64>b) << shift
            return result, pos
        result |= (<u64>(b & 0x7F)) << shift
        shift += 7
        if not (b & 0x80):
            return result, pos


def read_sleb(const unsigned char[:] data, Py_ssize_t pos, int bits=32):
    cdef u64 result = 0
    cdef int shift = 0
    cdef int maxbytes = (bits + 6) // 7
    cdef int n = 0
    cdef int rem
    cdef Py_ssize_t end = data.shape[0]
    cdef unsigned char b, top
    while True:
        if pos >= end:
            raise ValueError("truncated LEB128")
        b = data[pos]
        pos += 1
        n += 1
        if n == maxbytes:
            if b & 0x80:
                raise ValueError("integer representation too long")
            rem = bits - shift
            if rem < 7:
                # unused high bits must be a sign extension of bit rem-1
                top = b >> (rem - 1)
                if top != 0 and top != (0x7F >> (rem - 1)):
                    raise ValueError("integer too large")
            result |= (<u64>(b & 0x7F)) << shift
            shift += 7
            break
        result |= (<u64>(b & 0x7F)) << shift
        shift += 7
        if not (b & 0x80):
            break
    if (b & 0x40) and shift < 64:
        result |= (~(<u64>0)) << shift
    return <i64>result, pos


cdef inline i64 _sgn32(u64 v):
    return <i64>(<int>(<unsigned int>v))


cdef inline i64 _sgn64(u64 v):
    return <i64>v


cdef inline int _clz64(u64 a, int width):
    cdef int n = 0
    if a == 0:
        return width
    while not (a & ((<u64>1) << (width - 1 - n))):
        n += 1
    return n


cdef inline int _ctz64(u64 a, int width):
    cdef int n = 0
    if a == 0:
        return width
    while not (a & ((<u64>1) << n)):
        n += 1
    return n


def int_binop(int op, a_obj, b_obj, int width):
    if width != 32 and width != 64:
        return _py.int_binop(op, a_obj, b_obj, width)
    cdef u64 a = a_obj
    cdef u64 b = b_obj
    cdef u64 mask = 0xFFFFFFFF if width == 32 else 0xFFFFFFFFFFFFFFFF
    cdef int k
    cdef i64 sa, sb
    if op == ADD:
        return (a + b) & mask
    if op == SUB:
        return (a - b) & mask
    if op == MUL:
        return (a * b) & mask
    if op == AND_:
        return a & b
    if op == OR_:
        return a | b
    if op == XOR_:
        return a ^ b
    k = <int>(b % width)
    if op == SHL:
        return (a << k) & mask
    if op == SHR_U:
        return a >> k
    if op == SHR_S:
        if width == 32:
            return (<u64>(_sgn32(a) >> k)) & mask
        return (<u64>(_sgn64(a) >> k)) & mask
    if op == ROTL:
        if k == 0:
            return a
        return ((a << k) | (a >> (width - k))) & mask
    if op == ROTR:
        if k == 0:
            return a
        return ((a >> k) | (a << (width - k))) & mask
    if b == 0:
        return -1
    if op == DIV_U:
        return a // b
    if op == REM_U:
        return a % b
    if width == 32:
        sa = _sgn32(a)
        sb = _sgn32(b)
        if op == DIV_S:
            if sa == -2147483648 and sb == -1:
                return -2
            return (<u64>(sa / sb)) & mask
        if op == REM_S:
            return (<u64>(sa % sb)) & mask
    else:
        if op == DIV_S or op == REM_S:
            # INT64_MIN / -1 is undefined in C; use the reference path for i64 signed division
            return _py.int_binop(op, a_obj, b_obj, width)
    raise ValueError("unknown binop %d" % op)


def int_cmp(int op, a_obj, b_obj, int width):
    if width != 32 and width != 64:
        return _py.int_cmp(op, a_obj, b_obj, width)
    cdef u64 a = a_obj
    cdef u64 b = b_obj
    cdef i64 sa, sb
    if op == EQ:
        return 1 if a == b else 0
    if op == NE:
        return 1 if a != b else 0
    if op == LT_U:
        return 1 if a < b else 0
    if op == GT_U:
        return 1 if a > b else 0
    if op == LE_U:
        return 1 if a <= b else 0
    if op == GE_U:
        return 1 if a >= b else 0
    if width == 32:
        sa = _sgn32(a)
        sb = _sgn32(b)
    else:
        sa = _sgn64(a)
        sb = _sgn64(b)
    if op == LT_S:
        return 1 if sa < sb else 0
    if op == GT_S:
        return 1 if sa > sb else 0
    if op == LE_S:
        return 1 if sa <= sb else 0
    if op == GE_S:
        return 1 if sa >= sb else 0
    raise ValueError("unknown cmp %d" % op)


def int_unop(int op, a_obj, int width):
    if width != 32 and width != 64:
        return _py.int_unop(op, a_obj, width)
    cdef u64 a = a_obj
    cdef int n = 0
    if op == CLZ:
        return _clz64(a, width)
    if op == CTZ:
        return _ctz64(a, width)
    if op == POPCNT:
        while a:
            a &= a - 1
            n += 1
        return n
    if op == EQZ:
        return 1 if a == 0 else 0
    raise ValueError("unknown unop %d" % op)
