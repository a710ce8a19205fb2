"""Pure-Python concrete kernels (reference semantics for the compiled twin)."""

ADD, SUB, MUL, DIV_S, DIV_U, REM_S, REM_U, AND, OR, XOR, SHL, SHR_S, SHR_U, ROTL, ROTR = range(15)
EQ, NE, LT_S, LT_U, GT_S, GT_U, LE_S, LE_U, GE_S, GE_U = range(10)
CLZ, CTZ, POPCNT, EQZ = range(4)

# negative results are impossible for valid values, so traps are signalled in-band
TRAP_DIV_ZERO = -1
TRAP_OVERFLOW = -2


def read_uleb(data, pos, bits=32):
    """Decode an unsigned LEB128 of at most ``bits`` bits. Returns ``(value, new_pos)``."""
    result = 0
    shift = 0
    maxbytes = (bits + 6) // 7
    n = 0
    end = len(data)
    while True:
        if pos >= end:
            raise ValueError("truncated LEB128")
        b = data[pos]
        pos += 1
        n += 1
        if n == maxbytes:
            if b & 0x80:
                raise ValueError("integer representation too long")
            # unused high bits of the final byte must be zero
            if b >> (bits - shift):
                raise ValueError("integer too large")
            result |= b << shift
            return result, pos
        result |= (b & 0x7F) << shift
        shift += 7
        if not b & 0x80:
            return result, pos


def read_sleb(data, pos, bits=32):
    """Decode a signed LEB128 of at most ``bits`` bits as a Python int."""
    result = 0
    shift = 0
    maxbytes = (bits + 6) // 7
    n = 0
    end = len(data)
    while True:
        if pos >= end:
            raise ValueError("truncated LEB128")
        b = data[pos]
        pos += 1
        n += 1
        if n == maxbytes:
            if b & 0x80:
                raise ValueError("integer representation too long")
            rem = bits - shift  # meaningful bits in the last byte
            if rem < 7:
                # unused high bits must be a sign extension of bit rem-1
                top = b >> (rem - 1)
                if top not in (0, (0x7F >> (rem - 1))):
                    raise ValueError("integer too large")
            result |= (b & 0x7F) << shift
            shift += 7
            break
        result |= (b & 0x7F) << shift
        shift += 7
        if not b & 0x80:
            break
    if b & 0x40:
        result -= 1 << shift
    return result, pos


def _signed(v, width):
    if v >> (width - 1):
        return v - (1 << width)
    return v


def int_binop(op, a, b, width):
    """Concrete integer binary op on unsigned ``width``-bit values."""
    mask = (1 << width) - 1
    if op == ADD:
        return (a + b) & mask
    if op == SUB:
        return (a - b) & mask
    if op == MUL:
        return (a * b) & mask
    if op == AND:
        return a & b
    if op == OR:
        return a | b
    if op == XOR:
        return a ^ b
    if op == SHL:
        return (a << (b % width)) & mask
    if op == SHR_U:
        return a >> (b % width)
    if op == SHR_S:
        return (_signed(a, width) >> (b % width)) & mask
    if op == ROTL:
        k = b % width
        return ((a << k) | (a >> (width - k))) & mask
    if op == ROTR:
        k = b % width
        return ((a >> k) | (a << (width - k))) & mask
    if b == 0:
        return TRAP_DIV_ZERO
    if op == DIV_U:
        return a // b
    if op == REM_U:
        return a % b
    sa = _signed(a, width)
    sb = _signed(b, width)
    if op == DIV_S:
        if sa == -(1 << (width - 1)) and sb == -1:
            return TRAP_OVERFLOW
        q = abs(sa) // abs(sb)
        if (sa < 0) != (sb < 0):
            q = -q
        return q & mask
    if op == REM_S:
        r = abs(sa) % abs(sb)
        if sa < 0:
            r = -r
        return r & mask
    raise ValueError(f"unknown binop {op}")


def int_cmp(op, a, b, width):
    if op == EQ:
        return int(a == b)
    if op == NE:
        return int(a != b)
    if op == LT_U:
        return int(a < b)
    if op == GT_U:
        return int(a > b)
    if op == LE_U:
        return int(a <= b)
    if op == GE_U:
        return int(a >= b)
    sa = _signed(a, width)
    sb = _signed(b, width)
    if op == LT_S:
        return int(sa < sb)
    if op == GT_S:
        return int(sa > sb)
    if op == LE_S:
        return int(sa <= sb)
    if op == GE_S:
        return int(sa >= sb)
    raise ValueError(f"unknown cmp {op}")


def int_unop(op, a, width):
    if op == CLZ:
        return width - a.bit_length()
    if op == CTZ:
        if a == 0:
            return width
        return (a & -a).bit_length() - 1
    if op == POPCNT:
        return bin(a).count("1")
    if op == EQZ:
        return int(a == 0)
    raise ValueError(f"unknown unop {op}")
