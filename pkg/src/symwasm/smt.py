"""Translation of terms to z3 and back.

Floats travel through z3 as IEEE bit patterns (``BitVec`` of 32/64 bits).
Arithmetic converts to the FP theory, rounds to nearest-even and converts
back, mapping any NaN result to the canonical quiet NaN. Sign operations
(abs, neg, copysign) stay pure bit operations. This keeps the solver's view
bit-for-bit identical to :func:`symwasm.terms.evaluate`.
"""

import z3

from symwasm import floats
from symwasm import terms as T

RNE = z3.RNE()
_ROUNDING = {"fceil": z3.RTP(), "ffloor": z3.RTN(), "ftrunc": z3.RTZ(), "fnearest": z3.RNE()}
_FPSORT = {32: z3.Float32(), 64: z3.Float64()}


def _fp(x, w):
    return z3.fpBVToFP(x, _FPSORT[w])


def _bits(r, w):
    """IEEE bits of an FP expression, NaNs canonicalized."""
    return z3.If(z3.fpIsNaN(r), z3.BitVecVal(floats.canon_nan(w), w), z3.fpToIEEEBV(r))


def _shift_amount(b, w):
    if w & (w - 1) == 0:
        return b & (w - 1)
    return z3.URem(b, z3.BitVecVal(w, w))


def _clz(a, w):
    r = z3.BitVecVal(w, w)
    for i in range(w):
        r = z3.If(z3.Extract(i, i, a) == 1, z3.BitVecVal(w - 1 - i, w), r)
    return r


def _ctz(a, w):
    r = z3.BitVecVal(w, w)
    for i in range(w - 1, -1, -1):
        r = z3.If(z3.Extract(i, i, a) == 1, z3.BitVecVal(i, w), r)
    return r


def _popcnt(a, w):
    if w == 1:
        return a
    return z3.Sum([z3.ZeroExt(w - 1, z3.Extract(i, i, a)) for i in range(w)])


def _minmax(op, x, y, w):
    fx, fy = _fp(x, w), _fp(y, w)
    sign = z3.Extract(w - 1, w - 1, x) == 1
    if op == "fmin":
        zeros = z3.If(sign, x, y)
        plain = z3.fpToIEEEBV(z3.fpMin(fx, fy))
    else:
        zeros = z3.If(sign, y, x)
        plain = z3.fpToIEEEBV(z3.fpMax(fx, fy))
    nan = z3.Or(z3.fpIsNaN(fx), z3.fpIsNaN(fy))
    both_zero = z3.And(z3.fpIsZero(fx), z3.fpIsZero(fy))
    return z3.If(nan, z3.BitVecVal(floats.canon_nan(w), w), z3.If(both_zero, zeros, plain))


def _node(t, a):
    """z3 expression for node ``t`` given translated children ``a``."""
    op = t.op
    w = t.sort.width
    if op == "bvadd":
        return a[0] + a[1]
    if op == "bvsub":
        return a[0] - a[1]
    if op == "bvmul":
        return a[0] * a[1]
    if op == "bvudiv":
        return z3.UDiv(a[0], a[1])
    if op == "bvsdiv":
        return a[0] / a[1]
    if op == "bvurem":
        return z3.URem(a[0], a[1])
    if op == "bvsrem":
        return z3.SRem(a[0], a[1])
    if op == "bvand":
        return a[0] & a[1]
    if op == "bvor":
        return a[0] | a[1]
    if op == "bvxor":
        return a[0] ^ a[1]
    if op == "bvshl":
        return a[0] << _shift_amount(a[1], w)
    if op == "bvlshr":
        return z3.LShR(a[0], _shift_amount(a[1], w))
    if op == "bvashr":
        return a[0] >> _shift_amount(a[1], w)
    if op == "bvrotl":
        return z3.RotateLeft(a[0], _shift_amount(a[1], w))
    if op == "bvrotr":
        return z3.RotateRight(a[0], _shift_amount(a[1], w))
    if op == "bvnot":
        return ~a[0]
    if op == "bvclz":
        return _clz(a[0], w)
    if op == "bvctz":
        return _ctz(a[0], w)
    if op == "bvpopcnt":
        return _popcnt(a[0], w)
    if op == "eq":
        return a[0] == a[1]
    if op == "bvult":
        return z3.ULT(a[0], a[1])
    if op == "bvule":
        return z3.ULE(a[0], a[1])
    if op == "bvslt":
        return a[0] < a[1]
    if op == "bvsle":
        return a[0] <= a[1]
    if op == "extract":
        return z3.Extract(t.value[0], t.value[1], a[0])
    if op == "concat":
        return z3.Concat(*a)
    if op == "zext":
        return z3.ZeroExt(t.value, a[0])
    if op == "sext":
        return z3.SignExt(t.value, a[0])
    if op == "ite":
        return z3.If(a[0], a[1], a[2])
    if op == "not":
        return z3.Not(a[0])
    if op == "and":
        return z3.And(*a)
    if op == "or":
        return z3.Or(*a)
    # floats (children are bit patterns)
    if op in ("fadd", "fsub", "fmul", "fdiv"):
        fn = {"fadd": z3.fpAdd, "fsub": z3.fpSub, "fmul": z3.fpMul, "fdiv": z3.fpDiv}[op]
        return _bits(fn(RNE, _fp(a[0], w), _fp(a[1], w)), w)
    if op in ("fmin", "fmax"):
        return _minmax(op, a[0], a[1], w)
    if op == "fcopysign":
        m = floats.sign_mask(w)
        return (a[0] & z3.BitVecVal(m ^ ((1 << w) - 1), w)) | (a[1] & z3.BitVecVal(m, w))
    if op == "fabs":
        return a[0] & z3.BitVecVal(floats.sign_mask(w) ^ ((1 << w) - 1), w)
    if op == "fneg":
        return a[0] ^ z3.BitVecVal(floats.sign_mask(w), w)
    if op == "fsqrt":
        return _bits(z3.fpSqrt(RNE, _fp(a[0], w)), w)
    if op in _ROUNDING:
        return _bits(z3.fpRoundToIntegral(_ROUNDING[op], _fp(a[0], w)), w)
    if op in ("feq", "flt", "fle"):
        cw = t.args[0].sort.width
        fn = {"feq": z3.fpEQ, "flt": z3.fpLT, "fle": z3.fpLEQ}[op]
        return fn(_fp(a[0], cw), _fp(a[1], cw))
    if op == "fisnan":
        return z3.fpIsNaN(_fp(a[0], t.args[0].sort.width))
    if op == "fp_to_sbv":
        return z3.fpToSBV(z3.RTZ(), _fp(a[0], t.args[0].sort.width), z3.BitVecSort(w))
    if op == "fp_to_ubv":
        return z3.fpToUBV(z3.RTZ(), _fp(a[0], t.args[0].sort.width), z3.BitVecSort(w))
    if op == "sbv_to_fp":
        return _bits(z3.fpSignedToFP(RNE, a[0], _FPSORT[w]), w)
    if op == "ubv_to_fp":
        return _bits(z3.fpUnsignedToFP(RNE, a[0], _FPSORT[w]), w)
    if op == "fp_convert":
        return _bits(z3.fpFPToFP(RNE, _fp(a[0], t.args[0].sort.width), _FPSORT[w]), w)
    if op in ("fp_to_ieee", "ieee_to_fp"):
        return a[0]
    raise T.SortError(f"no z3 translation for {op!r}")


def _leaf(t):
    if t.sort is T.BOOL:
        if t.op is T.CONST:
            return z3.BoolVal(t.value)
        return z3.Bool(t.value)
    w = t.sort.width
    if t.op is T.CONST:
        return z3.BitVecVal(t.value, w)
    return z3.BitVec(t.value, w)


def to_z3(t):
    """Translate (and cache on the node) a term into a z3 expression."""
    if t._z3 is not None:
        return t._z3
    for n in T._postorder([t]):
        if n._z3 is not None:
            continue
        if not n.args:
            n._z3 = _leaf(n)
        else:
            n._z3 = _node(n, [c._z3 for c in n.args])
    return t._z3


def model_values(model, variables, conv=None):
    """Read ``variables`` (Terms) out of a z3 model as a name -> value dict."""
    conv = conv or to_z3
    out = {}
    for v in variables:
        val = model.eval(conv(v), model_completion=True)
        if v.sort is T.BOOL:
            out[v.value] = z3.is_true(val)
        else:
            out[v.value] = val.as_long()
    return out


def to_smtlib(preds):
    """SMT-LIB v2 text of a conjunction of predicates."""
    s = z3.Solver()
    for p in preds:
        s.add(to_z3(p))
    return s.to_smt2()
