import math
import random

import pytest
import z3

from symwasm import floats, smt
from symwasm import terms as T
from symwasm.errors import SortError, UnboundVariable

BV_BIN = [T.bvadd, T.bvsub, T.bvmul, T.bvand, T.bvor, T.bvxor, T.bvshl, T.bvlshr, T.bvashr,
          T.bvrotl, T.bvrotr, T.bvudiv, T.bvsdiv, T.bvurem, T.bvsrem]
BV_UN = [T.bvnot, T.bvneg, T.bvclz, T.bvctz, T.bvpopcnt]
BV_CMP = [T.eq, T.ult, T.ule, T.ugt, T.uge, T.slt, T.sle, T.sgt, T.sge]
FP_BIN = [T.fadd, T.fsub, T.fmul, T.fdiv, T.fmin, T.fmax, T.fcopysign]
FP_UN = [T.fabs, T.fneg, T.fsqrt, T.fceil, T.ffloor, T.ftrunc, T.fnearest]
FP_CMP = [T.feq, T.flt, T.fle]

EDGE32 = [0, 1, 31, 32, 0x7FFFFFFF, 0x80000000, 0xFFFFFFFF]
EDGE64 = [0, 1, 63, 64, 0x7FFFFFFFFFFFFFFF, 0x8000000000000000, 0xFFFFFFFFFFFFFFFF]


def _bv_val(rng, w):
    if rng.random() < 0.3:
        return rng.choice(EDGE32 if w == 32 else EDGE64)
    return rng.getrandbits(w)


def _fp_val(rng, w):
    r = rng.random()
    if r < 0.15:
        return floats.canon_nan(w)
    if r < 0.3:
        x = rng.choice([0.0, -0.0, math.inf, -math.inf, 0.5, -2.5, 1e-40])
    else:
        x = rng.uniform(-1e6, 1e6)
    return floats.from_float(x, w)


class Gen:
    """Random well-sorted terms over a fixed variable pool."""

    def __init__(self, rng):
        self.rng = rng
        self.vars = {32: [T.var("x", T.BV32), T.var("y", T.BV32)],
                     64: [T.var("a", T.BV64), T.var("b", T.BV64)],
                     "f32": [T.var("p", T.F32)], "f64": [T.var("r", T.F64)]}

    def model(self):
        rng = self.rng
        return {"x": _bv_val(rng, 32), "y": _bv_val(rng, 32), "a": _bv_val(rng, 64),
                "b": _bv_val(rng, 64), "p": _fp_val(rng, 32), "r": _fp_val(rng, 64)}

    def leaf(self, kind):
        rng = self.rng
        if rng.random() < 0.6:
            return rng.choice(self.vars[kind])
        if kind in (32, 64):
            return T.bv(_bv_val(rng, kind), kind)
        w = 32 if kind == "f32" else 64
        return (T.f32 if w == 32 else T.f64)(_fp_val(rng, w))

    def bv(self, w, depth):
        rng = self.rng
        if depth == 0:
            return self.leaf(w)
        k = rng.random()
        if k < 0.45:
            return rng.choice(BV_BIN)(self.bv(w, depth - 1), self.bv(w, depth - 1))
        if k < 0.6:
            return rng.choice(BV_UN)(self.bv(w, depth - 1))
        if k < 0.7:
            return T.ite(self.boolean(depth - 1), self.bv(w, depth - 1), self.bv(w, depth - 1))
        if k < 0.8:
            other = 64 if w == 32 else 32
            t = self.bv(other, depth - 1)
            if w == 32:
                return T.extract(31, 0, t)
            return rng.choice([T.zext, T.sext])(t, 32)
        if k < 0.88:
            return T.bool_to_bv(self.boolean(depth - 1), w)
        if k < 0.94:
            kind = "f32" if w == 32 else "f64"
            return T.fp_to_ieee(self.fp(kind, depth - 1))
        return self.leaf(w)

    def fp(self, kind, depth):
        rng = self.rng
        if depth == 0:
            return self.leaf(kind)
        k = rng.random()
        if k < 0.4:
            return rng.choice(FP_BIN)(self.fp(kind, depth - 1), self.fp(kind, depth - 1))
        if k < 0.65:
            return rng.choice(FP_UN)(self.fp(kind, depth - 1))
        sort = T.F32 if kind == "f32" else T.F64
        if k < 0.75:
            other = "f64" if kind == "f32" else "f32"
            return T.fp_convert(self.fp(other, depth - 1), sort)
        if k < 0.85:
            w = rng.choice([32, 64])
            return rng.choice([T.sbv_to_fp, T.ubv_to_fp])(self.bv(w, depth - 1), sort)
        if k < 0.92:
            return T.ieee_to_fp(self.bv(32 if kind == "f32" else 64, depth - 1), sort)
        return self.leaf(kind)

    def boolean(self, depth):
        rng = self.rng
        k = rng.random()
        if depth == 0 or k < 0.5:
            w = rng.choice([32, 64])
            return rng.choice(BV_CMP)(self.bv(w, max(depth - 1, 0)), self.bv(w, max(depth - 1, 0)))
        if k < 0.65:
            kind = rng.choice(["f32", "f64"])
            return rng.choice(FP_CMP)(self.fp(kind, depth - 1), self.fp(kind, depth - 1))
        if k < 0.75:
            return T.fisnan(self.fp(rng.choice(["f32", "f64"]), depth - 1))
        if k < 0.85:
            return T.not_(self.boolean(depth - 1))
        return rng.choice([T.and_, T.or_])(self.boolean(depth - 1), self.boolean(depth - 1))


def z3_value(t, model):
    """Evaluate ``t`` with z3 after substituting the model."""
    e = smt.to_z3(t)
    subs = []
    for v in T.free_vars(t):
        # float variables are carried as their IEEE bit patterns
        subs.append((smt.to_z3(v), z3.BitVecVal(model[v.value], v.sort.width)))
    r = z3.simplify(z3.substitute(e, *subs) if subs else e)
    if t.sort is T.BOOL:
        return z3.is_true(r)
    v = r.as_long()
    if t.sort.is_fp and floats.is_nan_bits(v, t.sort.width):
        return "nan"
    return v


def ours(t, model):
    v = T.evaluate(t, model)
    if t.sort.is_fp and floats.is_nan_bits(v, t.sort.width):
        return "nan"
    return v


def test_random_terms_agree_with_z3():
    rng = random.Random(1234)
    g = Gen(rng)
    trials = 0
    while trials < 10_000:
        kind = rng.random()
        if kind < 0.5:
            t = g.bv(rng.choice([32, 64]), rng.randint(1, 3))
        elif kind < 0.8:
            t = g.boolean(rng.randint(1, 3))
        else:
            t = g.fp(rng.choice(["f32", "f64"]), rng.randint(1, 2))
        model = g.model()
        assert ours(t, model) == z3_value(t, model), T.to_str(t)
        trials += 1


def test_constant_folding_matches_z3_per_operator():
    rng = random.Random(7)
    for _ in range(2000):
        w = rng.choice([32, 64])
        a, b = _bv_val(rng, w), _bv_val(rng, w)
        for op in BV_BIN + BV_CMP:
            t = op(T.bv(a, w), T.bv(b, w))
            assert t.op is T.CONST
            assert ours(t, {}) == z3_value(op(T.var("u", T.bv_sort(w)), T.bv(b, w)), {"u": a})


def test_fp_to_int_in_range_agrees_with_z3():
    rng = random.Random(3)
    x = T.var("r", T.F64)
    for _ in range(300):
        v = floats.from_float(rng.uniform(-2e9, 2e9), 64)
        for t in (T.fp_to_sbv(x, 32), T.fp_to_sbv(x, 64)):
            assert ours(t, {"r": v}) == z3_value(t, {"r": v})
        v = floats.from_float(rng.uniform(0, 4e9), 64)
        assert ours(T.fp_to_ubv(x, 32), {"r": v}) == z3_value(T.fp_to_ubv(x, 32), {"r": v})


def test_hash_consing_and_equality():
    x = T.var("x", T.BV32)
    assert T.bvadd(x, T.bv32(1)) == T.bvadd(x, T.bv32(1))
    assert hash(T.bvadd(x, T.bv32(1))) == hash(T.bvadd(x, T.bv32(1)))
    assert T.bvadd(x, T.bv32(1)) != T.bvadd(x, T.bv32(2))


def test_simplifications():
    x = T.var("x", T.BV32)
    assert T.bvadd(x, T.bv32(0)) is x or T.bvadd(x, T.bv32(0)) == x
    assert T.is_true(T.eq(x, x))
    assert T.is_false(T.not_(T.eq(x, x)))
    assert T.extract(31, 0, x) == x


def test_sort_errors():
    with pytest.raises(SortError):
        T.bvadd(T.var("x", T.BV32), T.var("a", T.BV64))
    with pytest.raises(SortError):
        T.bv_sort(0)


def test_evaluate_unbound_and_default():
    x = T.var("x", T.BV32)
    t = T.bvadd(x, T.bv32(1))
    with pytest.raises(UnboundVariable):
        T.evaluate(t, {})
    assert T.evaluate(t, {}, default=0) == 1


def test_free_vars_and_has_fp():
    x, p = T.var("x", T.BV32), T.var("p", T.F32)
    t = T.bvadd(x, T.fp_to_ieee(p))
    assert T.free_vars(t) == frozenset({x, p})
    assert T.has_fp(t)
    assert not T.has_fp(T.bvadd(x, x))
