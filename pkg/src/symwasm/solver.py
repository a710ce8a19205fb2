"""SMT query cache pool in front of z3.

A query is a set of boolean predicates. Tiers, in order:

1. exact hit on the predicate set (LRU, order-independent key);
2. a cached unsat core that is a subset of the query answers unsat;
3. the largest cached satisfiable subset seeds the answer: first its model
   is tried on the whole set, then the persistent incremental solver checks
   the set under assumptions, reusing everything it has learned so far;
4. otherwise a cold solver call.

Every answer equals what a fresh solver call on the same set would return.
"""

import collections
import logging
import time

import z3

from symwasm import smt
from symwasm import terms as T

log = logging.getLogger(__name__)

SAT, UNSAT, UNKNOWN = "sat", "unsat", "unknown"


class Result:
    __slots__ = ("verdict", "model")

    def __init__(self, verdict, model=None):
        self.verdict = verdict
        self.model = model

    @property
    def sat(self):
        return self.verdict == SAT

    @property
    def unsat(self):
        return self.verdict == UNSAT

    def __repr__(self):
        return f"Result({self.verdict})"


UNSAT_RESULT = Result(UNSAT)


class _Entry:
    __slots__ = ("key", "verdict", "model", "used")

    def __init__(self, key, verdict, model, used):
        self.key = key
        self.verdict = verdict
        self.model = model
        self.used = used


_EMPTY = _Entry(frozenset(), SAT, {}, 0)


def _configure(s, seed, timeout_ms):
    s.set("random_seed", seed)
    if timeout_ms:
        s.set("timeout", int(timeout_ms))


def _fp_tactic(ctx=None):
    # lower floats to bit-vectors first; the default solver is very slow on FP division
    return z3.Then("simplify", "fpa2bv", "qfbv", ctx=ctx)


def new_solver(preds, seed=0, timeout_ms=None, cores=False, ctx=None):
    """A z3 solver suited to ``preds``: bit-blasting when floats occur."""
    if any(T.has_fp(p) for p in preds):
        s = _fp_tactic(ctx).solver()
    else:
        s = z3.Solver(ctx=ctx)
        if cores:
            s.set("core.minimize", True)
    _configure(s, seed, timeout_ms)
    return s


def _free_vars(preds):
    out = set()
    for p in preds:
        out |= T.free_vars(p)
    return out


def decide_by_bindings(preds):
    """Settle ``preds`` without a solver when equalities pin their variables.

    Every ``var == const`` predicate binds its variable. A predicate whose
    variables are all bound is evaluated: one false predicate makes the set
    unsat, and if every predicate is bound and true the bindings are a model.
    Returns ``None`` when that is not enough to decide.
    """
    bind = {}
    for p in preds:
        if p.op == "eq":
            a, b = p.args
            if a.op is T.CONST:
                a, b = b, a
            if a.op is T.VAR and b.op is T.CONST:
                bind.setdefault(a.value, b.value)
    if not bind:
        return None
    complete = True
    for p in preds:
        if all(v.value in bind for v in T.free_vars(p)):
            if T.evaluate(p, bind) is not True:
                return UNSAT_RESULT
        else:
            complete = False
    return Result(SAT, bind) if complete else None


def holds(preds, model):
    """True when every predicate evaluates to true under ``model``."""
    try:
        return all(T.evaluate(p, model) is True for p in preds)
    except T.UnboundVariable:
        return False


class SolverPool:
    """The cache pool. ``enabled=False`` turns every query into a cold call."""

    def __init__(self, enabled=True, max_entries=100_000, seed=0, timeout_ms=None,
                 verify_cores=False, scan_limit=64, inc_limit=512, probe_limit=8, model_limit=16):
        self.enabled = enabled
        self.max_entries = max_entries
        self.seed = seed
        self.timeout_ms = timeout_ms
        self.verify_cores = verify_cores
        self.scan_limit = scan_limit
        self.probe_limit = probe_limit  # newest predicates tried when looking for the parent entry
        self.inc_limit = inc_limit  # tracked predicates before the incremental solver is rebuilt
        self.model_limit = model_limit
        z3.set_param("smt.random_seed", seed)
        z3.set_param("sat.random_seed", seed)
        self._entries = collections.OrderedDict()
        self._sat_recent = collections.OrderedDict()  # keys of sat entries, by recency
        self._models = collections.deque(maxlen=model_limit)  # recent distinct models, any path
        self._cores = collections.defaultdict(list)  # anchor predicate -> cores
        self._core_set = set()
        self._ordinal = 0
        self._inc = None
        self._tracked = {}
        self._fp = {}
        self.counters = collections.Counter()
        self.solver_time = 0.0

    # -- public API -------------------------------------------------------

    def check(self, pc):
        """Satisfiability of a :class:`PathCondition` (uses its parent as a hint)."""
        return self.query(pc.preds, hint=pc.parent_key)

    def query(self, preds, hint=None):
        self.counters["queries"] += 1
        # dedupe but keep path order so solver input is deterministic across runs
        preds = list(dict.fromkeys(p for p in preds if not T.is_true(p)))
        if any(T.is_false(p) for p in preds):
            self.counters["trivial"] += 1
            return UNSAT_RESULT
        if not preds:
            self.counters["trivial"] += 1
            return Result(SAT, {})
        decided = decide_by_bindings(preds)
        if decided is not None:
            self.counters["propagated"] += 1
            return decided
        key = frozenset(preds)
        if not self.enabled:
            return self._cold(key, preds)

        e = self._entries.get(key)
        if e is not None:
            self.counters["tier1"] += 1
            self._touch(e)
            return Result(e.verdict, e.model)

        if self._core_hit(key):
            self.counters["tier2"] += 1
            self._store(key, UNSAT, None)
            return UNSAT_RESULT

        # the empty condition is trivially sat, so every query has at least that base
        base = self._best_subset(key, preds, hint) or _EMPTY
        if base is not _EMPTY:
            self._touch(base)
        fresh = [p for p in preds if p not in base.key]
        model = self._reuse_model(key, fresh, base.model)
        if model is not None:
            self.counters["tier3"] += 1
            self.counters["model_reuse"] += 1
            self._store(key, SAT, model)
            return Result(SAT, model)
        res = self._incremental(key, preds)
        if res.verdict != UNKNOWN:
            self.counters["tier3"] += 1
        return res

    def insert(self, preds, result):
        """Record a verdict obtained elsewhere (unknown is ignored)."""
        ordered = list(dict.fromkeys(p for p in preds if not T.is_true(p)))
        key = frozenset(ordered)
        if result.verdict == UNKNOWN or key in self._entries:
            return
        self._store(key, result.verdict, result.model)
        if result.verdict == UNSAT:
            self._add_core(key, self._extract_core(ordered))

    def stats(self):
        c = self.counters
        out = {k: c[k] for k in ("queries", "trivial", "propagated", "tier1", "tier2", "tier3", "model_reuse",
                                 "incremental", "cold", "backend", "unknown", "core_checks",
                                 "optimize", "enumerate")}
        out["solver_time"] = round(self.solver_time, 6)
        out["entries"] = len(self._entries)
        out["cores"] = len(self._core_set)
        return out

    def reset_stats(self):
        self.counters.clear()
        self.solver_time = 0.0

    # convenience wrappers used by the emulator

    def may_be_true(self, pc, cond):
        if T.is_true(cond):
            return not pc.is_trivially_false()
        if T.is_false(cond):
            return False
        return self.query(pc.preds + (cond,), hint=pc.key).sat

    def must_be_true(self, pc, cond):
        if T.is_true(cond):
            return True
        return not self.may_be_true(pc, T.not_(cond))

    def bounds(self, pc, t):
        """Feasible unsigned (min, max) of bit-vector ``t`` under ``pc``."""
        if t.op is T.CONST:
            return t.value, t.value
        self.counters["optimize"] += 1
        out = []
        for minimize in (True, False):
            opt = z3.Optimize()
            opt.set("random_seed", self.seed)
            for p in pc.preds:
                opt.add(smt.to_z3(p))
            tz = smt.to_z3(t)
            h = opt.minimize(tz) if minimize else opt.maximize(tz)
            t0 = time.perf_counter()
            r = opt.check()
            self.solver_time += time.perf_counter() - t0
            if r != z3.sat:
                return None
            out.append(opt.model().eval(tz, model_completion=True).as_long())
            del h
        return out[0], out[1]

    def enumerate(self, pc, t, limit):
        """Up to ``limit`` distinct feasible values of ``t``; ``None`` if there are more."""
        if t.op is T.CONST:
            return [t.value]
        self.counters["enumerate"] += 1
        s = new_solver(pc.preds + (t,), self.seed, self.timeout_ms)
        for p in pc.preds:
            s.add(smt.to_z3(p))
        tz = smt.to_z3(t)
        vals = []
        while True:
            t0 = time.perf_counter()
            r = s.check()
            self.solver_time += time.perf_counter() - t0
            if r != z3.sat:
                return sorted(vals)
            if len(vals) == limit:
                return None
            v = s.model().eval(tz, model_completion=True).as_long()
            vals.append(v)
            s.add(tz != v)

    # -- tiers --------------------------------------------------------------

    def _reuse_model(self, key, fresh, base_model):
        """A cached model satisfying ``key``: the base's first, then recent ones."""
        candidates = [base_model] if base_model is not None else []
        candidates += [m for m in reversed(self._models) if m is not base_model]
        free = _free_vars(key)
        for m in candidates:
            model = dict(m)
            for v in free:
                model.setdefault(v.value, False if v.sort is T.BOOL else 0)
            # the predicates the base did not cover are the ones likely to fail
            if holds(fresh, model) and holds(key, model):
                return model
        return None

    def _touch(self, e):
        self._ordinal += 1
        e.used = self._ordinal
        self._entries.move_to_end(e.key)
        if e.verdict == SAT:
            self._sat_recent.move_to_end(e.key)

    def _store(self, key, verdict, model):
        if not self.enabled:
            return
        self._ordinal += 1
        e = self._entries.get(key)
        if e is None:
            e = self._entries[key] = _Entry(key, verdict, model, self._ordinal)
        self._entries.move_to_end(key)
        if verdict == SAT:
            self._sat_recent[key] = True
            self._sat_recent.move_to_end(key)
            if model is not None and (not self._models or self._models[-1] != model):
                self._models.append(model)
        while len(self._entries) > self.max_entries:
            old, _ = self._entries.popitem(last=False)
            self._sat_recent.pop(old, None)

    def _core_hit(self, key):
        cores = self._cores
        if not cores:
            return False
        for p in key:
            for core in cores.get(p, ()):
                if core <= key:
                    return True
        return False

    def _add_core(self, key, core):
        if core is None or core in self._core_set:
            return
        if self.verify_cores and core != key:
            # assumption cores are sound already; this re-check is for debugging
            self.counters["core_checks"] += 1
            self.counters["backend"] += 1
            s = new_solver(core, self.seed, self.timeout_ms)
            for p in core:
                s.add(smt.to_z3(p))
            if self._timed_check(s) != z3.unsat:
                core = key
        if core in self._core_set:
            return
        self._core_set.add(core)
        anchor = min(core, key=hash)
        self._cores[anchor].append(core)

    def _best_subset(self, key, ordered, hint):
        best = None
        if hint is not None:
            e = self._entries.get(hint)
            if e is not None and e.verdict == SAT and hint <= key:
                best = e
        if best is None or len(best.key) < len(key) - 1:
            # a child usually extends its parent by the newest predicates
            for p in ordered[-self.probe_limit:]:
                e = self._entries.get(key - {p})
                if e is not None and e.verdict == SAT:
                    best = e
                    break
        n = 0
        for k in reversed(self._sat_recent):
            if best is not None and len(k) <= len(best.key):
                n += 1
                if n >= self.scan_limit:
                    break
                continue
            if k <= key:
                best = self._entries[k]
            n += 1
            if n >= self.scan_limit:
                break
        return best

    def _has_fp(self, p):
        v = self._fp.get(p)
        if v is None:
            v = self._fp[p] = T.has_fp(p)
        return v

    def _timed_check(self, s, *assumptions):
        t0 = time.perf_counter()
        r = s.check(*assumptions)
        self.solver_time += time.perf_counter() - t0
        return r

    def _incremental_solver(self):
        # model and core extraction slow down as the solver accumulates assertions
        if len(self._tracked) > self.inc_limit:
            self._inc = None
            self._tracked = {}
        if self._inc is None:
            # raw assumption cores here: minimizing them made each check several times slower
            self._inc = z3.Solver()
            _configure(self._inc, self.seed, self.timeout_ms)
        return self._inc

    def _literal(self, p):
        lit = self._tracked.get(p)
        if lit is None:
            lit = z3.Bool(f"__t{len(self._tracked)}")
            self._tracked[p] = lit
            self._inc.add(z3.Implies(lit, smt.to_z3(p)))
        return lit

    def _incremental(self, key, ordered):
        if any(self._has_fp(p) for p in ordered):
            return self._cold(key, ordered)
        self.counters["incremental"] += 1
        self.counters["backend"] += 1
        s = self._incremental_solver()
        lits = {self._literal(p): p for p in ordered}
        r = self._timed_check(s, *lits)
        if r == z3.sat:
            t0 = time.perf_counter()
            model = smt.model_values(s.model(), _free_vars(key))
            self.solver_time += time.perf_counter() - t0
            self._store(key, SAT, model)
            return Result(SAT, model)
        if r == z3.unsat:
            t0 = time.perf_counter()
            core = frozenset(lits[c] for c in s.unsat_core() if c in lits) or key
            self.solver_time += time.perf_counter() - t0
            self._store(key, UNSAT, None)
            self._add_core(key, core)
            return UNSAT_RESULT
        self.counters["unknown"] += 1
        return Result(UNKNOWN)

    def _cold(self, key, ordered):
        self.counters["cold"] += 1
        self.counters["backend"] += 1
        s = new_solver(ordered, self.seed, self.timeout_ms, cores=self.enabled)
        if self.enabled:
            lits = {}
            for i, p in enumerate(ordered):
                lit = z3.Bool(f"__c{i}")
                lits[lit] = p
                s.add(z3.Implies(lit, smt.to_z3(p)))
            r = self._timed_check(s, *lits)
        else:
            for p in ordered:
                s.add(smt.to_z3(p))
            r = self._timed_check(s)
        if r == z3.sat:
            model = smt.model_values(s.model(), _free_vars(key))
            self._store(key, SAT, model)
            return Result(SAT, model)
        if r == z3.unsat:
            if self.enabled:
                core = frozenset(lits[c] for c in s.unsat_core() if c in lits) or key
                self._store(key, UNSAT, None)
                self._add_core(key, core)
            return UNSAT_RESULT
        self.counters["unknown"] += 1
        return Result(UNKNOWN)

    def _extract_core(self, ordered):
        s = new_solver(ordered, self.seed, self.timeout_ms, cores=True)
        lits = {}
        for i, p in enumerate(ordered):
            lit = z3.Bool(f"__x{i}")
            lits[lit] = p
            s.add(z3.Implies(lit, smt.to_z3(p)))
        self.counters["core_checks"] += 1
        self.counters["backend"] += 1
        if self._timed_check(s, *lits) != z3.unsat:
            return None
        return frozenset(lits[c] for c in s.unsat_core() if c in lits) or frozenset(ordered)


def solve_fresh(preds, seed=0, timeout_ms=None, isolated=False):
    """Model of a predicate set from a fresh solver (no caching).

    z3's choice of model depends on the order in which terms were created in
    its context. With ``isolated`` the query is rebuilt from SMT-LIB text in a
    new context, so the model depends only on ``preds`` and not on earlier
    queries. (``translate`` is not enough: it keeps traces of the old order.)
    """
    if isolated:
        ctx = z3.Context()
        s = new_solver(preds, seed, timeout_ms, ctx=ctx)
        s.add(z3.parse_smt2_string(smt.to_smtlib(preds), ctx=ctx))
        conv = lambda v: smt.to_z3(v).translate(ctx)  # noqa: E731 - variables only
    else:
        s = new_solver(preds, seed, timeout_ms)
        for p in preds:
            s.add(smt.to_z3(p))
        conv = None
    r = s.check()
    if r == z3.sat:
        return Result(SAT, smt.model_values(s.model(), _free_vars(preds), conv))
    if r == z3.unsat:
        return UNSAT_RESULT
    return Result(UNKNOWN)
