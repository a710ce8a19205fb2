"""Symbolic linear memory.

Memory is a set of disjoint half-open chunks ``[l, h)``. A chunk keeps its
concrete bytes in a ``bytearray`` and symbolic bytes in a sparse overlay
(offset -> 8-bit term); bytes outside every chunk read as zero. Chunks are
shared between forked memories and copied on first write.

Loads through a symbolic address are merged into a single guarded ``ite``
term (see :meth:`SymMemory.load_from`) instead of forking a state per
address.
"""

import bisect
import itertools

from symwasm import terms as T
from symwasm.binary.module import PAGE_SIZE, MAX_PAGES, const_expr_value

BLOCK = 256           # granularity of freshly created chunks
SOFT_CHUNK_CAP = 4096  # neighbours are extended only up to this size

_inv_ids = itertools.count()


class Chunk:
    __slots__ = ("l", "h", "data", "sym", "owner")

    def __init__(self, l, h, data=None, sym=None, owner=None):
        self.l = l
        self.h = h
        self.data = bytearray(h - l) if data is None else data
        self.sym = {} if sym is None else sym
        self.owner = owner  # token of the only memory allowed to mutate in place

    def copy(self, owner):
        return Chunk(self.l, self.h, bytearray(self.data), dict(self.sym), owner)

    def byte(self, off):
        t = self.sym.get(off)
        if t is None:
            return T.const(T.BV8, self.data[off])
        return t

    def read(self, off, n):
        """Little-endian term of ``n`` bytes at chunk offset ``off``."""
        sym = self.sym
        if not sym or not any((off + k) in sym for k in range(n)):
            return T.bv(int.from_bytes(self.data[off:off + n], "little"), 8 * n)
        return T.concat(*[self.byte(off + k) for k in range(n - 1, -1, -1)])

    def write_byte(self, off, b):
        if b.op is T.CONST:
            self.data[off] = b.value
            self.sym.pop(off, None)
        else:
            self.sym[off] = b

    def term(self):
        """The whole chunk as one ``8*(h-l)``-bit term (little-endian)."""
        return self.read(0, self.h - self.l)

    def __repr__(self):
        return f"Chunk[{self.l:#x},{self.h:#x}) sym={len(self.sym)}"


def _bytes_of(val, n):
    return [T.extract(8 * k + 7, 8 * k, val) for k in range(n)]


class SymMemory:
    """Linear memory of one state. ``fork`` is O(#chunks); chunks are copy-on-write."""

    __slots__ = ("pages", "max_pages", "_starts", "_chunks", "_token")

    def __init__(self, pages=0, max_pages=None):
        self.pages = pages
        self.max_pages = MAX_PAGES if max_pages is None else min(max_pages, MAX_PAGES)
        self._starts = []
        self._chunks = {}
        self._token = object()

    @classmethod
    def init_from_segments(cls, module):
        lim = module.memory_limits
        if lim is None:
            return cls(0, 0)
        mem = cls(lim.min, lim.max)
        for seg in module.data:
            off = const_expr_value(seg.offset)
            if seg.data and off is not None:
                mem._place(off, bytes(seg.data))
        return mem

    # -- structure ----------------------------------------------------------

    @property
    def size(self):
        return self.pages * PAGE_SIZE

    def fork(self):
        m = SymMemory.__new__(SymMemory)
        m.pages = self.pages
        m.max_pages = self.max_pages
        m._starts = list(self._starts)
        m._chunks = dict(self._chunks)
        m._token = object()
        self._token = object()  # everything is shared now
        return m

    def chunks(self):
        """``[(l, h), ...]`` in address order."""
        return [(l, self._chunks[l].h) for l in self._starts]

    def chunk_items(self):
        """``[((l, h), term), ...]``; each term is ``8*(h-l)`` bits wide."""
        return [((l, c.h), c.term()) for l, c in ((l, self._chunks[l]) for l in self._starts)]

    def check_invariants(self):
        prev_h = 0
        for l in self._starts:
            c = self._chunks[l]
            assert c.l == l and c.l < c.h, c
            assert c.l >= prev_h, "chunks overlap"
            assert len(c.data) == c.h - c.l
            assert all(0 <= o < c.h - c.l for o in c.sym)
            prev_h = c.h
        assert prev_h <= self.size

    def _writable(self, c):
        if c.owner is self._token:
            return c
        c = c.copy(self._token)
        self._chunks[c.l] = c
        return c

    def _insert(self, c):
        bisect.insort(self._starts, c.l)
        self._chunks[c.l] = c
        c.owner = self._token

    def _remove(self, c):
        i = bisect.bisect_left(self._starts, c.l)
        del self._starts[i]
        del self._chunks[c.l]

    def _overlapping(self, lo, hi):
        starts = self._starts
        i = bisect.bisect_right(starts, lo) - 1
        if i < 0:
            i = 0
        out = []
        while i < len(starts) and starts[i] < hi:
            c = self._chunks[starts[i]]
            if c.h > lo:
                out.append(c)
            i += 1
        return out

    def _find(self, addr):
        i = bisect.bisect_right(self._starts, addr) - 1
        if i >= 0:
            c = self._chunks[self._starts[i]]
            if addr < c.h:
                return c
        return None

    def _place(self, lo, data):
        """Data-segment initialization: one chunk per segment, merging only on overlap."""
        hi = lo + len(data)
        c = self._region(lo, hi, extend=False)
        c.data[lo - c.l:hi - c.l] = data
        for k in range(lo - c.l, hi - c.l):
            c.sym.pop(k, None)

    def _region(self, lo, hi, extend=True):
        """A writable chunk covering ``[lo, hi)``, merging/creating as needed."""
        over = self._overlapping(lo, hi)
        if len(over) == 1 and over[0].l <= lo and hi <= over[0].h:
            return self._writable(over[0])
        if over:
            nl = min(lo, over[0].l)
            nh = max(hi, over[-1].h)
        else:
            nl, nh = lo, hi
            if extend:
                # grow fresh chunks to a block boundary, without touching neighbours
                nl = max(lo - lo % BLOCK, 0)
                nh = min(-(-hi // BLOCK) * BLOCK, self.size) if self.size else hi
                nh = max(nh, hi)
                i = bisect.bisect_right(self._starts, lo) - 1
                if i >= 0:
                    nl = max(nl, self._chunks[self._starts[i]].h)
                if i + 1 < len(self._starts):
                    nh = min(nh, self._starts[i + 1])
                prev = self._find(lo - 1) if lo > 0 else None
                if prev is not None and prev.h == lo and (nh - prev.l) <= SOFT_CHUNK_CAP:
                    return self._extend(prev, nh)
        merged = Chunk(nl, nh)
        for c in over:
            merged.data[c.l - nl:c.h - nl] = c.data
            for k, b in c.sym.items():
                merged.sym[c.l - nl + k] = b
            self._remove(c)
        self._insert(merged)
        return merged

    def _extend(self, c, nh):
        self._remove(c)
        n = Chunk(c.l, nh, bytearray(c.data) + bytearray(nh - c.h), dict(c.sym))
        self._insert(n)
        return n

    # -- concrete access ----------------------------------------------------

    def read(self, addr, n):
        """Term of ``n`` bytes at concrete ``addr`` (caller checked bounds)."""
        c = self._find(addr)
        if c is not None and addr + n <= c.h:
            return c.read(addr - c.l, n)
        parts = []
        for a in range(addr + n - 1, addr - 1, -1):
            c = self._find(a)
            parts.append(c.byte(a - c.l) if c is not None else T.const(T.BV8, 0))
        return T.concat(*parts)

    def read_bytes(self, addr, n):
        """Byte terms at ``addr..addr+n-1`` (ascending)."""
        out = []
        for a in range(addr, addr + n):
            c = self._find(a)
            out.append(c.byte(a - c.l) if c is not None else T.const(T.BV8, 0))
        return out

    def read_concrete_bytes(self, addr, n):
        """Concrete bytes, or ``None`` when any of them is symbolic."""
        c = self._find(addr)
        if c is not None and addr + n <= c.h:
            off = addr - c.l
            if not c.sym or not any((off + k) in c.sym for k in range(n)):
                return bytes(c.data[off:off + n])
        out = bytearray()
        for b in self.read_bytes(addr, n):
            if b.op is not T.CONST:
                return None
            out.append(b.value)
        return bytes(out)

    def write(self, addr, n, val):
        """Store ``n`` bytes of ``val`` at concrete ``addr`` (little-endian)."""
        c = self._region(addr, addr + n)
        off = addr - c.l
        if val.op is T.CONST:
            c.data[off:off + n] = val.value.to_bytes(n, "little")
            if c.sym:
                for k in range(off, off + n):
                    c.sym.pop(k, None)
            return
        for k, b in enumerate(_bytes_of(val, n)):
            c.write_byte(off + k, b)

    def write_bytes(self, addr, byte_terms):
        if not byte_terms:
            return
        c = self._region(addr, addr + len(byte_terms))
        off = addr - c.l
        for k, b in enumerate(byte_terms):
            c.write_byte(off + k, b)

    def write_raw(self, addr, data):
        if not data:
            return
        c = self._region(addr, addr + len(data))
        off = addr - c.l
        c.data[off:off + len(data)] = data
        if c.sym:
            for k in range(off, off + len(data)):
                c.sym.pop(k, None)

    # -- symbolic access ----------------------------------------------------

    def coalesce(self, lo, hi):
        """Make ``[lo, hi)`` lie inside a single chunk (gaps become zero bytes)."""
        return self._region(lo, hi, extend=False)

    def load_from(self, dest, n, window=None, inv_name=None):
        """State-merging load of ``n`` bytes at symbolic ``dest``.

        Builds, over every chunk ``[l, h)`` (restricted to those meeting the
        ``window`` ``(lo, hi)`` of feasible addresses, when given)::

            ite(l <= dest && dest + n <= h, build_ite(l, h, 0), <next chunk>)

        where ``build_ite`` tests ``dest == l + off`` for successive offsets
        and the last feasible offset is the unguarded base case. When no chunk
        matches, the result is a fresh ``inv`` variable. Returns
        ``(term, inv_guard)``; ``inv_guard`` is the condition under which
        ``inv`` is selected.
        """
        dw = dest.sort.width
        inv = T.var(inv_name or f"__inv{next(_inv_ids)}", T.bv_sort(8 * n))
        if window is None:
            chunks = [self._chunks[l] for l in self._starts]
        else:
            chunks = self._overlapping(window[0], window[1] + n)
        result = inv
        guards = []
        for c in reversed(chunks):
            if c.h - c.l < n:
                continue
            first, last = 0, c.h - c.l - n
            if window is not None:
                first = max(first, window[0] - c.l)
                last = min(last, window[1] - c.l)
                if first > last:
                    continue
            guard = T.and_(T.ule(T.bv(c.l, dw), dest),
                           T.ule(T.bvadd(dest, T.bv(n, dw)), T.bv(c.h, dw)))
            result = T.ite(guard, self._build_ite(c, dest, first, last, n), result)
            guards.append(guard)
        return result, T.not_(T.or_(*guards))

    def _build_ite(self, c, dest, first, last, n):
        dw = dest.sort.width
        r = c.read(last, n)
        for off in range(last - 1, first - 1, -1):
            r = T.ite(T.eq(dest, T.bv(c.l + off, dw)), c.read(off, n), r)
        return r

    def load_window(self, dest, n, lo, hi):
        """Load for a path condition that already bounds ``dest`` to ``[lo, hi]``.

        The window is coalesced into one chunk first so that every feasible
        address is covered by a single chunk guard; that guard is then implied
        and ``inv`` is unreachable, so only the offset chain is returned.
        """
        c = self.coalesce(lo, hi + n)
        return self._build_ite(c, dest, lo - c.l, hi - c.l, n)

    def load_values(self, dest, n, values):
        """Merged load when ``dest`` is known to take one of ``values`` (sorted)."""
        dw = dest.sort.width
        r = self.read(values[-1], n)
        for v in reversed(values[:-1]):
            r = T.ite(T.eq(dest, T.bv(v, dw)), self.read(v, n), r)
        return r

    def store_window(self, dest, n, val, lo, hi):
        """Store through ``dest`` known to lie in ``[lo, hi]``: each byte in reach
        becomes ``ite(dest == a - k, val_byte_k, old)``."""
        self._store_guarded(dest, n, val, range(lo, hi + 1))

    def store_values(self, dest, n, val, values):
        self._store_guarded(dest, n, val, values)

    def _store_guarded(self, dest, n, val, addrs):
        dw = dest.sort.width
        vb = _bytes_of(val, n)
        touched = {}
        for a in addrs:
            for k in range(n):
                touched.setdefault(a + k, []).append((a, k))
        if not touched:
            return
        lo, hi = min(touched), max(touched) + 1
        c = self.coalesce(lo, hi)
        for p in sorted(touched):
            off = p - c.l
            b = c.byte(off)
            for a, k in touched[p]:
                b = T.ite(T.eq(dest, T.bv(a, dw)), vb[k], b)
            c.write_byte(off, b)

    # -- size -----------------------------------------------------------------

    def grow(self, delta):
        """``memory.grow``: returns the old page count, or -1 on failure."""
        old = self.pages
        if delta < 0 or old + delta > self.max_pages:
            return -1
        self.pages = old + delta
        return old


def reference_load(byte_map, addr, n):
    """Byte-wise little-endian load used as an oracle in tests."""
    return sum(byte_map.get(addr + k, 0) << (8 * k) for k in range(n))
