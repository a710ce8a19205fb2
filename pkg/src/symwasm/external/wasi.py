"""WASI snapshot-preview1 models over the symbolic file system.

Handlers return the errno as an int. Guest pointers are concretized (a
symbolic pointer is pinned to one feasible value, with a warning); file
descriptors split into one case per open fd plus an invalid class.
"""

import functools

from symwasm import terms as T
from symwasm.binary.module import FuncType
from symwasm.binary.opcodes import I32, I64
from symwasm.external import fs as F
from symwasm.external.models import Fault

ERRNO = {
    "success": 0, "2big": 1, "acces": 2, "badf": 8, "exist": 20, "fault": 21, "inval": 28,
    "io": 29, "isdir": 31, "nametoolong": 37, "noent": 44, "nosys": 52, "notdir": 54,
    "notempty": 55, "notsup": 58, "spipe": 70, "notcapable": 76,
}

# oflags / fdflags
O_CREAT, O_DIRECTORY, O_EXCL, O_TRUNC = 1, 2, 4, 8
FDFLAG_APPEND = 1
WHENCE_SET, WHENCE_CUR, WHENCE_END = 0, 1, 2

MODELS = {}


def _model(params, results=(I32,)):
    sig = FuncType(tuple(params), tuple(results))

    def deco(fn):
        @functools.wraps(fn)
        def wrapper(call):
            try:
                return fn(call)
            except Fault:
                return ERRNO["fault"]
        MODELS[fn.__name__] = (wrapper, sig)
        return wrapper
    return deco


def _strings_layout(strings):
    """``(count, total bytes)`` of NUL-terminated strings packed back to back."""
    return len(strings), sum(len(s) for s in strings)


# -- args / environ ---------------------------------------------------------

@_model((I32, I32))
def args_sizes_get(call):
    argc_ptr, size_ptr = call.concrete(0), call.concrete(1)
    n, total = _strings_layout(call.emu.argv)
    call.store(argc_ptr, 4, n)
    call.store(size_ptr, 4, total)
    return 0


@_model((I32, I32))
def args_get(call):
    argv_ptr, buf_ptr = call.concrete(0), call.concrete(1)
    _write_strings(call, call.emu.argv, argv_ptr, buf_ptr)
    return 0


@_model((I32, I32))
def environ_sizes_get(call):
    count_ptr, size_ptr = call.concrete(0), call.concrete(1)
    n, total = _strings_layout(call.emu.environ)
    call.store(count_ptr, 4, n)
    call.store(size_ptr, 4, total)
    return 0


@_model((I32, I32))
def environ_get(call):
    env_ptr, buf_ptr = call.concrete(0), call.concrete(1)
    _write_strings(call, call.emu.environ, env_ptr, buf_ptr)
    return 0


def _write_strings(call, strings, ptrs, buf):
    for i, s in enumerate(strings):
        call.store(ptrs + 4 * i, 4, buf)
        call.write_bytes(buf, s)
        buf += len(s)


# -- process ----------------------------------------------------------------

@_model((I32,), ())
def proc_exit(call):
    call.state.set_exit(call.arg(0))


@_model((I32,))
def proc_raise(call):
    call.state.set_trap("raised signal")


@_model(())
def sched_yield(call):
    return 0


# -- clocks and randomness --------------------------------------------------

@_model((I32, I64, I32))
def clock_time_get(call):
    ptr = call.concrete(2)
    s = call.state
    t = s.fresh_var("clock", T.BV64)
    if s.clock is not None:
        s.add_constraint(T.ule(s.clock, t))
    s.clock = t
    call.store(ptr, 8, t)
    return 0


@_model((I32, I32))
def clock_res_get(call):
    call.store(call.concrete(1), 8, 1000)
    return 0


@_model((I32, I32))
def random_get(call):
    buf, n = call.concrete(0), call.concrete(1)
    if n == 0:
        return 0
    v = call.state.fresh_var("random", T.bv_sort(8 * n))
    call.write_bytes(buf, [T.extract(8 * k + 7, 8 * k, v) for k in range(n)])
    return 0


# -- descriptors ----------------------------------------------------------------

def _iovs(call, iovs, count):
    out = []
    for i in range(count):
        base = call.u32(iovs + 8 * i)
        length = call.u32(iovs + 8 * i + 4)
        out.append((base, length))
    return out


@_model((I32, I32, I32, I32))
def fd_write(call):
    fd = call.fd(0)
    iovs, count, nwritten_ptr = call.concrete(1), call.concrete(2), call.concrete(3)
    fs = call.fs
    of = fs.get(fd)
    if of is None or of.path == F.STDIN:
        return ERRNO["badf"]
    if fs.obj(of.path).kind == F.DIRECTORY:
        return ERRNO["isdir"]
    data = []
    for base, length in _iovs(call, iovs, count):
        data.extend(call.read_bytes(base, length))
    fs.write(fd, data)
    call.store(nwritten_ptr, 4, len(data))
    return 0


@_model((I32, I32, I32, I64, I32))
def fd_pwrite(call):
    fd = call.fd(0)
    iovs, count, offset, ptr = (call.concrete(1), call.concrete(2), call.concrete(3),
                                call.concrete(4))
    of = call.fs.get(fd)
    if of is None or call.fs.obj(of.path).kind != F.REGULAR:
        return ERRNO["badf"] if of is None else ERRNO["spipe"]
    data = []
    for base, length in _iovs(call, iovs, count):
        data.extend(call.read_bytes(base, length))
    saved = of.cursor
    of.cursor = offset
    call.fs.write(fd, data)
    of.cursor = saved
    call.store(ptr, 4, len(data))
    return 0


@_model((I32, I32, I32, I32))
def fd_read(call):
    fd = call.fd(0)
    iovs, count, nread_ptr = call.concrete(1), call.concrete(2), call.concrete(3)
    fs = call.fs
    of = fs.get(fd)
    if of is None or of.path in (F.STDOUT, F.STDERR):
        return ERRNO["badf"]
    if fs.obj(of.path).kind == F.DIRECTORY:
        return ERRNO["isdir"]
    total = 0
    for base, length in _iovs(call, iovs, count):
        data = fs.read(fd, length)
        call.write_bytes(base, data)
        total += len(data)
        if len(data) < length:
            break
    call.store(nread_ptr, 4, total)
    return 0


@_model((I32, I32, I32, I64, I32))
def fd_pread(call):
    fd = call.fd(0)
    iovs, count, offset, ptr = (call.concrete(1), call.concrete(2), call.concrete(3),
                                call.concrete(4))
    fs = call.fs
    of = fs.get(fd)
    if of is None:
        return ERRNO["badf"]
    if fs.obj(of.path).kind != F.REGULAR:
        return ERRNO["spipe"]
    total = 0
    for base, length in _iovs(call, iovs, count):
        data = fs.pread(fd, length, offset + total)
        call.write_bytes(base, data)
        total += len(data)
        if len(data) < length:
            break
    call.store(ptr, 4, total)
    return 0


@_model((I32,))
def fd_close(call):
    fd = call.fd(0)
    return 0 if call.fs.close(fd) else ERRNO["badf"]


@_model((I32, I64, I32, I32))
def fd_seek(call):
    fd = call.fd(0)
    offset = call.concrete(1)
    whence = call.concrete(2)
    ptr = call.concrete(3)
    fs = call.fs
    of = fs.get(fd)
    if of is None:
        return ERRNO["badf"]
    o = fs.obj(of.path)
    if o.kind == F.CHAR_DEVICE:
        return ERRNO["spipe"]
    if o.kind == F.DIRECTORY:
        return ERRNO["isdir"]
    if offset >= 1 << 63:
        offset -= 1 << 64
    if whence == WHENCE_SET:
        new = offset
    elif whence == WHENCE_CUR:
        new = of.cursor + offset
    elif whence == WHENCE_END:
        new = o.length + offset
    else:
        return ERRNO["inval"]
    if new < 0:
        return ERRNO["inval"]
    of.cursor = new
    call.store(ptr, 8, new)
    return 0


@_model((I32, I32))
def fd_tell(call):
    fd = call.fd(0)
    ptr = call.concrete(1)
    of = call.fs.get(fd)
    if of is None:
        return ERRNO["badf"]
    if call.fs.obj(of.path).kind == F.CHAR_DEVICE:
        return ERRNO["spipe"]
    call.store(ptr, 8, of.cursor)
    return 0


@_model((I32, I32))
def fd_fdstat_get(call):
    fd = call.fd(0)
    ptr = call.concrete(1)
    of = call.fs.get(fd)
    if of is None:
        return ERRNO["badf"]
    o = call.fs.obj(of.path)
    call.check(ptr, 24)
    call.store(ptr, 1, o.kind)
    call.store(ptr + 1, 1, 0)
    call.store(ptr + 2, 2, of.fdflags)
    call.store(ptr + 4, 4, 0)
    call.store(ptr + 8, 8, of.rights_base)
    call.store(ptr + 16, 8, of.rights_inheriting)
    return 0


@_model((I32, I32))
def fd_fdstat_set_flags(call):
    fd = call.fd(0)
    flags = call.concrete(1)
    of = call.fs.get(fd)
    if of is None:
        return ERRNO["badf"]
    of.fdflags = flags
    return 0


def _filestat(call, ptr, o):
    call.check(ptr, 64)
    call.store(ptr, 8, 0)  # dev
    call.store(ptr + 8, 8, 0)  # ino
    call.store(ptr + 16, 8, o.kind)
    call.store(ptr + 24, 8, 1)  # nlink
    call.store(ptr + 32, 8, o.length)
    for off in (40, 48, 56):
        call.store(ptr + off, 8, 0)


@_model((I32, I32))
def fd_filestat_get(call):
    fd = call.fd(0)
    ptr = call.concrete(1)
    of = call.fs.get(fd)
    if of is None:
        return ERRNO["badf"]
    _filestat(call, ptr, call.fs.obj(of.path))
    return 0


@_model((I32, I32))
def fd_prestat_get(call):
    fd = call.fd(0)
    ptr = call.concrete(1)
    of = call.fs.get(fd)
    if of is None or of.preopen is None:
        return ERRNO["badf"]
    call.store(ptr, 4, 0)  # tag 0: directory (padding zeroed)
    call.store(ptr + 4, 4, len(of.preopen.encode()))
    return 0


@_model((I32, I32, I32))
def fd_prestat_dir_name(call):
    fd = call.fd(0)
    ptr, n = call.concrete(1), call.concrete(2)
    of = call.fs.get(fd)
    if of is None or of.preopen is None:
        return ERRNO["badf"]
    name = of.preopen.encode()
    if n < len(name):
        return ERRNO["nametoolong"]
    call.write_bytes(ptr, [T.const(T.BV8, b) for b in name])
    return 0


def _path(call, ptr_i, len_i):
    ptr, n = call.concrete(ptr_i), call.concrete(len_i)
    raw = []
    for b in call.read_bytes(ptr, n):
        raw.append(b.value if b.op is T.CONST else call.emu.concretize(call.state, b, "path byte"))
    return bytes(raw).decode("utf-8", "replace")


@_model((I32, I32, I32, I32, I32, I64, I64, I32, I32))
def path_open(call):
    dirfd = call.fd(0)
    rel = _path(call, 2, 3)
    oflags = call.concrete(4)
    rights_base, rights_inh = call.concrete(5), call.concrete(6)
    fdflags = call.concrete(7)
    fd_ptr = call.concrete(8)
    fs = call.fs
    d = fs.get(dirfd)
    if d is None:
        return ERRNO["badf"]
    if fs.obj(d.path).kind != F.DIRECTORY:
        return ERRNO["notdir"]
    path = fs.resolve(dirfd, rel)
    fd, err = fs.open(path, create=bool(oflags & O_CREAT), truncate=bool(oflags & O_TRUNC),
                      exclusive=bool(oflags & O_EXCL), directory=bool(oflags & O_DIRECTORY),
                      fdflags=fdflags, rights_base=rights_base, rights_inheriting=rights_inh)
    if err:
        return ERRNO[err]
    call.store(fd_ptr, 4, fd)
    return 0


@_model((I32, I32, I32, I32, I32))
def path_filestat_get(call):
    dirfd = call.fd(0)
    rel = _path(call, 2, 3)
    ptr = call.concrete(4)
    d = call.fs.get(dirfd)
    if d is None:
        return ERRNO["badf"]
    o = call.fs.obj(call.fs.resolve(dirfd, rel))
    if o is None:
        return ERRNO["noent"]
    _filestat(call, ptr, o)
    return 0


def _not_capable(name, params):
    def fn(call):
        call.state.warn(f"WASI {name} is not modelled; returned notcapable")
        return ERRNO["notcapable"]
    fn.__name__ = name
    _model(params)(fn)


def _no_sys(name, params):
    def fn(call):
        call.state.warn(f"WASI {name} is not modelled; returned nosys")
        return ERRNO["nosys"]
    fn.__name__ = name
    _model(params)(fn)


def _ok(name, params):
    def fn(call):
        return 0
    fn.__name__ = name
    _model(params)(fn)


_not_capable("path_unlink_file", (I32, I32, I32))
_not_capable("path_rename", (I32, I32, I32, I32, I32, I32))
_not_capable("path_create_directory", (I32, I32, I32))
_not_capable("path_remove_directory", (I32, I32, I32))
_not_capable("path_symlink", (I32, I32, I32, I32, I32))
_not_capable("path_link", (I32, I32, I32, I32, I32, I32, I32))
_not_capable("path_readlink", (I32, I32, I32, I32, I32, I32))
_not_capable("path_filestat_set_times", (I32, I32, I32, I32, I64, I64, I32))
_no_sys("fd_readdir", (I32, I32, I32, I64, I32))
_no_sys("poll_oneoff", (I32, I32, I32, I32))
_no_sys("fd_renumber", (I32, I32))
_no_sys("fd_filestat_set_size", (I32, I64))
_no_sys("fd_filestat_set_times", (I32, I64, I64, I32))
_no_sys("fd_fdstat_set_rights", (I32, I64, I64))
_no_sys("sock_accept", (I32, I32, I32))
_no_sys("sock_recv", (I32, I32, I32, I32, I32, I32))
_no_sys("sock_send", (I32, I32, I32, I32, I32))
_no_sys("sock_shutdown", (I32, I32))
_ok("fd_sync", (I32,))
_ok("fd_datasync", (I32,))
_ok("fd_advise", (I32, I64, I64, I32))
_ok("fd_allocate", (I32, I64, I64))
