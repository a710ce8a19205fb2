"""Symbolic file system backing the WASI model.

Files are byte lists whose elements are 8-bit terms. The structure forks
with its state: objects are shared until one side writes (copy-on-write).
"""

from symwasm import terms as T

# WASI filetype values
CHAR_DEVICE, DIRECTORY, REGULAR = 2, 3, 4

STDIN, STDOUT, STDERR = "<stdin>", "<stdout>", "<stderr>"
PREOPEN_FD = 3
ALL_RIGHTS = (1 << 30) - 1


class FileObject:
    __slots__ = ("name", "kind", "content", "owner")

    def __init__(self, name, kind, content=None, owner=None):
        self.name = name
        self.kind = kind
        self.content = [] if content is None else content
        self.owner = owner

    @property
    def length(self):
        return len(self.content)

    def __repr__(self):
        return f"FileObject({self.name!r}, kind={self.kind}, {len(self.content)} bytes)"


class OpenFile:
    __slots__ = ("path", "cursor", "rights_base", "rights_inheriting", "fdflags", "preopen")

    def __init__(self, path, cursor=0, rights_base=ALL_RIGHTS, rights_inheriting=ALL_RIGHTS,
                 fdflags=0, preopen=None):
        self.path = path
        self.cursor = cursor
        self.rights_base = rights_base
        self.rights_inheriting = rights_inheriting
        self.fdflags = fdflags
        self.preopen = preopen  # guest-visible name for preopened directories

    def copy(self):
        return OpenFile(self.path, self.cursor, self.rights_base, self.rights_inheriting,
                        self.fdflags, self.preopen)


class SymFileSystem:
    __slots__ = ("objects", "fds", "_token")

    def __init__(self):
        self.objects = {}
        self.fds = {}
        self._token = object()

    @classmethod
    def standard(cls, stdin=(), files=None, preopen="."):
        """fds 0-2 for the standard streams and fd 3 for the preopened directory
        ``preopen`` holding ``files`` (name -> list of byte terms)."""
        fs = cls()
        fs.objects[STDIN] = FileObject(STDIN, CHAR_DEVICE, list(stdin))
        fs.objects[STDOUT] = FileObject(STDOUT, CHAR_DEVICE)
        fs.objects[STDERR] = FileObject(STDERR, CHAR_DEVICE)
        fs.fds[0] = OpenFile(STDIN)
        fs.fds[1] = OpenFile(STDOUT)
        fs.fds[2] = OpenFile(STDERR)
        if preopen is not None:
            fs.objects[preopen] = FileObject(preopen, DIRECTORY)
            fs.fds[PREOPEN_FD] = OpenFile(preopen, preopen=preopen)
            for name, data in (files or {}).items():
                path = _join(preopen, name)
                fs.objects[path] = FileObject(path, REGULAR, list(data))
        return fs

    def fork(self):
        fs = SymFileSystem.__new__(SymFileSystem)
        fs.objects = dict(self.objects)
        fs.fds = {fd: of.copy() for fd, of in self.fds.items()}
        fs._token = object()
        self._token = object()
        return fs

    # -- lookup ---------------------------------------------------------------

    def get(self, fd):
        return self.fds.get(fd)

    def obj(self, path):
        return self.objects.get(path)

    def writable(self, path):
        o = self.objects[path]
        if o.owner is not self._token:
            o = FileObject(o.name, o.kind, list(o.content), self._token)
            self.objects[path] = o
        return o

    def next_fd(self):
        fd = 0
        while fd in self.fds:
            fd += 1
        return fd

    def resolve(self, dirfd, rel):
        """Absolute key of ``rel`` under the directory open at ``dirfd``."""
        d = self.fds.get(dirfd)
        if d is None:
            return None
        return _join(d.path, rel)

    # -- operations -----------------------------------------------------------

    def read(self, fd, n):
        """Up to ``n`` bytes from the cursor of ``fd``; advances the cursor."""
        of = self.fds[fd]
        o = self.objects[of.path]
        data = o.content[of.cursor:of.cursor + n]
        of.cursor += len(data)
        return data

    def pread(self, fd, n, offset):
        o = self.objects[self.fds[fd].path]
        return o.content[offset:offset + n]

    def write(self, fd, data):
        """Write byte terms at the cursor (streams always append)."""
        of = self.fds[fd]
        o = self.writable(of.path)
        if o.kind == CHAR_DEVICE or of.fdflags & 1:  # append flag
            o.content.extend(data)
            of.cursor = len(o.content)
            return len(data)
        pos = of.cursor
        if pos > len(o.content):
            o.content.extend([T.const(T.BV8, 0)] * (pos - len(o.content)))
        o.content[pos:pos + len(data)] = data
        of.cursor = pos + len(data)
        return len(data)

    def open(self, path, kind=REGULAR, create=False, truncate=False, exclusive=False,
             directory=False, fdflags=0, rights_base=ALL_RIGHTS, rights_inheriting=ALL_RIGHTS):
        """Open ``path``. Returns ``(fd, None)`` or ``(None, errno name)``."""
        o = self.objects.get(path)
        if o is None:
            if not create or directory:
                return None, "noent"
            o = self.objects[path] = FileObject(path, kind, [], self._token)
        elif exclusive and create:
            return None, "exist"
        if directory and o.kind != DIRECTORY:
            return None, "notdir"
        if truncate and o.kind == REGULAR:
            self.writable(path).content = []
        fd = self.next_fd()
        self.fds[fd] = OpenFile(path, 0, rights_base, rights_inheriting, fdflags)
        return fd, None

    def close(self, fd):
        return self.fds.pop(fd, None) is not None

    def stream(self, fd):
        """Captured bytes written to a standard stream."""
        key = {0: STDIN, 1: STDOUT, 2: STDERR}[fd]
        return self.objects[key].content


def _join(base, rel):
    rel = rel.lstrip("/")
    parts = [] if base in (".", "") else base.split("/")
    for p in rel.split("/"):
        if p in ("", "."):
            continue
        if p == "..":
            if parts:
                parts.pop()
            continue
        parts.append(p)
    return "/".join(parts) if parts else "."
