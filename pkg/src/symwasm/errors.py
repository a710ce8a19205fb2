"""Exception hierarchy."""


class SymWasmError(Exception):
    pass


# loading ---------------------------------------------------------------

class MalformedBinary(SymWasmError):
    def __init__(self, msg, offset=None):
        self.offset = offset
        super().__init__(f"{msg} (at byte {offset:#x})" if offset is not None else msg)


class UnsupportedFeature(SymWasmError):
    def __init__(self, msg, offset=None):
        self.offset = offset
        super().__init__(f"{msg} (at byte {offset:#x})" if offset is not None else msg)


class ValidationError(SymWasmError):
    def __init__(self, msg, func_index=None, offset=None):
        self.func_index = func_index
        self.offset = offset
        where = ""
        if func_index is not None:
            where = f" in function {func_index}"
            if offset is not None:
                where += f" at instruction {offset}"
        super().__init__(msg + where)


class NoSuchExport(SymWasmError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"no exported function named {name!r}")


# terms / state ------------------------------------------------------------
# These signal engine bugs; validated modules never trigger them.

class SortError(SymWasmError, TypeError):
    pass


class UnboundVariable(SymWasmError, KeyError):
    def __init__(self, name):
        self.name = name
        super().__init__(name)

    def __str__(self):
        return f"unbound variable {self.name!r}"


class StackUnderflow(SymWasmError):
    pass


class StackSortMismatch(SymWasmError):
    pass


class SignatureMismatch(SymWasmError):
    pass


class Exhausted(SymWasmError):
    """Raised by a selector with no states left."""
