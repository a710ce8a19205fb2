"""Append-only path conditions."""

from symwasm import terms as T


class PathCondition:
    """Ordered conjunction of boolean terms.

    ``append`` returns a new condition that remembers its parent, which lets
    the solver cache find the parent's cached result in O(1).
    """

    __slots__ = ("preds", "parent_key", "_key")

    def __init__(self, preds=(), parent_key=None):
        self.preds = tuple(preds)
        self.parent_key = parent_key
        self._key = None

    def append(self, *constraints):
        new = []
        for c in constraints:
            if c.sort is not T.BOOL:
                raise T.SortError(f"path constraint must be boolean, got {c.sort}")
            if T.is_true(c):
                continue
            # split top-level conjunctions so cores and subsets are finer grained
            new.extend(c.args if c.op == "and" else (c,))
        if not new:
            return self
        return PathCondition(self.preds + tuple(new), self.key)

    @property
    def key(self):
        if self._key is None:
            self._key = frozenset(self.preds)
        return self._key

    def __len__(self):
        return len(self.preds)

    def __iter__(self):
        return iter(self.preds)

    def __repr__(self):
        return f"PathCondition({len(self.preds)} preds)"

    def is_trivially_false(self):
        return any(T.is_false(p) for p in self.preds)
