"""Structured, totally ordered labels for cells.

A label is either a named base cell or a cone over another label.  Cone
labels are created by stellar subdivision: subdividing at ``x`` introduces
one new cell ``C(x;y)`` for every cell ``y`` of the subdivided star's base,
plus the new vertex ``C(x;0)`` (cone over the empty cell).  Labels nest
arbitrarily, compare structurally, and carry a total order so that every
iteration in the library is deterministic.

Serialized form: a base cell is its name; a cone is ``C(<apex>;<base>)``
with ``0`` denoting the empty base.  Names are non-empty tokens without
whitespace or any of ``( ) ; #``, and ``0`` is reserved.
"""

from __future__ import annotations

from .errors import FormatError

_BAD_NAME_CHARS = set("();#") | set(" \t\r\n")


class _EmptyBase:
    """Marker for the rank -1 empty cell; usable only as a cone base."""

    __slots__ = ()
    _key = ("a",)

    def __repr__(self):
        return "EMPTY"

    def __str__(self):
        return "0"


EMPTY = _EmptyBase()


class CellId:
    """Label of a cell.

    Use :meth:`base` and :meth:`cone` to construct, or :func:`parse_cell_id`
    to read the serialized form back.
    """

    __slots__ = ("name", "apex", "base", "_key", "_hash")

    def __init__(self, *, name=None, apex=None, base=None):
        if name is not None:
            if not name or name == "0" or any(c in _BAD_NAME_CHARS for c in name):
                raise FormatError(f"invalid cell name {name!r}")
            key = ("b", name)
        else:
            if not isinstance(apex, CellId):
                raise FormatError("cone apex must be a CellId")
            if not (base is EMPTY or isinstance(base, CellId)):
                raise FormatError("cone base must be a CellId or EMPTY")
            key = ("c", apex._key, base._key)
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "apex", apex)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "_key", key)
        object.__setattr__(self, "_hash", hash(key))

    @classmethod
    def of(cls, name: str) -> "CellId":
        return cls(name=name)

    @classmethod
    def cone(cls, apex: "CellId", base) -> "CellId":
        return cls(apex=apex, base=base)

    @property
    def is_cone(self) -> bool:
        return self.name is None

    def __setattr__(self, *a):
        raise AttributeError("CellId is immutable")

    def __eq__(self, other):
        return isinstance(other, CellId) and self._key == other._key

    def __lt__(self, other):
        return self._key < other._key

    def __le__(self, other):
        return self._key <= other._key

    def __gt__(self, other):
        return self._key > other._key

    def __ge__(self, other):
        return self._key >= other._key

    def __hash__(self):
        return self._hash

    def __str__(self):
        if self.name is not None:
            return self.name
        return f"C({self.apex};{self.base})"

    def __repr__(self):
        return str(self)


def parse_cell_id(token: str) -> CellId:
    """Parse the serialized form of a cell label."""
    cid, pos = _parse_id(token, 0)
    if pos != len(token):
        raise FormatError(f"trailing characters in cell id {token!r}")
    if cid is EMPTY:
        raise FormatError("the empty cell is not a standalone cell id")
    return cid


def _parse_id(s: str, pos: int):
    if s.startswith("C(", pos):
        apex, pos = _parse_id(s, pos + 2)
        if apex is EMPTY:
            raise FormatError(f"cone apex may not be empty in {s!r}")
        if pos >= len(s) or s[pos] != ";":
            raise FormatError(f"expected ';' in cone id {s!r}")
        base, pos = _parse_id(s, pos + 1)
        if pos >= len(s) or s[pos] != ")":
            raise FormatError(f"expected ')' in cone id {s!r}")
        return CellId.cone(apex, base), pos + 1
    end = pos
    while end < len(s) and s[end] not in ";)":
        end += 1
    tok = s[pos:end]
    if tok == "0":
        return EMPTY, end
    if not tok:
        raise FormatError(f"empty token in cell id {s!r}")
    return CellId.of(tok), end
