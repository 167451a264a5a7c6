"""Finite carriers: the named, ordered element sets that relations run over."""

from __future__ import annotations


class CarrierMismatch(TypeError):
    """An operation received values over incompatible carriers."""


class SizingError(ValueError):
    """A derived carrier would exceed its configured size cap."""


class Carrier:
    """A named, ordered finite set of distinct (hashable) elements.

    Identity is structural: two carriers are the same iff they have the
    same name and the same element tuple.  Combinators refuse mismatched
    carriers instead of coercing, so ill-typed expressions fail loudly.
    """

    __slots__ = ("name", "elems", "_index", "_hash")

    def __init__(self, name, elems):
        elems = tuple(elems)
        index = {}
        for i, e in enumerate(elems):
            if e in index:
                raise ValueError(f"duplicate element {e!r} in carrier {name}")
            index[e] = i
        self.name = name
        self.elems = elems
        self._index = index
        self._hash = hash((name, elems))

    def __len__(self):
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def __contains__(self, elem):
        return elem in self._index

    def index(self, elem):
        try:
            return self._index[elem]
        except KeyError:
            raise ValueError(f"{elem!r} is not an element of carrier {self.name}") from None

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, Carrier)
            and self._hash == other._hash
            and self.name == other.name
            and self.elems == other.elems
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Carrier({self.name!r}, {len(self.elems)} elems)"


def require_same(a: Carrier, b: Carrier, what: str) -> None:
    if a != b:
        raise CarrierMismatch(f"{what}: carrier {a.name} does not match carrier {b.name}")


#: The distinguished singleton carrier and its unique element.
UNIT_ELEM = "*"
UNIT = Carrier("1", (UNIT_ELEM,))

#: Truth values, used by predicates-as-functions.
BOOL = Carrier("Bool", (False, True))


def product_carrier(a: Carrier, b: Carrier) -> Carrier:
    """Pairs of ``a`` and ``b``, ordered left-major so encodings are reproducible."""
    elems = tuple((x, y) for x in a.elems for y in b.elems)
    return Carrier(f"({a.name}*{b.name})", elems)


def sum_carrier(a: Carrier, b: Carrier) -> Carrier:
    """Tagged disjoint union, left summand (tag 0) before right (tag 1)."""
    elems = tuple((0, x) for x in a.elems) + tuple((1, y) for y in b.elems)
    return Carrier(f"({a.name}+{b.name})", elems)


def powerset_carrier(a: Carrier, bound: int = 4) -> Carrier:
    """All subsets of ``a``, ordered by subset bitmask value (bit i = element i).

    Refuses bases larger than ``bound`` elements: every consumer of a powerset
    carrier is quadratic or worse in its size.
    """
    if len(a) > bound:
        raise SizingError(
            f"powerset of carrier {a.name} needs {len(a)} base elements, bound is {bound}"
        )
    elems = []
    for mask in range(1 << len(a)):
        elems.append(frozenset(a.elems[i] for i in range(len(a)) if mask >> i & 1))
    return Carrier(f"P({a.name})", tuple(elems))
