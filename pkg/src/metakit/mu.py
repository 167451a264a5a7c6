"""Bounded-depth initial algebras: term enumeration, constructors, destructors.

A term of the initial algebra for base functor F is an application of the
constructor ``in`` to an F-structure whose Identity slots hold smaller terms.
Carriers enumerate every term up to a depth bound (and an optional size
bound), canonically ordered by depth, then constructor tag, then children.
"""

from __future__ import annotations

from .carrier import Carrier, SizingError
from .rel import Rel, converse
from .functors import (
    FConst,
    FId,
    FProd,
    FSum,
    FunctorExpr,
    apply_carrier,
)

_ELEM_CAP = 200_000


class MuTerm:
    """One inhabitant of a bounded initial algebra: ``in`` applied to a structure.

    ``depth`` is 0 for terms with no sub-terms; ``size`` counts constructor
    applications.
    """

    __slots__ = ("value", "depth", "size", "_hash")

    def __init__(self, value):
        self.value = value
        children = list(_term_children(value))
        self.depth = 1 + max(c.depth for c in children) if children else 0
        self.size = 1 + sum(c.size for c in children)
        self._hash = hash(("mu", value))

    def __eq__(self, other):
        return isinstance(other, MuTerm) and self.value == other.value

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"MuTerm({self.value!r})"


def _term_children(value):
    if isinstance(value, MuTerm):
        yield value
    elif isinstance(value, tuple):
        for part in value:
            yield from _term_children(part)


def structures(fx: FunctorExpr, terms):
    """All F-structures whose Identity slots are filled from ``terms``."""
    if isinstance(fx, FId):
        yield from terms
    elif isinstance(fx, FConst):
        yield from fx.carrier.elems
    elif isinstance(fx, FSum):
        for v in structures(fx.left, terms):
            yield (0, v)
        for v in structures(fx.right, terms):
            yield (1, v)
    elif isinstance(fx, FProd):
        lefts = list(structures(fx.left, terms))
        for lv in lefts:
            for rv in structures(fx.right, terms):
                yield (lv, rv)
    else:
        raise TypeError(f"not a functor expression: {fx!r}")


def _sort_key(base: FunctorExpr, term: MuTerm):
    def fkey(fx, v):
        if isinstance(fx, FId):
            return _sort_key(base, v)
        if isinstance(fx, FConst):
            return (fx.carrier.index(v),)
        if isinstance(fx, FSum):
            tag, inner = v
            return (tag,) + fkey(fx.left if tag == 0 else fx.right, inner)
        if isinstance(fx, FProd):
            return (fkey(fx.left, v[0]), fkey(fx.right, v[1]))
        raise TypeError(f"not a functor expression: {fx!r}")

    return (term.depth, fkey(base, term.value))


class MuCarrier:
    """All terms of the initial algebra for ``base`` up to ``depth`` (and,
    optionally, up to ``max_size`` constructor applications per term)."""

    def __init__(self, base: FunctorExpr, depth: int, max_size: int | None = None,
                 elem_cap: int = _ELEM_CAP):
        if depth < 0:
            raise ValueError("depth bound must be non-negative")
        self.base = base
        self.depth = depth
        self.max_size = max_size
        terms: set[MuTerm] = set()
        for _level in range(depth + 1):
            new = set()
            for v in structures(base, terms):
                t = MuTerm(v)
                if t in terms:
                    continue
                if max_size is not None and t.size > max_size:
                    continue
                new.add(t)
            if not new:
                break
            terms |= new
            if len(terms) > elem_cap:
                raise SizingError(f"mu-carrier for depth {depth} exceeds {elem_cap} terms")
        ordered = sorted(terms, key=lambda t: _sort_key(base, t))
        sizetag = "" if max_size is None else f",s{max_size}"
        self.carrier = Carrier(f"mu[{base_name(base)};d{depth}{sizetag}]", ordered)
        self._f_carrier = None

    def __len__(self):
        return len(self.carrier)

    def __iter__(self):
        return iter(self.carrier)

    @property
    def f_carrier(self) -> Carrier:
        """The base functor applied to this carrier (structures over terms)."""
        if self._f_carrier is None:
            fc = apply_carrier(self.base, self.carrier)
            if len(fc) > _ELEM_CAP:
                raise SizingError(
                    f"functor-applied carrier for {self.carrier.name} exceeds {_ELEM_CAP}"
                )
            self._f_carrier = fc
        return self._f_carrier

    def in_alg(self) -> Rel:
        """The constructor as a relation ``mu <- F mu``: injective and simple,
        but partial at the bound (structures whose term would exceed the depth
        or size bound have no image)."""
        car = self.carrier
        img = []
        for v in self.f_carrier.elems:
            t = MuTerm(v)
            img.append(frozenset((car.index(t),)) if t in car else frozenset())
        return Rel(self.f_carrier, car, img)

    def out_alg(self) -> Rel:
        """The destructor: converse of the constructor, entire on the carrier."""
        return converse(self.in_alg())

    def truncated_structures(self) -> tuple:
        """Structures in F(mu) whose constructed term falls outside the bound."""
        car = self.carrier
        return tuple(v for v in self.f_carrier.elems if MuTerm(v) not in car)


def base_name(fx: FunctorExpr) -> str:
    if isinstance(fx, FId):
        return "X"
    if isinstance(fx, FConst):
        return fx.carrier.name
    if isinstance(fx, FSum):
        return f"{base_name(fx.left)}+{base_name(fx.right)}"
    if isinstance(fx, FProd):
        return f"{base_name(fx.left)}*{base_name(fx.right)}"
    raise TypeError(f"not a functor expression: {fx!r}")
