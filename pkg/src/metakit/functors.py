"""Polynomial functor descriptions and their action on carriers, relations,
predicates, and structure values."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from .carrier import Carrier, UNIT, product_carrier, sum_carrier
from .rel import Fun, Predicate, Rel, identity, rel_prod, rel_sum


class FunctorExpr:
    """Base class for the functor grammar: Id | Const(C) | Sum | Prod."""

    __slots__ = ()


@dataclass(frozen=True)
class FId(FunctorExpr):
    pass


@dataclass(frozen=True)
class FConst(FunctorExpr):
    carrier: Carrier


@dataclass(frozen=True)
class FSum(FunctorExpr):
    left: FunctorExpr
    right: FunctorExpr


@dataclass(frozen=True)
class FProd(FunctorExpr):
    left: FunctorExpr
    right: FunctorExpr


def apply_carrier(fx: FunctorExpr, x: Carrier) -> Carrier:
    if isinstance(fx, FId):
        return x
    if isinstance(fx, FConst):
        return fx.carrier
    if isinstance(fx, FSum):
        return sum_carrier(apply_carrier(fx.left, x), apply_carrier(fx.right, x))
    if isinstance(fx, FProd):
        return product_carrier(apply_carrier(fx.left, x), apply_carrier(fx.right, x))
    raise TypeError(f"not a functor expression: {fx!r}")


def apply_rel(fx: FunctorExpr, r: Rel) -> Rel:
    """Relator action: lift a relation structurally.  Identity slots run ``r``,
    constant slots run the identity on their carrier."""
    if isinstance(fx, FId):
        return r
    if isinstance(fx, FConst):
        return identity(fx.carrier)
    if isinstance(fx, FSum):
        return rel_sum(apply_rel(fx.left, r), apply_rel(fx.right, r))
    if isinstance(fx, FProd):
        return rel_prod(apply_rel(fx.left, r), apply_rel(fx.right, r))
    raise TypeError(f"not a functor expression: {fx!r}")


def apply_fun(fx: FunctorExpr, f: Fun) -> Fun:
    lifted = apply_rel(fx, f)
    return Fun(lifted.src, lifted.tgt, (lifted.image_ix(i) for i in range(len(lifted.src))))


def apply_pred(fx: FunctorExpr, p: Predicate, x: Carrier) -> Predicate:
    """Predicate lift: true on a structure iff true on every Identity payload.

    Agrees with running ``apply_rel`` on the coreflexive of ``p``, without
    materializing the lifted coreflexive.
    """

    def check(fx, v):
        if isinstance(fx, FId):
            return p.holds(v)
        if isinstance(fx, FConst):
            return True
        if isinstance(fx, FSum):
            tag, inner = v
            return check(fx.left if tag == 0 else fx.right, inner)
        if isinstance(fx, FProd):
            return check(fx.left, v[0]) and check(fx.right, v[1])
        raise TypeError(f"not a functor expression: {fx!r}")

    return Predicate.from_callable(apply_carrier(fx, x), lambda v: check(fx, v))


def structure_children(fx: FunctorExpr, v):
    """The Identity-slot payloads of a structure value, left to right."""
    if isinstance(fx, FId):
        yield v
    elif isinstance(fx, FConst):
        return
    elif isinstance(fx, FSum):
        tag, inner = v
        yield from structure_children(fx.left if tag == 0 else fx.right, inner)
    elif isinstance(fx, FProd):
        yield from structure_children(fx.left, v[0])
        yield from structure_children(fx.right, v[1])
    else:
        raise TypeError(f"not a functor expression: {fx!r}")


def substitute(fx: FunctorExpr, v, subst):
    """All structures obtained by replacing each Identity payload ``c`` with
    each element of ``subst(c)``.  Yields structure values."""
    if isinstance(fx, FId):
        yield from subst(v)
    elif isinstance(fx, FConst):
        yield v
    elif isinstance(fx, FSum):
        tag, inner = v
        branch = fx.left if tag == 0 else fx.right
        for new in substitute(branch, inner, subst):
            yield (tag, new)
    elif isinstance(fx, FProd):
        lefts = list(substitute(fx.left, v[0], subst))
        rights = list(substitute(fx.right, v[1], subst))
        for lv, rv in iproduct(lefts, rights):
            yield (lv, rv)
    else:
        raise TypeError(f"not a functor expression: {fx!r}")


def functor_image(fx: FunctorExpr, r: Rel, v):
    """Image of structure ``v`` under the lifted relation, computed lazily.

    Equivalent to ``apply_rel(fx, r).image(v)`` but never materializes the
    lifted relation, which matters when ``r`` has many pairs.
    """
    return set(substitute(fx, v, lambda c: r.image(c)))


# ---------------------------------------------------------------------------
# the recursion bases used throughout
# ---------------------------------------------------------------------------


def list_base(alpha: Carrier) -> FunctorExpr:
    """Finite lists over ``alpha``: X maps to 1 + alpha * X."""
    return FSum(FConst(UNIT), FProd(FConst(alpha), FId()))


def node_tree_base(alpha: Carrier) -> FunctorExpr:
    """Binary trees with node payloads: X maps to 1 + alpha * (X * X)."""
    return FSum(FConst(UNIT), FProd(FConst(alpha), FProd(FId(), FId())))


def leaf_tree_base(alpha: Carrier) -> FunctorExpr:
    """Binary leaf trees: X maps to alpha + X * X."""
    return FSum(FConst(alpha), FProd(FId(), FId()))


def nonempty_list_base(alpha: Carrier) -> FunctorExpr:
    """Non-empty lists over ``alpha``: X maps to alpha + alpha * X."""
    return FSum(FConst(alpha), FProd(FConst(alpha), FId()))
