"""Relational catamorphisms, converse-of-fold unfolds, and hylomorphisms over
bounded initial algebras."""

from __future__ import annotations

from dataclasses import dataclass

from .carrier import CarrierMismatch
from .rel import Rel, compose, converse
from .functors import apply_carrier, apply_rel, structure_children, substitute
from .mu import MuCarrier, MuTerm


def cata(mu: MuCarrier, alg: Rel) -> Rel:
    """The fold of ``alg`` over the bounded carrier, computed by structural
    recursion: the image of a constructed term is the algebra image of the
    lifted images of its children.

    For a functional algebra this is the ordinary fold; in general it is the
    canonical solution of the fold equation on the truncated carrier.
    """
    a = alg.tgt
    fa = apply_carrier(mu.base, a)
    if alg.src != fa:
        raise CarrierMismatch(
            f"algebra source {alg.src.name} is not the base applied to {a.name} ({fa.name})"
        )
    car = mu.carrier
    images: list[frozenset] = [frozenset()] * len(car)

    def subst(child: MuTerm):
        return [a.elems[j] for j in images[car.index(child)]]

    for i, term in enumerate(car.elems):
        acc = set()
        for v in substitute(mu.base, term.value, subst):
            acc |= alg.image_ix(fa.index(v))
        images[i] = frozenset(acc)
    return Rel(car, a, images)


def ana_conv(mu: MuCarrier, coalg: Rel) -> Rel:
    """The unfold of ``coalg`` into the bounded carrier, as the converse of
    the fold of the coalgebra's converse."""
    b = coalg.src
    fb = apply_carrier(mu.base, b)
    if coalg.tgt != fb:
        raise CarrierMismatch(
            f"coalgebra target {coalg.tgt.name} is not the base applied to {b.name} ({fb.name})"
        )
    return converse(cata(mu, converse(coalg)))


@dataclass(frozen=True)
class HyloResult:
    rel: Rel
    overflow: tuple
    """Source elements whose unfolding may extend past the depth bound."""

    @property
    def truncated(self) -> bool:
        return bool(self.overflow)


def hylo(mu: MuCarrier, alg: Rel, coalg: Rel) -> HyloResult:
    """Fold-after-unfold through the bounded intermediate carrier.

    The diagnostic lists inputs whose unfolding chains survive past the depth
    bound; for such inputs the composed relation may be missing pairs.  The
    check is conservative (it follows every child edge the coalgebra offers).
    """
    unfold = ana_conv(mu, coalg)
    fold = cata(mu, alg)
    b = coalg.src
    live = set(range(len(b)))
    for _ in range(mu.depth + 1):
        nxt = set()
        for s in live:
            for v_ix in coalg.image_ix(s):
                v = coalg.tgt.elems[v_ix]
                for child in structure_children(mu.base, v):
                    nxt.add(b.index(child))
        live = nxt
        if not live:
            break
    overflow = tuple(b.elems[s] for s in sorted(live))
    return HyloResult(compose(fold, unfold), overflow)


@dataclass(frozen=True)
class FusionVerdict:
    condition_holds: bool
    conclusion_holds: bool

    @property
    def alarm(self) -> bool:
        """Condition met but conclusion broken: impossible unless the fold
        machinery itself is wrong."""
        return self.condition_holds and not self.conclusion_holds


def check_fusion(s: Rel, r: Rel, q: Rel, mu: MuCarrier) -> FusionVerdict:
    """Fold fusion: ``s . fold(r) = fold(q)`` follows from ``s . r = q . F s``.

    Evaluates the side condition and the conclusion independently on the
    bounded carrier and reports both.
    """
    condition = compose(s, r) == compose(q, apply_rel(mu.base, s))
    conclusion = compose(s, cata(mu, r)) == cata(mu, q)
    return FusionVerdict(condition, conclusion)
