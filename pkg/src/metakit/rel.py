"""Binary relations between finite carriers, with the full point-free combinator set.

A ``Rel`` from source carrier A to target carrier B stores the set of pairs
``(b, a)`` meaning "b R a": input ``a`` is related to output ``b``.  All
values are immutable; any combinator returns a fresh relation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .carrier import (
    BOOL,
    Carrier,
    CarrierMismatch,
    UNIT,
    UNIT_ELEM,
    powerset_carrier,
    product_carrier,
    require_same,
    sum_carrier,
)

_EMPTY = frozenset()


class Rel:
    """A relation ``tgt <- src`` as an immutable image table.

    ``image(a)`` is the set of outputs related to input ``a``.  Equality
    requires identical source, identical target, and identical pair sets.
    """

    __slots__ = ("src", "tgt", "_img", "_pre", "_hash")

    def __init__(self, src: Carrier, tgt: Carrier, img):
        self.src = src
        self.tgt = tgt
        self._img = tuple(img)
        if len(self._img) != len(src):
            raise ValueError("image table length does not match source carrier")
        self._pre = None
        self._hash = None

    # -- construction -------------------------------------------------

    @classmethod
    def from_pairs(cls, src: Carrier, tgt: Carrier, pairs) -> "Rel":
        """Build from element pairs ``(b, a)`` read as "b R a"."""
        img = [set() for _ in range(len(src))]
        for b, a in pairs:
            img[src.index(a)].add(tgt.index(b))
        return cls(src, tgt, (frozenset(s) for s in img))

    @classmethod
    def from_index_pairs(cls, src: Carrier, tgt: Carrier, ipairs) -> "Rel":
        """Build from index pairs ``(t_idx, s_idx)``."""
        img = [set() for _ in range(len(src))]
        nt = len(tgt)
        for t, s in ipairs:
            if not (0 <= t < nt and 0 <= s < len(src)):
                raise ValueError(f"pair index ({t},{s}) out of range for {tgt.name}<-{src.name}")
            img[s].add(t)
        return cls(src, tgt, (frozenset(s) for s in img))

    # -- inspection ---------------------------------------------------

    def image_ix(self, s_idx: int) -> frozenset:
        return self._img[s_idx]

    def image(self, a) -> frozenset:
        """Set of output elements related to input element ``a``."""
        ixs = self._img[self.src.index(a)]
        return frozenset(self.tgt.elems[t] for t in ixs)

    def preimage_ix(self, t_idx: int) -> frozenset:
        if self._pre is None:
            pre = [set() for _ in range(len(self.tgt))]
            for s, ts in enumerate(self._img):
                for t in ts:
                    pre[t].add(s)
            self._pre = tuple(frozenset(p) for p in pre)
        return self._pre[t_idx]

    def preimage(self, b) -> frozenset:
        ixs = self.preimage_ix(self.tgt.index(b))
        return frozenset(self.src.elems[s] for s in ixs)

    def holds(self, b, a) -> bool:
        """True iff ``b R a``."""
        return self.tgt.index(b) in self._img[self.src.index(a)]

    def index_pairs(self):
        """All pairs ``(t_idx, s_idx)``, in deterministic order."""
        for s, ts in enumerate(self._img):
            for t in sorted(ts):
                yield t, s

    def pairs(self):
        """All element pairs ``(b, a)``, in deterministic order."""
        for t, s in self.index_pairs():
            yield self.tgt.elems[t], self.src.elems[s]

    @property
    def npairs(self) -> int:
        return sum(len(ts) for ts in self._img)

    def is_empty(self) -> bool:
        return all(not ts for ts in self._img)

    # -- structural equality -------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Rel)
            and self.src == other.src
            and self.tgt == other.tgt
            and self._img == other._img
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.src, self.tgt, self._img))
        return self._hash

    def __repr__(self):
        return f"Rel({self.tgt.name} <- {self.src.name}, {self.npairs} pairs)"

    # -- operator sugar (delegates to the module combinators) ----------

    def __mul__(self, other):
        return compose(self, other)

    def __and__(self, other):
        return meet(self, other)

    def __or__(self, other):
        return join(self, other)

    def __invert__(self):
        return converse(self)

    def __le__(self, other):
        return includes(self, other)


class NotAFunction(ValueError):
    """A relation required to be entire and simple is not."""


class Fun(Rel):
    """A total deterministic relation: every input has exactly one output."""

    __slots__ = ()

    def __init__(self, src, tgt, img):
        super().__init__(src, tgt, img)
        for s, ts in enumerate(self._img):
            if len(ts) != 1:
                raise NotAFunction(
                    f"input {src.elems[s]!r} has {len(ts)} outputs; "
                    f"a function {tgt.name}<-{src.name} needs exactly one"
                )

    @classmethod
    def from_callable(cls, src: Carrier, tgt: Carrier, fn) -> "Fun":
        return cls(src, tgt, (frozenset((tgt.index(fn(a)),)) for a in src.elems))

    @classmethod
    def from_map(cls, src: Carrier, tgt: Carrier, mapping) -> "Fun":
        return cls.from_callable(src, tgt, lambda a: mapping[a])

    def __call__(self, a):
        (t,) = self._img[self.src.index(a)]
        return self.tgt.elems[t]


@dataclass(frozen=True)
class Predicate:
    """A boolean per element of a carrier; interconvertible with its coreflexive."""

    carrier: Carrier
    truth: tuple

    def __post_init__(self):
        if len(self.truth) != len(self.carrier):
            raise ValueError("truth table length does not match carrier")

    @classmethod
    def from_callable(cls, carrier: Carrier, fn) -> "Predicate":
        return cls(carrier, tuple(bool(fn(e)) for e in carrier.elems))

    def holds(self, e) -> bool:
        return self.truth[self.carrier.index(e)]

    def as_fun(self) -> Fun:
        """The predicate as a function into the Bool carrier."""
        return Fun.from_callable(self.carrier, BOOL, self.holds)

    def negate(self) -> "Predicate":
        return Predicate(self.carrier, tuple(not t for t in self.truth))

    def __and__(self, other) -> "Predicate":
        require_same(self.carrier, other.carrier, "predicate conjunction")
        return Predicate(self.carrier, tuple(a and b for a, b in zip(self.truth, other.truth)))


# ---------------------------------------------------------------------------
# constants
# ---------------------------------------------------------------------------


def identity(a: Carrier) -> Fun:
    return Fun(a, a, (frozenset((i,)) for i in range(len(a))))


def top(src: Carrier, tgt: Carrier) -> Rel:
    full = frozenset(range(len(tgt)))
    return Rel(src, tgt, (full for _ in range(len(src))))


def bottom(src: Carrier, tgt: Carrier) -> Rel:
    return Rel(src, tgt, (_EMPTY for _ in range(len(src))))


def bang(a: Carrier) -> Fun:
    """The unique function from ``a`` into the singleton carrier."""
    return Fun.from_callable(a, UNIT, lambda _: UNIT_ELEM)


def const_fun(src: Carrier, tgt: Carrier, k) -> Fun:
    """The constant function always yielding ``k``; requires ``k`` in ``tgt``."""
    tgt.index(k)
    return Fun.from_callable(src, tgt, lambda _: k)


def partial_fn(src: Carrier, tgt: Carrier, fn) -> Rel:
    """A simple relation from a callable that may return None (undefined).

    Bounded carriers truncate: algebras that would leave the carrier are
    represented as partial functions with an empty image at the boundary.
    """
    img = []
    for e in src.elems:
        v = fn(e)
        img.append(_EMPTY if v is None else frozenset((tgt.index(v),)))
    return Rel(src, tgt, img)


# ---------------------------------------------------------------------------
# lattice structure and composition
# ---------------------------------------------------------------------------


def includes(r: Rel, s: Rel) -> bool:
    """True iff ``r`` is included in ``s`` (every pair of r is a pair of s)."""
    require_same(r.src, s.src, "inclusion (source)")
    require_same(r.tgt, s.tgt, "inclusion (target)")
    return all(a <= b for a, b in zip(r._img, s._img))


def meet(r: Rel, s: Rel) -> Rel:
    require_same(r.src, s.src, "meet (source)")
    require_same(r.tgt, s.tgt, "meet (target)")
    return Rel(r.src, r.tgt, (a & b for a, b in zip(r._img, s._img)))


def join(r: Rel, s: Rel) -> Rel:
    require_same(r.src, s.src, "join (source)")
    require_same(r.tgt, s.tgt, "join (target)")
    return Rel(r.src, r.tgt, (a | b for a, b in zip(r._img, s._img)))


def compose(s: Rel, r: Rel) -> Rel:
    """Relational composition ``s . r`` (apply ``r`` first)."""
    require_same(s.src, r.tgt, "composition")
    img = []
    for ts in r._img:
        if not ts:
            img.append(_EMPTY)
        elif len(ts) == 1:
            (b,) = ts
            img.append(s._img[b])
        else:
            acc = set()
            for b in ts:
                acc |= s._img[b]
            img.append(frozenset(acc))
    return Rel(r.src, s.tgt, img)


def converse(r: Rel) -> Rel:
    img = [set() for _ in range(len(r.tgt))]
    for s, ts in enumerate(r._img):
        for t in ts:
            img[t].add(s)
    return Rel(r.tgt, r.src, (frozenset(p) for p in img))


# ---------------------------------------------------------------------------
# divisions, shrinking, thinning
# ---------------------------------------------------------------------------


def left_div(r: Rel, s: Rel) -> Rel:
    r"""Left division ``r \ s``: the greatest X with ``r . X`` included in ``s``.

    Pointwise, ``b (r\s) c`` iff every output of ``b`` under ``r`` is an
    output of ``c`` under ``s``.
    """
    require_same(r.tgt, s.tgt, "left division")
    rimg, simg = r._img, s._img
    nb = len(r.src)
    img = []
    for c in range(len(s.src)):
        sc = simg[c]
        img.append(frozenset(b for b in range(nb) if rimg[b] <= sc))
    return Rel(s.src, r.src, img)


def right_div(s: Rel, r: Rel) -> Rel:
    """Right division ``s / r``: the greatest X with ``X . r`` included in ``s``."""
    require_same(s.src, r.src, "right division")
    nc, nb = len(s.tgt), len(r.tgt)
    spre = [s.preimage_ix(c) for c in range(nc)]
    rpre = [r.preimage_ix(b) for b in range(nb)]
    img = []
    for b in range(nb):
        rb = rpre[b]
        img.append(frozenset(c for c in range(nc) if rb <= spre[c]))
    return Rel(r.tgt, s.tgt, img)


def sym_div(s: Rel, r: Rel) -> Rel:
    """Symmetric division ``s / r`` (s the numerator): relates b to c iff
    b's image under ``r`` equals c's image under ``s``."""
    require_same(s.tgt, r.tgt, "symmetric division")
    rimg, simg = r._img, s._img
    nb = len(r.src)
    img = []
    for c in range(len(s.src)):
        sc = simg[c]
        img.append(frozenset(b for b in range(nb) if rimg[b] == sc))
    return Rel(s.src, r.src, img)


def shrink(s: Rel, r: Rel) -> Rel:
    """``s`` shrunk by ``r``: keep an output for ``x`` only when it is an
    r-maximum among all outputs of ``x`` under ``s``."""
    require_same(r.src, r.tgt, "shrink (optimization must be endo)")
    require_same(s.tgt, r.src, "shrink")
    return meet(s, right_div(r, converse(s)))


def membership(a: Carrier, bound: int = 4) -> Rel:
    """The elementhood relation ``a <- P(a)``."""
    pa = powerset_carrier(a, bound)
    img = []
    for subset in pa.elems:
        img.append(frozenset(a.index(e) for e in subset))
    return Rel(pa, a, img)


def power_transpose(r: Rel, bound: int = 4) -> Fun:
    """The set-valued function mapping each input to its full image set."""
    pa = powerset_carrier(r.tgt, bound)
    return Fun.from_callable(r.src, pa, lambda a: r.image(a))


def eta(a: Carrier, bound: int = 4) -> Fun:
    """Singleton-set injection ``P(a) <- a``."""
    pa = powerset_carrier(a, bound)
    return Fun.from_callable(a, pa, lambda e: frozenset((e,)))


def thin(s: Rel, r: Rel, bound: int = 4) -> Rel:
    """Thinning: set-valued shrink.  ``x (s thin r) b`` holds for the subsets
    x of b's image under ``s`` that lower-bound that image with respect to ``r``."""
    require_same(r.src, r.tgt, "thin (optimization must be endo)")
    require_same(s.tgt, r.src, "thin")
    mem = membership(s.tgt, bound)
    return meet(
        left_div(mem, s),
        right_div(compose(converse(mem), r), converse(s)),
    )


# ---------------------------------------------------------------------------
# coreflexives, domain, range
# ---------------------------------------------------------------------------


def coreflexive(p: Predicate) -> Rel:
    """The partial identity keeping exactly the elements satisfying ``p``."""
    a = p.carrier
    return Rel(
        a, a, (frozenset((i,)) if p.truth[i] else _EMPTY for i in range(len(a)))
    )


def predicate_of(c: Rel) -> Predicate:
    """Recover the predicate of a coreflexive; rejects non-coreflexive input."""
    require_same(c.src, c.tgt, "predicate_of")
    truth = []
    for i, ts in enumerate(c._img):
        if ts - {i}:
            raise ValueError(f"relation is not coreflexive at {c.src.elems[i]!r}")
        truth.append(bool(ts))
    return Predicate(c.src, tuple(truth))


def dom(r: Rel) -> Rel:
    """Domain coreflexive: the partial identity on inputs with some output."""
    return Rel(
        r.src, r.src, (frozenset((i,)) if ts else _EMPTY for i, ts in enumerate(r._img))
    )


def ran(r: Rel) -> Rel:
    """Range coreflexive: the partial identity on outputs actually reached."""
    hit = set()
    for ts in r._img:
        hit |= ts
    return Rel(
        r.tgt, r.tgt, (frozenset((i,)) if i in hit else _EMPTY for i in range(len(r.tgt)))
    )


# ---------------------------------------------------------------------------
# classification and injectivity
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RelProfile:
    entire: bool
    simple: bool
    surjective: bool
    injective: bool
    is_function: bool
    is_difunctional: bool


def classify(r: Rel) -> RelProfile:
    entire = all(ts for ts in r._img)
    simple = all(len(ts) <= 1 for ts in r._img)
    hit = set()
    for ts in r._img:
        hit |= ts
    surjective = len(hit) == len(r.tgt)
    injective = all(len(r.preimage_ix(t)) <= 1 for t in range(len(r.tgt)))
    # difunctional iff image sets of any two inputs are disjoint or equal
    difun = True
    imgs = r._img
    for s1, i1 in enumerate(imgs):
        if not i1:
            continue
        for i2 in imgs:
            if i1 & i2 and i1 != i2:
                difun = False
                break
        if not difun:
            break
    return RelProfile(entire, simple, surjective, injective, entire and simple, difun)


def kernel(f: Rel) -> Rel:
    """``f~ . f``: the equivalence "same f-value" (for entire f)."""
    return compose(converse(f), f)


def inj_leq_counterexample(r: Rel, s: Rel):
    """None if ``r <= s`` in the injectivity preorder, else a pair of inputs
    that s identifies but r separates."""
    require_same(r.src, s.src, "injectivity comparison")
    r_simple = all(len(ts) <= 1 for ts in r._img)
    s_simple = all(len(ts) <= 1 for ts in s._img)
    if r_simple and s_simple:
        # group inputs by s-value; r must be constant (and defined) per group,
        # and defined wherever s is
        seen = {}
        for a, sts in enumerate(s._img):
            if not sts:
                continue
            rts = r._img[a]
            (sv,) = sts
            if sv not in seen:
                if not rts:
                    return (r.src.elems[a], r.src.elems[a])
                seen[sv] = (a, rts)
            else:
                a0, rts0 = seen[sv]
                if rts != rts0:
                    return (r.src.elems[a0], r.src.elems[a])
        return None
    n = len(r.src)
    for a1 in range(n):
        s1, r1 = s._img[a1], r._img[a1]
        for a2 in range(n):
            if s1 & s._img[a2] and not r1 & r._img[a2]:
                return (r.src.elems[a1], r.src.elems[a2])
    return None


def inj_leq(r: Rel, s: Rel) -> bool:
    """Injectivity preorder ``r <= s``: s's kernel is included in r's kernel,
    i.e. inputs s cannot tell apart, r cannot tell apart either."""
    return inj_leq_counterexample(r, s) is None


def first_image_diff(r: Rel, s: Rel):
    """First source element where two same-typed relations disagree, or None."""
    require_same(r.src, s.src, "comparison (source)")
    require_same(r.tgt, s.tgt, "comparison (target)")
    for a, (ri, si) in enumerate(zip(r._img, s._img)):
        if ri != si:
            return r.src.elems[a]
    return None


# ---------------------------------------------------------------------------
# products and coproducts
# ---------------------------------------------------------------------------


def pairing(r: Rel, s: Rel) -> Rel:
    """``(b, c) (r pairing s) a`` iff ``b r a`` and ``c s a``."""
    require_same(r.src, s.src, "pairing")
    prod = product_carrier(r.tgt, s.tgt)
    ns = len(s.tgt)
    img = []
    for rts, sts in zip(r._img, s._img):
        img.append(frozenset(t1 * ns + t2 for t1 in rts for t2 in sts))
    return Rel(r.src, prod, img)


def proj1(a: Carrier, b: Carrier) -> Fun:
    return Fun.from_callable(product_carrier(a, b), a, lambda p: p[0])


def proj2(a: Carrier, b: Carrier) -> Fun:
    return Fun.from_callable(product_carrier(a, b), b, lambda p: p[1])


def rel_prod(r: Rel, s: Rel) -> Rel:
    """``(x, y) (r prod s) (a, b)`` iff ``x r a`` and ``y s b``."""
    src = product_carrier(r.src, s.src)
    tgt = product_carrier(r.tgt, s.tgt)
    nst = len(s.tgt)
    img = []
    for rts in r._img:
        for sts in s._img:
            img.append(frozenset(t1 * nst + t2 for t1 in rts for t2 in sts))
    return Rel(src, tgt, img)


def inj1(a: Carrier, b: Carrier) -> Fun:
    return Fun.from_callable(a, sum_carrier(a, b), lambda x: (0, x))


def inj2(a: Carrier, b: Carrier) -> Fun:
    return Fun.from_callable(b, sum_carrier(a, b), lambda y: (1, y))


def junction(r: Rel, s: Rel) -> Rel:
    """Case split ``[r, s]`` on a sum source: left summand through r, right through s."""
    require_same(r.tgt, s.tgt, "junction")
    src = sum_carrier(r.src, s.src)
    img = list(r._img) + list(s._img)
    return Rel(src, r.tgt, img)


def rel_sum(r: Rel, s: Rel) -> Rel:
    """``r + s``: act as r on the left summand, s on the right."""
    src = sum_carrier(r.src, s.src)
    tgt = sum_carrier(r.tgt, s.tgt)
    off = len(r.tgt)
    img = [frozenset(ts) for ts in r._img]
    img += [frozenset(t + off for t in ts) for ts in s._img]
    return Rel(src, tgt, img)
