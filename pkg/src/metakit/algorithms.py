"""Executable divide-and-conquer algorithms with independent brute-force oracles.

Lists are tuples.  Binary trees with node payloads are ``Node``/``None``;
binary leaf trees are ``Leaf``/``Fork``.  A left spine is a pair
``(head, trees)`` of a leaf payload and a tuple of leaf trees.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations


class ContractViolation(ValueError):
    """An operation was called outside its stated precondition."""


# ---------------------------------------------------------------------------
# bags, permutations, orderedness
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Bag:
    """A multiset as a sorted tuple of (element, multiplicity) entries."""

    counts: tuple

    @classmethod
    def of(cls, xs) -> "Bag":
        acc = {}
        for x in xs:
            acc[x] = acc.get(x, 0) + 1
        return cls(tuple(sorted(acc.items())))

    def union(self, other: "Bag") -> "Bag":
        acc = dict(self.counts)
        for k, n in other.counts:
            acc[k] = acc.get(k, 0) + n
        return Bag(tuple(sorted(acc.items())))

    def add(self, x) -> "Bag":
        return self.union(Bag.of((x,)))

    @property
    def total(self) -> int:
        return sum(n for _, n in self.counts)

    def support(self) -> frozenset:
        return frozenset(k for k, _ in self.counts)

    def __repr__(self):
        inner = ", ".join(f"{k}:{n}" for k, n in self.counts)
        return "Bag{" + inner + "}"


def bag(xs) -> Bag:
    return Bag.of(xs)


def ordered_p(xs) -> bool:
    """Orderedness by the head-vs-minimum-of-tail reading: the first element
    is at most the minimum of the rest, recursively."""
    xs = tuple(xs)
    if len(xs) <= 1:
        return True
    return all(xs[0] <= y for y in xs[1:]) and ordered_p(xs[1:])


def sort_oracle(xs) -> tuple:
    """The unique ordered member of the permutation class of ``xs``.

    Found by enumeration; existence and uniqueness are asserted per input.
    """
    xs = tuple(xs)
    found = {p for p in permutations(xs) if ordered_p(p)}
    if len(found) != 1:
        raise AssertionError(f"perm class of {xs} has {len(found)} ordered members")
    return found.pop()


# ---------------------------------------------------------------------------
# quicksort
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Node:
    val: object
    left: "Node | None"
    right: "Node | None"


def s_pred(a, x, y) -> bool:
    """The pivot split condition: everything left of the pivot is at most the
    pivot, everything right is at least it.  Says nothing about the internal
    order of either part."""
    return all(b <= a for b in x) and all(a <= b for b in y)


def pivot_head_split(xs):
    """Deterministic split: head as pivot, tail partitioned around it."""
    xs = tuple(xs)
    if not xs:
        raise ContractViolation("pivot_head_split needs a non-empty list")
    h, t = xs[0], xs[1:]
    return h, (tuple(a for a in t if a <= h), tuple(a for a in t if a > h))


def qsort_tree(xs) -> Node | None:
    """The virtual search tree the head-pivot unfold builds for ``xs``."""
    xs = tuple(xs)
    if not xs:
        return None
    a, (y, z) = pivot_head_split(xs)
    return Node(a, qsort_tree(y), qsort_tree(z))


def flatten(t: Node | None) -> tuple:
    """Inorder traversal of a node tree."""
    if t is None:
        return ()
    return flatten(t.left) + (t.val,) + flatten(t.right)


def is_bst(t: Node | None) -> bool:
    """Bi-ordered: at every node the left part is at most the payload and the
    right part at least it."""
    if t is None:
        return True
    return (
        s_pred(t.val, flatten(t.left), flatten(t.right))
        and is_bst(t.left)
        and is_bst(t.right)
    )


def quicksort(xs) -> tuple:
    return flatten(qsort_tree(xs))


# ---------------------------------------------------------------------------
# mergesort
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Leaf:
    val: object


@dataclass(frozen=True)
class Fork:
    left: object
    right: object


def tips(t) -> tuple:
    """Left-to-right leaf sequence of a leaf tree."""
    if isinstance(t, Leaf):
        return (t.val,)
    return tips(t.left) + tips(t.right)


def merge(x, y) -> tuple:
    """Merge two ordered lists into an ordered list; ties take from the left."""
    x, y = tuple(x), tuple(y)
    if not ordered_p(x) or not ordered_p(y):
        raise ContractViolation("merge requires both inputs ordered")
    out = []
    i = j = 0
    while i < len(x) and j < len(y):
        if x[i] <= y[j]:
            out.append(x[i])
            i += 1
        else:
            out.append(y[j])
            j += 1
    out.extend(x[i:])
    out.extend(y[j:])
    return tuple(out)


def split_halves(xs):
    """Split with the ceiling half on the left; needs at least two elements."""
    xs = tuple(xs)
    if len(xs) < 2:
        raise ContractViolation("split_halves needs length >= 2")
    k = (len(xs) + 1) // 2
    return xs[:k], xs[k:]


def msort_tree(xs):
    """The virtual leaf tree the balanced-split unfold builds (non-empty input)."""
    xs = tuple(xs)
    if not xs:
        raise ContractViolation("msort_tree needs a non-empty list")
    if len(xs) == 1:
        return Leaf(xs[0])
    l, r = split_halves(xs)
    return Fork(msort_tree(l), msort_tree(r))


def _merge_tree(t) -> tuple:
    if isinstance(t, Leaf):
        return (t.val,)
    return merge(_merge_tree(t.left), _merge_tree(t.right))


def mergesort(xs) -> tuple:
    # the empty list is handled apart from the leaf-tree scheme
    xs = tuple(xs)
    if not xs:
        return ()
    return _merge_tree(msort_tree(xs))


# ---------------------------------------------------------------------------
# minimum-height trees over leaf trees of heights
# ---------------------------------------------------------------------------


def height(t) -> int:
    """Leaves carry the heights of the subtrees they stand for."""
    if isinstance(t, Leaf):
        return t.val
    return max(height(t.left), height(t.right)) + 1


def roll(spine):
    """Fold a left spine ``(a, [t1..tn])`` back into a tree by hanging each
    ti rightward: the innermost (leftmost) leaf carries ``a``."""
    a, ts = spine
    acc = Leaf(a)
    for t in ts:
        acc = Fork(acc, t)
    return acc


def unroll(t):
    """Inverse of ``roll``: peel the left spine off a tree."""
    ts = []
    while isinstance(t, Fork):
        ts.append(t.right)
        t = t.left
    return t.val, tuple(reversed(ts))


def troll(spine) -> tuple:
    """Leaf sequence of the rolled spine; its head is the spine head."""
    return tips(roll(spine))


def minsplit(a, x, xs) -> tuple:
    """Greedy repair of a spine's tree list after a new head arrives."""
    xs = tuple(xs)
    if not xs:
        return (x,)
    y, rest = xs[0], xs[1:]
    if max(a, height(x)) < height(y):
        return (x,) + xs
    return minsplit(a, Fork(x, y), rest)


def min_extend(a, spine):
    """The greedy spine step: new head ``a``, old head demoted to a leaf and
    merged into the tree list by ``minsplit``."""
    b, ts = spine
    return a, minsplit(a, Leaf(b), ts)


def naive_extend(a, spine):
    """The tempting but wrong spine step: push the old head as a leaf onto the
    front of the tree list unchanged."""
    b, ts = spine
    return a, (Leaf(b),) + ts


def lspinecosts(spine) -> tuple:
    """Rolled heights of every prefix of the tree list, longest first, down to
    and including the empty prefix."""
    a, ts = spine
    return tuple(height(roll((a, ts[:k]))) for k in range(len(ts), -1, -1))


def spine_leq(s1, s2) -> bool:
    """Cost-list dominance: s1's cost list is no longer than s2's and no
    entry is larger, position by position."""
    c1, c2 = lspinecosts(s1), lspinecosts(s2)
    return len(c1) <= len(c2) and all(a <= b for a, b in zip(c1, c2))


def build_min_height(xs):
    """Assemble the heights in ``xs`` into a tree of minimum height by folding
    through the spine representation and rolling the result."""
    xs = tuple(xs)
    if not xs:
        raise ContractViolation("build_min_height needs a non-empty list")
    spine = (xs[-1], ())
    for a in reversed(xs[:-1]):
        spine = min_extend(a, spine)
    return roll(spine)


def all_tree_shapes(xs):
    """Every binary leaf tree over the sequence ``xs`` (Catalan many)."""
    xs = tuple(xs)
    if len(xs) == 1:
        yield Leaf(xs[0])
        return
    for k in range(1, len(xs)):
        for l in all_tree_shapes(xs[:k]):
            for r in all_tree_shapes(xs[k:]):
                yield Fork(l, r)


def brute_min_height(xs) -> int:
    """Minimum achievable height over every tree shape; the acceptance oracle
    for ``build_min_height``.  Capped at length 8 (Catalan growth)."""
    xs = tuple(xs)
    if not xs:
        raise ContractViolation("brute_min_height needs a non-empty list")
    if len(xs) > 8:
        raise ContractViolation("brute_min_height is capped at length 8")
    return min(height(t) for t in all_tree_shapes(xs))


# ---------------------------------------------------------------------------
# representation changer (append a summand, keep the sum attribute)
# ---------------------------------------------------------------------------


def sat_add(x: int, y: int, cap: int = 16) -> int:
    return min(x + y, cap)


def sat_sum(xs, cap: int = 16) -> int:
    acc = 0
    for x in xs:
        acc = sat_add(acc, x, cap)
    return acc


def rep_changer(b, xs) -> tuple:
    """The fold that realizes "add b to the sum" as a change of representation:
    the empty list becomes [b], a cons is kept and the tail is rewritten."""
    xs = tuple(xs)
    if not xs:
        return (b,)
    return (xs[0],) + rep_changer(b, xs[1:])
