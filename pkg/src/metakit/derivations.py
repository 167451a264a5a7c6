"""Bounded relational instantiations of the derived algorithms.

Each world fixes an alphabet and length bound, builds the mu-carriers and
algebras involved, and exposes the certifier calls that accept the derivation
on those carriers.  The plain algorithms in :mod:`metakit.algorithms` serve
as the independent side of every comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, permutations, product

from .carrier import Carrier, UNIT, UNIT_ELEM, product_carrier
from .rel import (
    Fun,
    Predicate,
    Rel,
    compose,
    const_fun,
    coreflexive,
    junction,
    kernel,
    meet,
    partial_fn,
    sym_div,
)
from .functors import (
    apply_carrier,
    leaf_tree_base,
    list_base,
    node_tree_base,
    nonempty_list_base,
)
from .mu import MuCarrier, MuTerm
from . import algorithms as alg
from .algorithms import Bag, Fork, Leaf


def nat_carrier(n: int) -> Carrier:
    return Carrier(f"N{n}", tuple(range(n)))


# ---------------------------------------------------------------------------
# term codecs (mu terms <-> native values)
# ---------------------------------------------------------------------------


def list_term(xs) -> MuTerm:
    t = MuTerm((0, UNIT_ELEM))
    for a in reversed(tuple(xs)):
        t = MuTerm((1, (a, t)))
    return t


def term_list(t: MuTerm) -> tuple:
    out = []
    while t.value[0] == 1:
        a, t = t.value[1]
        out.append(a)
    return tuple(out)


def ne_list_term(xs) -> MuTerm:
    xs = tuple(xs)
    t = MuTerm((0, xs[-1]))
    for a in reversed(xs[:-1]):
        t = MuTerm((1, (a, t)))
    return t


def term_ne_list(t: MuTerm) -> tuple:
    out = []
    while t.value[0] == 1:
        a, t = t.value[1]
        out.append(a)
    out.append(t.value[1])
    return tuple(out)


def node_tree_term(t) -> MuTerm:
    if t is None:
        return MuTerm((0, UNIT_ELEM))
    return MuTerm((1, (t.val, (node_tree_term(t.left), node_tree_term(t.right)))))


def term_node_tree(t: MuTerm):
    if t.value[0] == 0:
        return None
    a, (l, r) = t.value[1]
    return alg.Node(a, term_node_tree(l), term_node_tree(r))


def leaf_tree_term(t) -> MuTerm:
    if isinstance(t, Leaf):
        return MuTerm((0, t.val))
    return MuTerm((1, (leaf_tree_term(t.left), leaf_tree_term(t.right))))


def term_leaf_tree(t: MuTerm):
    if t.value[0] == 0:
        return Leaf(t.value[1])
    l, r = t.value[1]
    return Fork(term_leaf_tree(l), term_leaf_tree(r))


# ---------------------------------------------------------------------------
# the sorting metaphorism over bounded lists
# ---------------------------------------------------------------------------


class ListWorld:
    """Bounded lists over a numeric alphabet, with the bag attribute, the
    permutation kernel, and the sorting specification."""

    def __init__(self, alphabet_size: int = 3, maxlen: int = 3):
        self.alphabet = nat_carrier(alphabet_size)
        self.maxlen = maxlen
        self.base = list_base(self.alphabet)
        self.mu = MuCarrier(self.base, maxlen)
        self.lists = self.mu.carrier

        bags = []
        for n in range(maxlen + 1):
            for combo in combinations_with_replacement(self.alphabet.elems, n):
                bags.append(Bag.of(combo))
        self.bags = Carrier(f"Bags{alphabet_size},{maxlen}", tuple(bags))

        self.bag_fold = Fun.from_callable(
            self.lists, self.bags, lambda t: Bag.of(term_list(t))
        )
        self.bag_alg = junction(
            const_fun(UNIT, self.bags, Bag.of(())),
            partial_fn(
                product_carrier(self.alphabet, self.bags),
                self.bags,
                lambda p: p[1].add(p[0]) if p[1].total < maxlen else None,
            ),
        )
        self.ordered = Predicate.from_callable(
            self.lists, lambda t: alg.ordered_p(term_list(t))
        )
        self.perm = kernel(self.bag_fold)
        self.sort_spec = compose(coreflexive(self.ordered), self.perm)
        self.sort_fun = Fun.from_callable(
            self.lists, self.lists, lambda t: list_term(alg.sort_oracle(term_list(t)))
        )


class QuickWorld(ListWorld):
    """The quicksort derivation: node trees as the virtual structure, the
    inorder-flatten abstraction, and the pivot-split divide step.

    ``mutate="drop-left-bound"`` weakens the split condition by dropping its
    left conjunct; the checklist must then fail with a witness.
    """

    def __init__(self, alphabet_size: int = 3, maxlen: int = 3, mutate: str | None = None):
        super().__init__(alphabet_size, maxlen)
        if mutate not in (None, "drop-left-bound"):
            raise ValueError(f"unknown mutation {mutate!r}")
        self.mutate = mutate
        self.tree_base = node_tree_base(self.alphabet)
        self.trees = MuCarrier(self.tree_base, maxlen, max_size=2 * maxlen + 1)
        self.g_lists = apply_carrier(self.tree_base, self.lists)

        def inord(p):
            a, (tx, ty) = p
            xs = term_list(tx) + (a,) + term_list(ty)
            return list_term(xs) if len(xs) <= maxlen else None

        self.flatten_alg = junction(
            const_fun(UNIT, self.lists, list_term(())),
            partial_fn(
                product_carrier(self.alphabet, product_carrier(self.lists, self.lists)),
                self.lists,
                inord,
            ),
        )
        self.flatten_fold = Fun.from_callable(
            self.trees.carrier,
            self.lists,
            lambda t: list_term(alg.flatten(term_node_tree(t))),
        )

        self.split_ok = self._split_pred()
        self.r_pred = Predicate.from_callable(self.g_lists, self._r_holds)
        self.w_pred = Predicate.from_callable(
            apply_carrier(self.tree_base, self.trees.carrier), self._w_holds
        )

    def _split_pred(self):
        if self.mutate == "drop-left-bound":
            return lambda a, x, y: all(a <= b for b in y)
        return alg.s_pred

    def _r_holds(self, v):
        if v[0] == 0:
            return True
        a, (tx, ty) = v[1]
        return self.split_ok(a, term_list(tx), term_list(ty))

    def _w_holds(self, v):
        if v[0] == 0:
            return True
        a, (t1, t2) = v[1]
        return self.split_ok(
            a, alg.flatten(term_node_tree(t1)), alg.flatten(term_node_tree(t2))
        )

    def divide_z(self) -> Rel:
        """The hand-written divide coalgebra: the empty list goes to the unit
        summand; a non-empty list goes to every pivot split of every
        permutation that satisfies the split condition."""
        pairs = []
        unit = (0, UNIT_ELEM)
        for t in self.lists.elems:
            xs = term_list(t)
            if not xs:
                pairs.append((unit, t))
                continue
            seen = set()
            for p in permutations(xs):
                for k in range(len(p)):
                    a, y, z = p[k], p[:k], p[k + 1:]
                    if self.split_ok(a, y, z):
                        seen.add((1, (a, (list_term(y), list_term(z)))))
            pairs.extend((v, t) for v in seen)
        return Rel.from_pairs(self.lists, self.g_lists, pairs)

    def pivot_coalg(self) -> Fun:
        """The deterministic head-pivot refinement of the divide coalgebra."""

        def step(t):
            xs = term_list(t)
            if not xs:
                return (0, UNIT_ELEM)
            a, (y, z) = alg.pivot_head_split(xs)
            return (1, (a, (list_term(y), list_term(z))))

        return Fun.from_callable(self.lists, self.g_lists, step)

    def checklist(self):
        from .metaphors import checklist_quicksort_style

        return checklist_quicksort_style(
            self.mu, self.trees, self.bag_alg, self.flatten_alg,
            self.ordered, self.r_pred, self.w_pred,
        )

    def derive(self):
        from .metaphors import derive_z

        return derive_z(
            self.mu, self.trees, self.bag_alg, self.flatten_alg,
            self.ordered, self.r_pred, self.w_pred,
        )


class MergeWorld(ListWorld):
    """The mergesort derivation: leaf trees as the virtual structure, the
    tips abstraction grafted at the front, merge as the conquer algebra, and
    the balanced split certified as a converse of a function."""

    def __init__(self, alphabet_size: int = 4, maxlen: int = 4):
        super().__init__(alphabet_size, maxlen)
        self.tree_base = leaf_tree_base(self.alphabet)
        self.trees = MuCarrier(
            self.tree_base, max(maxlen - 1, 0), max_size=max(2 * maxlen - 1, 1)
        )
        self.k_lists = apply_carrier(self.tree_base, self.lists)

        def conc(p):
            xs = term_list(p[0]) + term_list(p[1])
            return list_term(xs) if len(xs) <= maxlen else None

        def merge_step(p):
            x, y = term_list(p[0]), term_list(p[1])
            if not (alg.ordered_p(x) and alg.ordered_p(y)) or len(x) + len(y) > maxlen:
                return None
            return list_term(alg.merge(x, y))

        singl = Fun.from_callable(self.alphabet, self.lists, lambda a: list_term((a,)))
        pair_lists = product_carrier(self.lists, self.lists)
        self.tips_alg = junction(singl, partial_fn(pair_lists, self.lists, conc))
        self.merge_alg = junction(singl, partial_fn(pair_lists, self.lists, merge_step))
        self.tips_fold = Fun.from_callable(
            self.trees.carrier,
            self.lists,
            lambda t: list_term(alg.tips(term_leaf_tree(t))),
        )

        def split(t):
            xs = term_list(t)
            if not xs:
                return None
            if len(xs) == 1:
                return (0, xs[0])
            l, r = alg.split_halves(xs)
            return (1, (list_term(l), list_term(r)))

        self.split_coalg = partial_fn(self.lists, self.k_lists, split)

        # the non-empty sub-story used by the converse-of-function certificate
        self.ne_lists = Carrier(
            f"ne-{self.lists.name}", tuple(t for t in self.lists.elems if term_list(t))
        )
        self.balanced_fun = Fun.from_callable(
            self.ne_lists,
            self.trees.carrier,
            lambda t: leaf_tree_term(alg.msort_tree(term_list(t))),
        )

        def bal_conc(p):
            xs = term_list(p[0]) + term_list(p[1])
            if len(xs) > maxlen or alg.split_halves(xs) != (term_list(p[0]), term_list(p[1])):
                return None
            return list_term(xs)

        self.split_alg = junction(
            Fun.from_callable(self.alphabet, self.ne_lists, lambda a: list_term((a,))),
            partial_fn(
                product_carrier(self.ne_lists, self.ne_lists), self.ne_lists, bal_conc
            ),
        )

    def congruence(self, with_attribute: bool = False):
        from .metaphors import check_congruence

        return check_congruence(
            self.perm, self.tips_alg, self.tree_base,
            f=self.bag_fold if with_attribute else None,
        )

    def theorem4(self):
        from .metaphors import check_converse_of_function

        return check_converse_of_function(self.balanced_fun, self.split_alg, self.trees)

    def msort_hylo(self):
        from .folds import hylo

        return hylo(self.trees, self.merge_alg, self.split_coalg)


# ---------------------------------------------------------------------------
# minimum-height trees over left spines
# ---------------------------------------------------------------------------


def _all_leaf_trees(values, max_leaves):
    for n in range(1, max_leaves + 1):
        for labels in product(values, repeat=n):
            yield from alg.all_tree_shapes(labels)


def _tree_lists(trees, budget):
    yield ()
    if budget <= 0:
        return
    for t in trees:
        k = len(alg.tips(t))
        if k > budget:
            continue
        for rest in _tree_lists(trees, budget - k):
            yield (t,) + rest


class MinHeightWorld:
    """The minimum-height derivation: non-empty lists of subtree heights fold
    into left spines, greedily repaired by ``minsplit`` under the cost-list
    ordering."""

    def __init__(self, heights=(1, 2, 3), maxlen: int = 3):
        self.heights = Carrier(f"H{len(heights)}", tuple(heights))
        self.maxlen = maxlen
        self.base = nonempty_list_base(self.heights)
        self.mu = MuCarrier(self.base, maxlen - 1)
        self.lists = self.mu.carrier

        budget = maxlen - 1
        trees = tuple(_all_leaf_trees(self.heights.elems, budget))
        ts_options = sorted(set(_tree_lists(trees, budget)), key=repr)
        spines = tuple((a, ts) for a in self.heights.elems for ts in ts_options)
        self.spines = Carrier(f"Spine{len(heights)},{maxlen}", spines)

        self.troll_fun = Fun.from_callable(
            self.spines, self.lists, lambda s: ne_list_term(alg.troll(s))
        )
        self.start_alg = Fun.from_callable(
            self.heights, self.spines, lambda a: (a, ())
        )
        self.ext_carrier = product_carrier(self.heights, self.spines)

        def grow(p):
            a, s = p
            xs = (a,) + alg.troll(s)
            return ne_list_term(xs) if len(xs) <= maxlen else None

        grown = partial_fn(self.ext_carrier, self.lists, grow)
        self.extend_spec = sym_div(grown, self.troll_fun)

        def minsplit_step(p):
            a, s = p
            out = alg.min_extend(a, s)
            return out if out in self.spines else None

        def naive_step(p):
            a, s = p
            out = alg.naive_extend(a, s)
            return out if out in self.spines else None

        self.extend_minsplit = partial_fn(self.ext_carrier, self.spines, minsplit_step)
        self.extend_naive = partial_fn(self.ext_carrier, self.spines, naive_step)

        self.cost_leq = Rel.from_pairs(
            self.spines,
            self.spines,
            (
                (s1, s2)
                for s1 in spines
                for s2 in spines
                if alg.spine_leq(s1, s2)
            ),
        )
        # comparisons only ever happen between alternative spines for the same
        # leaf sequence, so the usable ordering is cost dominance cut down to
        # the troll kernel
        self.refined_leq = meet(self.cost_leq, kernel(self.troll_fun))
        self.height_leq = Rel.from_pairs(
            self.spines,
            self.spines,
            (
                (s1, s2)
                for s1 in spines
                for s2 in spines
                if alg.height(alg.roll(s1)) <= alg.height(alg.roll(s2))
            ),
        )

    def spec_alg(self) -> Rel:
        return junction(self.start_alg, self.extend_spec)

    def greedy_alg(self) -> Rel:
        return junction(self.start_alg, self.extend_minsplit)

    def naive_alg(self) -> Rel:
        return junction(self.start_alg, self.extend_naive)

    def theorem4(self):
        from .metaphors import check_converse_of_function

        return check_converse_of_function(self.troll_fun, self.spec_alg(), self.mu)

    def greedy(self, algebra=None, ordering=None):
        from .metaphors import check_greedy_shrink

        return check_greedy_shrink(
            self.greedy_alg() if algebra is None else algebra,
            self.refined_leq if ordering is None else ordering,
            self.mu,
        )

    def naive_rejection(self):
        """The naive spine step against the raw height ordering: the
        monotonicity condition fails with a witness."""
        return self.greedy(self.naive_alg(), self.height_leq)


# ---------------------------------------------------------------------------
# the representation changer (append a summand, preserve the sum)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RepChangerWorld:
    b: int
    cap: int = 6
    maxlen: int = 2

    def pieces(self):
        values = Carrier(f"Sat{self.cap}", tuple(range(self.cap + 1)))
        base = list_base(values)
        mu = MuCarrier(base, self.maxlen)
        add = Fun.from_callable(
            product_carrier(values, values),
            values,
            lambda p: alg.sat_add(p[0], p[1], self.cap),
        )
        y_alg = junction(const_fun(UNIT, values, 0), add)
        k = Fun.from_callable(values, values, lambda v: alg.sat_add(self.b, v, self.cap))
        z_alg = junction(const_fun(UNIT, values, min(self.b, self.cap)), add)

        def cons_step(p):
            a, t = p
            xs = (a,) + term_list(t)
            return list_term(xs) if len(xs) <= self.maxlen else None

        x_alg = junction(
            const_fun(UNIT, mu.carrier, list_term((min(self.b, self.cap),))),
            partial_fn(product_carrier(values, mu.carrier), mu.carrier, cons_step),
        )
        return mu, k, y_alg, z_alg, x_alg

    def verdict(self):
        from .metaphors import check_rep_changer

        return check_rep_changer(*self.pieces())
