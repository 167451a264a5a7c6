"""Deterministic generator streams for quantified law variables.

Exhaustive streams enumerate in a fixed order (relations by pair bitmask,
functions by target-choice vectors, equivalences by set partitions);
random streams are fully determined by the supplied RNG.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .carrier import Carrier
from .rel import Fun, Predicate, Rel


@lru_cache(maxsize=None)
def letter_carrier(letter: str, n: int) -> Carrier:
    """The canonical n-element carrier for a quantified type letter."""
    return Carrier(f"{letter}{n}", tuple(f"{letter.lower()}{i}" for i in range(1, n + 1)))


def all_rels(src: Carrier, tgt: Carrier):
    """All relations tgt <- src, ordered by pair-set bitmask (bit = t*|src|+s)."""
    ns, nt = len(src), len(tgt)
    n = ns * nt
    for mask in range(1 << n):
        yield Rel.from_index_pairs(
            src, tgt, ((k // ns, k % ns) for k in range(n) if mask >> k & 1)
        )


def count_rels(src: Carrier, tgt: Carrier) -> int:
    return 1 << (len(src) * len(tgt))


def all_funs(src: Carrier, tgt: Carrier):
    """All functions tgt <- src, ordered by target-choice vectors."""
    for choice in product(range(len(tgt)), repeat=len(src)):
        yield Fun(src, tgt, (frozenset((t,)) for t in choice))


def count_funs(src: Carrier, tgt: Carrier) -> int:
    return len(tgt) ** len(src)


def all_surjections(src: Carrier, tgt: Carrier):
    nt = len(tgt)
    for choice in product(range(nt), repeat=len(src)):
        if len(set(choice)) == nt:
            yield Fun(src, tgt, (frozenset((t,)) for t in choice))


def count_surjections(src: Carrier, tgt: Carrier) -> int:
    # inclusion-exclusion over missed targets
    from math import comb

    ns, nt = len(src), len(tgt)
    return sum((-1) ** k * comb(nt, k) * (nt - k) ** ns for k in range(nt + 1))


def all_predicates(carrier: Carrier):
    for mask in range(1 << len(carrier)):
        yield Predicate(
            carrier, tuple(bool(mask >> i & 1) for i in range(len(carrier)))
        )


def count_predicates(carrier: Carrier) -> int:
    return 1 << len(carrier)


def _partitions(items):
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in _partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[head] + part[i]] + part[i + 1:]
        yield [[head]] + part


def all_equivalences(carrier: Carrier):
    """All equivalence relations on a carrier, one per set partition."""
    idx = list(range(len(carrier)))
    for part in _partitions(idx):
        pairs = []
        for block in part:
            pairs.extend((i, j) for i in block for j in block)
        yield Rel.from_index_pairs(carrier, carrier, pairs)


def count_equivalences(carrier: Carrier) -> int:
    return _bell(len(carrier))


@lru_cache(maxsize=None)
def _bell(n: int) -> int:
    if n == 0:
        return 1
    from math import comb

    return sum(comb(n - 1, k) * _bell(k) for k in range(n))


# -- random streams ---------------------------------------------------------


def random_rel(rng, src: Carrier, tgt: Carrier) -> Rel:
    n = len(src) * len(tgt)
    mask = rng.getrandbits(n) if n else 0
    ns = len(src)
    return Rel.from_index_pairs(
        src, tgt, ((k // ns, k % ns) for k in range(n) if mask >> k & 1)
    )


def random_fun(rng, src: Carrier, tgt: Carrier) -> Fun:
    return Fun(src, tgt, (frozenset((rng.randrange(len(tgt)),)) for _ in src.elems))


def random_surjection(rng, src: Carrier, tgt: Carrier) -> Fun:
    ns, nt = len(src), len(tgt)
    if nt > ns:
        raise ValueError("no surjection onto a larger carrier")
    # hit every target once through a random partial injection, then fill
    slots = list(range(ns))
    chosen = rng.sample(slots, nt)
    choice = [None] * ns
    for t, s in enumerate(chosen):
        choice[s] = t
    for s in range(ns):
        if choice[s] is None:
            choice[s] = rng.randrange(nt)
    return Fun(src, tgt, (frozenset((t,)) for t in choice))


def random_predicate(rng, carrier: Carrier) -> Predicate:
    return Predicate(carrier, tuple(bool(rng.getrandbits(1)) for _ in carrier.elems))


def random_equivalence(rng, carrier: Carrier) -> Rel:
    # restricted-growth assignment of elements to blocks
    blocks: list[list[int]] = []
    for i in range(len(carrier)):
        k = rng.randrange(len(blocks) + 1)
        if k == len(blocks):
            blocks.append([i])
        else:
            blocks[k].append(i)
    pairs = []
    for block in blocks:
        pairs.extend((i, j) for i in block for j in block)
    return Rel.from_index_pairs(carrier, carrier, pairs)
