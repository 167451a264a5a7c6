"""The relation text format used by fixtures and the command line.

A relation is stored as::

    rel A(5) -> B(5)
    a3 -> b1
    a2 -> b3

One header line names the source and target carriers with their sizes, then
one line per pair written source first; a blank line (or end of input)
terminates.  Element labels are the lowercased carrier name followed by a
1-based index, so ``A(5)`` has elements ``a1 .. a5``.
"""

from __future__ import annotations

import re

from .carrier import Carrier
from .rel import Rel

_HEADER = re.compile(r"^rel\s+(\w+)\((\d+)\)\s*->\s*(\w+)\((\d+)\)\s*$")
_PAIR = re.compile(r"^(\S+)\s*->\s*(\S+)$")


class RelFormatError(ValueError):
    pass


def labelled_carrier(name: str, n: int) -> Carrier:
    return Carrier(name, tuple(f"{name.lower()}{i}" for i in range(1, n + 1)))


def parse_rel(text: str) -> Rel:
    lines = text.splitlines()
    i = 0
    while i < len(lines) and not lines[i].strip():
        i += 1
    if i == len(lines):
        raise RelFormatError("empty relation text")
    m = _HEADER.match(lines[i].strip())
    if not m:
        raise RelFormatError(f"line {i + 1}: bad header {lines[i]!r}")
    src = labelled_carrier(m.group(1), int(m.group(2)))
    tgt = labelled_carrier(m.group(3), int(m.group(4)))
    pairs = []
    for j in range(i + 1, len(lines)):
        line = lines[j].strip()
        if not line:
            break
        pm = _PAIR.match(line)
        if not pm:
            raise RelFormatError(f"line {j + 1}: bad pair {line!r}")
        s, t = pm.group(1), pm.group(2)
        if s not in src:
            raise RelFormatError(f"line {j + 1}: {s!r} not in carrier {src.name}")
        if t not in tgt:
            raise RelFormatError(f"line {j + 1}: {t!r} not in carrier {tgt.name}")
        pairs.append((t, s))
    return Rel.from_pairs(src, tgt, pairs)


def format_rel(r: Rel) -> str:
    """Serialize; labels fall back to ``str(elem)`` for carriers that do not
    follow the labelling convention (such carriers will not re-parse)."""
    out = [f"rel {r.src.name}({len(r.src)}) -> {r.tgt.name}({len(r.tgt)})"]
    for t, s in sorted(r.index_pairs(), key=lambda p: (p[1], p[0])):
        out.append(f"{r.src.elems[s]} -> {r.tgt.elems[t]}")
    out.append("")
    return "\n".join(out)


def load_rel(path) -> Rel:
    with open(path, encoding="utf-8") as fh:
        return parse_rel(fh.read())


def display2_path() -> str:
    """The shipped fixture reproducing the non-difunctional example matrix."""
    from importlib.resources import files

    return str(files("metakit").joinpath("fixtures/display2.rel"))
