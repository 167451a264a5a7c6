"""Term literal syntax for demo and CLI input/output.

Lists are written ``[2,1,3]``, binary node trees ``node(a, l, r)`` and
``empty``, leaf trees ``leaf n`` and ``fork(l, r)``.  Payloads are integers.
"""

from __future__ import annotations

from .algorithms import Fork, Leaf, Node


class TermParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        self.skip_ws()
        if not self.text.startswith(ch, self.pos):
            raise TermParseError(f"expected {ch!r}", self.pos)
        self.pos += len(ch)

    def word(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] in "_-"
        ):
            self.pos += 1
        if start == self.pos:
            raise TermParseError("expected a token", self.pos)
        return self.text[start:self.pos]

    def int_(self):
        w = self.word()
        try:
            return int(w)
        except ValueError:
            raise TermParseError(f"expected an integer, got {w!r}", self.pos) from None

    def done(self):
        self.skip_ws()
        if self.pos != len(self.text):
            raise TermParseError("trailing input", self.pos)


def parse_term(text: str):
    """Parse a list, node tree, or leaf tree literal."""
    sc = _Scanner(text)
    value = _term(sc)
    sc.done()
    return value


def _term(sc: _Scanner):
    c = sc.peek()
    if c == "[":
        return _list(sc)
    w = sc.word()
    if w == "empty":
        return None
    if w == "node":
        sc.expect("(")
        val = sc.int_()
        sc.expect(",")
        left = _term(sc)
        sc.expect(",")
        right = _term(sc)
        sc.expect(")")
        return Node(val, left, right)
    if w == "leaf":
        return Leaf(sc.int_())
    if w == "fork":
        sc.expect("(")
        left = _term(sc)
        sc.expect(",")
        right = _term(sc)
        sc.expect(")")
        return Fork(left, right)
    try:
        return int(w)
    except ValueError:
        raise TermParseError(f"unknown constructor {w!r}", sc.pos) from None


def _list(sc: _Scanner):
    sc.expect("[")
    items = []
    if sc.peek() == "]":
        sc.expect("]")
        return ()
    while True:
        items.append(sc.int_())
        if sc.peek() == ",":
            sc.expect(",")
            continue
        sc.expect("]")
        return tuple(items)


def format_term(value) -> str:
    if value is None:
        return "empty"
    if isinstance(value, tuple):
        return "[" + ",".join(str(v) for v in value) + "]"
    if isinstance(value, Node):
        return f"node({value.val}, {format_term(value.left)}, {format_term(value.right)})"
    if isinstance(value, Leaf):
        return f"leaf {value.val}"
    if isinstance(value, Fork):
        return f"fork({format_term(value.left)}, {format_term(value.right)})"
    return str(value)
