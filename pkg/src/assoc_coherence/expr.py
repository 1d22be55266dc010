"""Parenthesized expressions as immutable binary trees.

Leaves carry no labels; the k-th leaf from the left is the k-th variable.
Text form: ``expr := "x" | "(" expr "*" expr ")"``.
"""

from __future__ import annotations

import os
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

DEFAULT_CAP = 12
CAP_ENV_VAR = "ASSOC_COHERENCE_MAX_N"


class CoherenceError(Exception):
    """Base class for domain errors raised by this package."""


class ParseError(CoherenceError, ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


class InvalidAddressError(CoherenceError, ValueError):
    pass


class CapExceededError(CoherenceError, ValueError):
    pass


class Expr:
    """Common base of :class:`Leaf` and :class:`Node`."""

    __slots__ = ()
    size: int

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"parse({render(self)!r})"


class Leaf(Expr):
    __slots__ = ()
    _instance: Leaf | None = None
    size = 1

    def __new__(cls) -> Leaf:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __reduce__(self):
        return (Leaf, ())


LEAF = Leaf()


class Node(Expr):
    __slots__ = ("left", "right", "size", "_hash")

    def __init__(self, left: Expr, right: Expr):
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        object.__setattr__(self, "size", left.size + right.size)
        object.__setattr__(self, "_hash", hash((left, right)))

    def __setattr__(self, name, value):
        raise AttributeError("Node is immutable")

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Node):
            return NotImplemented if not isinstance(other, Expr) else False
        stack = [(self, other)]
        while stack:
            a, b = stack.pop()
            if a is b:
                continue
            if type(a) is not type(b) or a.size != b.size or a._hash != b._hash:
                return False
            stack.append((a.right, b.right))
            stack.append((a.left, b.left))
        return True

    def __hash__(self) -> int:
        return self._hash

    def __reduce__(self):
        return (Node, (self.left, self.right))


class Metrics(NamedTuple):
    level: int
    weight: int


# A node address is a tuple of "L"/"R" steps from the root.


def parse_address(text: str) -> tuple[str, ...]:
    """Parse ``"LRL"`` style addresses; ``""`` or ``"-"`` is the root."""
    text = text.strip()
    if text in ("", "-"):
        return ()
    steps = tuple(text.upper())
    if any(s not in ("L", "R") for s in steps):
        raise InvalidAddressError(f"address must consist of L/R steps: {text!r}")
    return steps


def format_address(address: Sequence[str]) -> str:
    return "".join(address) or "-"


def parse(text: str) -> Expr:
    tokens = [(i, c) for i, c in enumerate(text) if not c.isspace()]
    pos = 0

    def peek() -> tuple[int, str]:
        if pos < len(tokens):
            return tokens[pos]
        return len(text), ""

    # Iterative parse; an explicit stack keeps deep right combs off the C stack.
    stack: list[list] = []
    result: Expr | None = None
    while True:
        at, ch = peek()
        if ch == "x":
            pos += 1
            value: Expr = LEAF
        elif ch == "(":
            pos += 1
            stack.append([])
            continue
        elif ch == "":
            raise ParseError("unexpected end of input", text, at)
        else:
            raise ParseError(f"unexpected token {ch!r}", text, at)

        while True:
            if not stack:
                result = value
                break
            frame = stack[-1]
            frame.append(value)
            at, ch = peek()
            if len(frame) == 1:
                if ch != "*":
                    raise ParseError("expected '*'" if ch else "unexpected end of input", text, at)
                pos += 1
                break
            if ch != ")":
                raise ParseError("expected ')'" if ch else "unbalanced parentheses", text, at)
            pos += 1
            stack.pop()
            value = Node(frame[0], frame[1])
        if result is not None:
            break

    if pos != len(tokens):
        raise ParseError("trailing input", text, tokens[pos][0])
    return result


def render(e: Expr) -> str:
    out: list[str] = []
    stack: list[Expr | str] = [e]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
        elif isinstance(item, Leaf):
            out.append("x")
        else:
            stack.extend((")", item.right, "*", item.left))
            out.append("(")
    return "".join(out)


def leaf_count(e: Expr) -> int:
    return e.size


def _check_positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"leaf count must be >= 1, got {n}")


def left_comb(n: int) -> Expr:
    """The fully normalized expression on ``n`` leaves."""
    _check_positive(n)
    e: Expr = LEAF
    for _ in range(n - 1):
        e = Node(e, LEAF)
    return e


def right_comb(n: int) -> Expr:
    _check_positive(n)
    e: Expr = LEAF
    for _ in range(n - 1):
        e = Node(LEAF, e)
    return e


def is_fully_normalized(e: Expr) -> bool:
    while isinstance(e, Node):
        if not isinstance(e.right, Leaf):
            return False
        e = e.left
    return True


def metrics(e: Expr) -> Metrics:
    """Normalization level and weight.

    A left comb on n leaves gets ``(n, 1)``. Otherwise walk down the left
    spine while the right child is a leaf; the number of steps is the level
    and the leaf count of the first internal right child is the weight.
    """
    level = 0
    node = e
    while isinstance(node, Node) and isinstance(node.right, Leaf):
        node = node.left
        level += 1
    if isinstance(node, Leaf):
        return Metrics(e.size, 1)
    return Metrics(level, node.right.size)


def catalan(k: int) -> int:
    """Catalan numbers by the convolution recurrence."""
    c = [1]
    for m in range(1, k + 1):
        c.append(sum(c[i] * c[m - 1 - i] for i in range(m)))
    return c[k]


def default_cap() -> int:
    value = os.environ.get(CAP_ENV_VAR)
    return int(value) if value else DEFAULT_CAP


@lru_cache(maxsize=None)
def _all_shapes(n: int) -> tuple[Expr, ...]:
    if n == 1:
        return (LEAF,)
    return tuple(
        Node(a, b)
        for k in range(1, n)
        for a in _all_shapes(k)
        for b in _all_shapes(n - k)
    )


def enumerate_exprs(n: int, cap: int | None = None) -> list[Expr]:
    """All expressions on ``n`` leaves, sorted by their rendering."""
    _check_positive(n)
    cap = default_cap() if cap is None else cap
    if n > cap:
        raise CapExceededError(f"n={n} exceeds the leaf-count cap {cap}")
    return sorted(_all_shapes(n), key=render)


def subtree_at(e: Expr, address: Sequence[str]) -> Expr:
    node = e
    for depth, step in enumerate(address):
        if isinstance(node, Leaf):
            raise InvalidAddressError(
                f"address {format_address(address)} steps into a leaf at depth {depth}"
            )
        if step == "L":
            node = node.left
        elif step == "R":
            node = node.right
        else:
            raise InvalidAddressError(f"bad address step {step!r}")
    return node


def replace_at(e: Expr, address: Sequence[str], new: Expr) -> Expr:
    """Return ``e`` with the subtree at ``address`` replaced by ``new``."""
    path: list[tuple[Node, str]] = []
    node = e
    for step in address:
        if isinstance(node, Leaf):
            raise InvalidAddressError(f"address {format_address(address)} steps into a leaf")
        path.append((node, step))
        node = node.left if step == "L" else node.right
    for parent, step in reversed(path):
        new = Node(new, parent.right) if step == "L" else Node(parent.left, new)
    return new


def internal_addresses(e: Expr) -> Iterator[tuple[str, ...]]:
    """Addresses of every internal node, in preorder."""
    stack: list[tuple[Expr, tuple[str, ...]]] = [(e, ())]
    while stack:
        node, addr = stack.pop()
        if isinstance(node, Node):
            yield addr
            stack.append((node.right, addr + ("R",)))
            stack.append((node.left, addr + ("L",)))


def leaf_depths(e: Expr) -> list[tuple[int, int]]:
    """``(left_steps, right_steps)`` on the root path of each leaf, in order."""
    out: list[tuple[int, int]] = []
    stack: list[tuple[Expr, int, int]] = [(e, 0, 0)]
    while stack:
        node, lsteps, rsteps = stack.pop()
        if isinstance(node, Leaf):
            out.append((lsteps, rsteps))
        else:
            stack.append((node.right, lsteps, rsteps + 1))
            stack.append((node.left, lsteps + 1, rsteps))
    return out


def right_potential(e: Expr) -> int:
    """Sum over leaves of right steps on the root path."""
    return sum(r for _, r in leaf_depths(e))
