"""The restricted moves ``a<i>`` / ``A<i>`` and general rotations.

``a<i>`` is a left rotation ``(A*(B*C)) -> ((A*B)*C)`` at the node reached by
``i`` left steps from the root; ``A<i>`` is the matching right rotation.
Only these moves are used by normalization and the coherence checks.
:func:`rotate_at` rotates at any address and exists for the pentagon
demonstration and the full rotation graph.
"""

from __future__ import annotations

import re
from typing import NamedTuple, Sequence

from .expr import (
    LEAF,
    CoherenceError,
    Expr,
    InvalidAddressError,
    Leaf,
    Node,
    format_address,
    replace_at,
    subtree_at,
)


class InapplicableMoveError(CoherenceError, ValueError):
    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"letter {position}: {message}"
        super().__init__(message)
        self.position = position


_LETTER_RE = re.compile(r"([aA])(\d+)")


class Letter(NamedTuple):
    index: int
    sign: int = 1

    def __str__(self) -> str:
        return f"{'a' if self.sign > 0 else 'A'}{self.index}"

    def inverse(self) -> Letter:
        return Letter(self.index, -self.sign)


def parse_letter(token: str) -> Letter:
    m = _LETTER_RE.fullmatch(token.strip())
    if not m:
        raise ValueError(f"bad generator letter {token!r}; expected a<i> or A<i>")
    return Letter(int(m.group(2)), 1 if m.group(1) == "a" else -1)


def _rotate_left(v: Expr) -> Expr:
    if isinstance(v, Leaf):
        raise InapplicableMoveError("no internal node at the rotation site")
    if isinstance(v.right, Leaf):
        raise InapplicableMoveError("right child is a leaf")
    return Node(Node(v.left, v.right.left), v.right.right)


def _rotate_right(v: Expr) -> Expr:
    if isinstance(v, Leaf):
        raise InapplicableMoveError("no internal node at the rotation site")
    if isinstance(v.left, Leaf):
        raise InapplicableMoveError("left child is a leaf")
    return Node(v.left.left, Node(v.left.right, v.right))


def _spine(e: Expr, i: int) -> list[Node] | None:
    """The left-spine nodes above depth ``i``, or ``None`` if the spine is too short."""
    above: list[Node] = []
    node = e
    for _ in range(i):
        if isinstance(node, Leaf):
            return None
        above.append(node)
        node = node.left
    return above


def _rebuild(above: list[Node], new: Expr) -> Expr:
    for parent in reversed(above):
        new = Node(new, parent.right)
    return new


def _spine_node(e: Expr, i: int) -> tuple[list[Node], Expr]:
    if i < 0:
        raise ValueError(f"generator index must be >= 0, got {i}")
    above = _spine(e, i)
    if above is None:
        raise InapplicableMoveError(f"no node at left-spine depth {i}")
    v = above[-1].left if above else e
    if isinstance(v, Leaf):
        raise InapplicableMoveError(f"no node at left-spine depth {i}")
    return above, v


class MoveTable:
    """The spine-rotation realization of ``a<i>`` and ``A<i>``.

    The verification suites take a table as a parameter so that
    deliberately broken tables can be substituted in mutation tests.
    """

    name = "standard"

    def can_apply(self, i: int, e: Expr) -> bool:
        node = e
        for _ in range(i):
            if isinstance(node, Leaf):
                return False
            node = node.left
        return isinstance(node, Node) and isinstance(node.right, Node)

    def can_apply_inv(self, i: int, e: Expr) -> bool:
        node = e
        for _ in range(i):
            if isinstance(node, Leaf):
                return False
            node = node.left
        return isinstance(node, Node) and isinstance(node.left, Node)

    def alpha(self, i: int, e: Expr) -> Expr:
        above, v = _spine_node(e, i)
        return _rebuild(above, _rotate_left(v))

    def alpha_inv(self, i: int, e: Expr) -> Expr:
        above, v = _spine_node(e, i)
        return _rebuild(above, _rotate_right(v))

    def can_apply_letter(self, letter: Letter, e: Expr) -> bool:
        if letter.sign > 0:
            return self.can_apply(letter.index, e)
        return self.can_apply_inv(letter.index, e)

    def apply_letter(self, letter: Letter, e: Expr) -> Expr:
        if letter.sign > 0:
            return self.alpha(letter.index, e)
        return self.alpha_inv(letter.index, e)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name}>"


STANDARD = MoveTable()


def can_apply(i: int, e: Expr) -> bool:
    return STANDARD.can_apply(i, e)


def apply_alpha(i: int, e: Expr) -> Expr:
    return STANDARD.alpha(i, e)


def apply_alpha_inv(i: int, e: Expr) -> Expr:
    return STANDARD.alpha_inv(i, e)


def rotate_at(e: Expr, address: Sequence[str]) -> Expr:
    """Left rotation at an arbitrary address."""
    v = subtree_at(e, address)
    try:
        rotated = _rotate_left(v)
    except InapplicableMoveError as exc:
        raise InapplicableMoveError(f"cannot rotate at {format_address(address)}: {exc}") from None
    return replace_at(e, address, rotated)


def rotation_addresses(e: Expr) -> list[tuple[str, ...]]:
    """Addresses where :func:`rotate_at` applies, in preorder."""
    out = []
    stack: list[tuple[Expr, tuple[str, ...]]] = [(e, ())]
    while stack:
        node, addr = stack.pop()
        if isinstance(node, Node):
            if isinstance(node.right, Node):
                out.append(addr)
            stack.append((node.right, addr + ("R",)))
            stack.append((node.left, addr + ("L",)))
    return out


def spine_index(address: Sequence[str]) -> int | None:
    """``i`` if ``address`` is ``L^i``, else ``None``."""
    if all(step == "L" for step in address):
        return len(address)
    return None


def generator_template(i: int) -> tuple[Expr, Expr]:
    """Smallest source/target of ``a<i>``, on ``i + 3`` leaves."""
    if i < 0:
        raise ValueError(f"generator index must be >= 0, got {i}")
    source: Expr = Node(LEAF, Node(LEAF, LEAF))
    target: Expr = Node(Node(LEAF, LEAF), LEAF)
    for _ in range(i):
        source = Node(source, LEAF)
        target = Node(target, LEAF)
    return source, target


__all__ = [
    "InapplicableMoveError",
    "InvalidAddressError",
    "Letter",
    "MoveTable",
    "STANDARD",
    "apply_alpha",
    "apply_alpha_inv",
    "can_apply",
    "generator_template",
    "parse_letter",
    "rotate_at",
    "rotation_addresses",
    "spine_index",
]
