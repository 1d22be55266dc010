"""Thompson's group F as reduced tree pairs.

A pair ``(domain, range)`` is read as the arrow ``domain -> range`` and
products are diagrammatic: ``multiply(p, q)`` is "p, then q", so
``(T1, T2) * (T2, T3) == (T1, T3)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .expr import LEAF, Expr, Leaf, Node, parse, render
from .moves import Letter, MoveTable, generator_template
from .normalize import LeafCountMismatchError, canonical_iso, free_reduce


@dataclass(frozen=True)
class TreePair:
    domain: Expr
    range: Expr

    def __post_init__(self):
        if self.domain.size != self.range.size:
            raise LeafCountMismatchError(
                f"tree pair leaf counts differ: {self.domain.size} vs {self.range.size}"
            )

    def __str__(self) -> str:
        return f"{render(self.domain)} | {render(self.range)}"

    def __mul__(self, other: TreePair) -> TreePair:
        return multiply(self, other)

    @property
    def leaves(self) -> int:
        return self.domain.size


def parse_pair(text: str) -> TreePair:
    left, sep, right = text.partition("|")
    if not sep:
        raise ValueError(f"tree pair must look like 'D | R': {text!r}")
    return TreePair(parse(left), parse(right))


IDENTITY = TreePair(LEAF, LEAF)


def identity() -> TreePair:
    return IDENTITY


# Leaf indices below are 0-based, counted left to right.

def carets(t: Expr) -> set[int]:
    """Left-leaf indices ``j`` such that leaves ``j`` and ``j+1`` are siblings."""
    out: set[int] = set()

    def walk(node: Expr, offset: int) -> None:
        if isinstance(node, Leaf):
            return
        if isinstance(node.left, Leaf) and isinstance(node.right, Leaf):
            out.add(offset)
            return
        walk(node.left, offset)
        walk(node.right, offset + node.left.size)

    walk(t, 0)
    return out


def collapse_caret(t: Expr, j: int) -> Expr:
    """Replace the caret over leaves ``j, j+1`` by a single leaf."""
    if isinstance(t, Leaf):
        raise ValueError(f"no caret at leaf {j}")
    if j == 0 and t.size == 2:
        return LEAF
    if j < t.left.size:
        return Node(collapse_caret(t.left, j), t.right)
    return Node(t.left, collapse_caret(t.right, j - t.left.size))


def add_caret(t: Expr, j: int) -> Expr:
    """Replace leaf ``j`` by a two-leaf node."""
    if isinstance(t, Leaf):
        if j != 0:
            raise IndexError("leaf index out of range")
        return Node(LEAF, LEAF)
    if j < t.left.size:
        return Node(add_caret(t.left, j), t.right)
    return Node(t.left, add_caret(t.right, j - t.left.size))


def graft(t: Expr, subtrees: Sequence[Expr]) -> Expr:
    """Substitute ``subtrees[k]`` for the k-th leaf of ``t``."""
    if len(subtrees) != t.size:
        raise ValueError("need one subtree per leaf")
    it = iter(subtrees)

    def walk(node: Expr) -> Expr:
        if isinstance(node, Leaf):
            return next(it)
        left = walk(node.left)
        return Node(left, walk(node.right))

    return walk(t)


def leaf_extensions(prefix: Expr, big: Expr) -> list[Expr]:
    """Subtrees of ``big`` hanging where ``prefix`` has leaves.

    ``prefix`` must be a caret-prefix of ``big``.
    """
    out: list[Expr] = []

    def walk(p: Expr, b: Expr) -> None:
        if isinstance(p, Leaf):
            out.append(b)
        elif isinstance(b, Leaf):
            raise ValueError(f"{render(prefix)} is not a prefix of {render(big)}")
        else:
            walk(p.left, b.left)
            walk(p.right, b.right)

    walk(prefix, big)
    return out


def common_refinement(a: Expr, b: Expr) -> Expr:
    """Smallest tree having both ``a`` and ``b`` as caret-prefixes."""
    if isinstance(a, Leaf):
        return b
    if isinstance(b, Leaf):
        return a
    return Node(common_refinement(a.left, b.left), common_refinement(a.right, b.right))


def expand(p: TreePair, new_range: Expr) -> TreePair:
    """Equivalent pair whose range is ``new_range`` (an expansion of ``p.range``)."""
    return TreePair(graft(p.domain, leaf_extensions(p.range, new_range)), new_range)


def expand_domain(p: TreePair, new_domain: Expr) -> TreePair:
    return TreePair(new_domain, graft(p.range, leaf_extensions(p.domain, new_domain)))


def reduce_pair(p: TreePair) -> TreePair:
    """Cancel common carets, lowest leaf index first, until none remain."""
    d, r = p.domain, p.range
    while True:
        common = carets(d) & carets(r)
        if not common:
            return TreePair(d, r)
        j = min(common)
        d, r = collapse_caret(d, j), collapse_caret(r, j)


def multiply(p: TreePair, q: TreePair) -> TreePair:
    m = common_refinement(p.range, q.domain)
    return reduce_pair(TreePair(expand(p, m).domain, expand_domain(q, m).range))


def invert(p: TreePair) -> TreePair:
    return reduce_pair(TreePair(p.range, p.domain))


def equal(p: TreePair, q: TreePair) -> bool:
    return reduce_pair(p) == reduce_pair(q)


def generator_pair(letter: Letter, moves: MoveTable | None = None) -> TreePair:
    """Reduced pair of ``a<i>`` (or its inverse).

    With ``moves`` given, the target is produced by that table from the
    template source instead of being taken from the template.
    """
    source, target = generator_template(letter.index)
    if moves is not None:
        target = moves.alpha(letter.index, source)
    if letter.sign > 0:
        return TreePair(source, target)
    return TreePair(target, source)


def from_word(word: Iterable[Letter], moves: MoveTable | None = None) -> TreePair:
    result = IDENTITY
    for letter in word:
        result = multiply(result, generator_pair(letter, moves))
    return result


def canonical_word(p: TreePair) -> tuple[Letter, ...]:
    """Normalize the domain, then undo the range's normalization.

    The two halves are joined and freely reduced; the result depends only
    on the group element.
    """
    p = reduce_pair(p)
    return free_reduce(canonical_iso(p.domain, p.range))
