"""Deliberately broken move tables for mutation tests."""

from assoc_coherence.expr import Leaf, Node, replace_at, subtree_at
from assoc_coherence.moves import InapplicableMoveError, MoveTable, rotate_at


class ShiftedSpineMoves(MoveTable):
    """``a<i>`` for ``i >= 1`` acts one node too deep on the left spine."""

    name = "shifted-spine"

    def _depth(self, i):
        return i + 1 if i >= 1 else i

    def can_apply(self, i, e):
        return super().can_apply(self._depth(i), e)

    def can_apply_inv(self, i, e):
        return super().can_apply_inv(self._depth(i), e)

    def alpha(self, i, e):
        return super().alpha(self._depth(i), e)

    def alpha_inv(self, i, e):
        return super().alpha_inv(self._depth(i), e)


class RightSpineMoves(MoveTable):
    """``a<i>`` rotates at ``R^i`` instead of ``L^i``."""

    name = "right-spine"

    def _node(self, i, e):
        node = e
        for _ in range(i):
            if isinstance(node, Leaf):
                return None
            node = node.right
        return node

    def can_apply(self, i, e):
        v = self._node(i, e)
        return v is not None and not isinstance(v, Leaf) and not isinstance(v.right, Leaf)

    def can_apply_inv(self, i, e):
        v = self._node(i, e)
        return v is not None and not isinstance(v, Leaf) and not isinstance(v.left, Leaf)

    def alpha(self, i, e):
        return rotate_at(e, ("R",) * i)

    def alpha_inv(self, i, e):
        v = subtree_at(e, ("R",) * i)
        if isinstance(v, Leaf) or isinstance(v.left, Leaf):
            raise InapplicableMoveError("left child is a leaf")
        return replace_at(e, ("R",) * i, Node(v.left.left, Node(v.left.right, v.right)))


MUTANTS = [ShiftedSpineMoves(), RightSpineMoves()]
