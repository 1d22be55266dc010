"""Words in the generators, normalization and canonical isomorphisms.

A word is a tuple of :class:`~assoc_coherence.moves.Letter` in application
order: the first letter is applied first. Writing the same isomorphism as a
right-to-left composition string reverses the sequence; use
:func:`to_composition_order` for that view.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .expr import CoherenceError, Expr, is_fully_normalized, leaf_count, metrics
from .moves import STANDARD, InapplicableMoveError, Letter, MoveTable, parse_letter

Word = tuple  # tuple[Letter, ...]


class LeafCountMismatchError(CoherenceError, ValueError):
    pass


def parse_word(text: str) -> tuple[Letter, ...]:
    text = text.strip()
    if text in ("", "-"):
        return ()
    return tuple(parse_letter(tok) for tok in text.split())


def format_word(word: Iterable[Letter]) -> str:
    return " ".join(str(letter) for letter in word) or "-"


def to_composition_order(word: Sequence[Letter]) -> tuple[Letter, ...]:
    return tuple(reversed(word))


def inverse_word(word: Sequence[Letter]) -> tuple[Letter, ...]:
    return tuple(letter.inverse() for letter in reversed(word))


def apply_word(word: Sequence[Letter], e: Expr, moves: MoveTable = STANDARD) -> Expr:
    for pos, letter in enumerate(word, start=1):
        try:
            e = moves.apply_letter(letter, e)
        except InapplicableMoveError as exc:
            raise InapplicableMoveError(f"{letter}: {exc}", position=pos) from None
    return e


def normalize_word(e: Expr, moves: MoveTable = STANDARD) -> tuple[Letter, ...]:
    """The ordered positive word carrying ``e`` to the left comb.

    At each step the move ``a<k>`` with ``k`` the current normalization
    level is applied. Indices never decrease along the result.
    """
    out: list[Letter] = []
    # Each move lowers the right potential, so this bounds the loop even for a
    # faulty move table.
    budget = e.size * e.size
    while not is_fully_normalized(e):
        if len(out) > budget:
            raise RuntimeError("normalization did not terminate")
        k = metrics(e).level
        out.append(Letter(k))
        e = moves.alpha(k, e)
    return tuple(out)


def is_canonical_word(word: Sequence[Letter]) -> bool:
    if any(letter.sign < 0 for letter in word):
        return False
    return all(a.index <= b.index for a, b in zip(word, word[1:]))


def canonical_iso(e: Expr, f: Expr, moves: MoveTable = STANDARD) -> tuple[Letter, ...]:
    """Word from ``e`` to ``f`` routed through the left comb.

    Not freely reduced: ``canonical_iso(e, e)`` is ``p`` followed by its inverse.
    """
    if leaf_count(e) != leaf_count(f):
        raise LeafCountMismatchError(
            f"leaf counts differ: {leaf_count(e)} vs {leaf_count(f)}"
        )
    return normalize_word(e, moves) + inverse_word(normalize_word(f, moves))


def free_reduce(word: Sequence[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for letter in word:
        if stack and stack[-1] == letter.inverse():
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def rewrite_positive(word: Sequence[Letter]) -> tuple[Letter, ...]:
    """Sort a positive word with ``a<j> a<i> -> a<i> a<j+1>`` (i < j).

    The leftmost out-of-order pair is rewritten first.
    """
    if any(letter.sign < 0 for letter in word):
        raise ValueError("rewrite_positive needs a positive word")
    w = [letter.index for letter in word]
    k = 0
    while k < len(w) - 1:
        j, i = w[k], w[k + 1]
        if i < j:
            w[k], w[k + 1] = i, j + 1
            k = max(k - 1, 0)
        else:
            k += 1
    return tuple(Letter(i) for i in w)
