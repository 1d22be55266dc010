"""Exhaustive and seeded-random verification suites.

Each ``check_*`` function returns a :class:`VerificationReport`. A failed
property, or an exception raised while checking a case, is recorded as a
violation; suites never raise on a mathematical failure.

All suites accept a ``moves`` table so that mutation tests can substitute a
broken realization of the generators, and a ``jobs`` count for running the
per-expression work in worker processes.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Sequence

from .expr import (
    Expr,
    enumerate_exprs,
    format_address,
    is_fully_normalized,
    left_comb,
    metrics,
    parse,
    render,
)
from .fgroup import TreePair, canonical_word, from_word, generator_pair, invert, multiply, reduce_pair, IDENTITY
from .moves import STANDARD, Letter, MoveTable, rotate_at, rotation_addresses, spine_index
from .normalize import (
    apply_word,
    canonical_iso,
    format_word,
    free_reduce,
    normalize_word,
    rewrite_positive,
)

PENTAGON_SOURCE = "(x*(x*(x*x)))"
PENTAGON_TARGET = "(x*((x*x)*x))"
PENTAGON_WORD = (Letter(0), Letter(0), Letter(1, -1), Letter(0, -1))

RECTANGLE_EXAMPLE = ("((x*(x*x))*(x*x))", 0, 1)

DEFAULTS = {
    "observations": 10,
    "lemma": 8,
    "rectangle": 9,
    "parallel": 6,
    "pentagon": 7,
    "presentation": 8,
    "group": 4,
    "paths": 7,
}


@dataclass
class VerificationReport:
    suite: str
    n_range: tuple[int, int]
    cases_checked: int = 0
    violations: list[dict] = field(default_factory=list)
    elapsed_ms: float = 0.0
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "suite": self.suite,
            "n_range": list(self.n_range),
            "cases_checked": self.cases_checked,
            "passed": self.passed,
            "violations": self.violations,
            "details": self.details,
        }
        if timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True)

    def to_text(self, timing: bool = True, max_violations: int = 20) -> str:
        lo, hi = self.n_range
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{self.suite}: {status}  range {lo}..{hi}  cases {self.cases_checked}"]
        for key in sorted(self.details):
            lines.append(f"  {key}: {self.details[key]}")
        if timing:
            lines.append(f"  elapsed_ms: {self.elapsed_ms:.1f}")
        if self.violations:
            lines.append(f"  violations: {len(self.violations)}")
            for v in self.violations[:max_violations]:
                lines.append("    " + json.dumps(v, sort_keys=True))
            if len(self.violations) > max_violations:
                lines.append(f"    ... {len(self.violations) - max_violations} more")
        return "\n".join(lines)


def _guard(fn: Callable[..., list[dict]], case_label: str, *args) -> list[dict]:
    try:
        return fn(*args)
    except Exception as exc:  # a crash while checking is a violation
        return [{"case": case_label, "error": f"{type(exc).__name__}: {exc}"}]


def _run_expr_suite(
    name: str,
    n_min: int,
    n_max: int,
    check_one: Callable[[Expr, MoveTable], tuple[list[dict], Counter]],
    moves: MoveTable,
    jobs: int,
    cap: int | None,
) -> VerificationReport:
    """Apply ``check_one`` to every expression with ``n_min..n_max`` leaves."""
    start = time.perf_counter()
    report = VerificationReport(name, (n_min, n_max))
    exprs = [e for n in range(n_min, n_max + 1) for e in enumerate_exprs(n, cap=cap)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_expr_task, [check_one] * len(exprs), exprs, [moves] * len(exprs), chunksize=64))
    else:
        results = [_expr_task(check_one, e, moves) for e in exprs]
    per_n: Counter = Counter()
    stats: Counter = Counter()
    for e, (violations, counts) in zip(exprs, results):
        per_n[e.size] += 1
        stats.update(counts)
        report.violations.extend(violations)
    report.cases_checked = len(exprs)
    report.details = {"expressions_per_n": {str(k): per_n[k] for k in sorted(per_n)}}
    report.details.update({k: stats[k] for k in sorted(stats)})
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


def _expr_task(check_one, e: Expr, moves: MoveTable) -> tuple[list[dict], Counter]:
    try:
        return check_one(e, moves)
    except Exception as exc:
        return [{"expr": render(e), "error": f"{type(exc).__name__}: {exc}"}], Counter()


# -- observations ------------------------------------------------------------

@lru_cache(maxsize=None)
def _template_pair(i: int) -> TreePair:
    return generator_pair(Letter(i))


def _generator_index(p: TreePair) -> int | None:
    """``i`` if the reduced pair ``p`` is the pair of ``a<i>`` (which has ``i + 3`` leaves)."""
    i = p.leaves - 3
    return i if i >= 0 and p == _template_pair(i) else None


def _observations_one(e: Expr, moves: MoveTable) -> tuple[list[dict], Counter]:
    bad: list[dict] = []
    stats: Counter = Counter()
    n = e.size
    level, weight = metrics(e)
    full = is_fully_normalized(e)
    text = render(e)

    def fail(prop: str, **info) -> None:
        bad.append({"property": prop, "expr": text, **info})

    if (level == n) != full:
        fail("level-n-iff-normalized", level=level)
    if (weight == 1) != full:
        fail("weight-1-iff-normalized", weight=weight)
    if n >= 2 and level == n - 1:
        fail("level-never-n-1", level=level)

    # Which rotations are instances of which generator, decided by tree-pair
    # reduction and independent of the move table.
    instances: dict[int, list[tuple[str, ...]]] = defaultdict(list)
    for addr in rotation_addresses(e):
        k = _generator_index(reduce_pair(TreePair(e, rotate_at(e, addr))))
        if k is not None:
            instances[k].append(addr)

    for i in range(n + 1):
        applicable = moves.can_apply(i, e)
        found = instances.get(i, [])
        if len(found) > 1:
            fail("A1", i=i, instances=[format_address(a) for a in found])
        if applicable != (len(found) == 1):
            fail("A1", i=i, can_apply=applicable, instances=[format_address(a) for a in found])
        if not applicable:
            continue
        stats["moves_checked"] += 1
        target = moves.alpha(i, e)
        if found and target != rotate_at(e, found[0]):
            fail("A1", i=i, target=render(target))
        if target.size != n:
            fail("leaf-count", i=i, target=render(target))
        if i > n - 3:
            fail("A2", i=i)
        if i < level:
            fail("A3", i=i, level=level)
        if weight > 1 and i > level:
            got = metrics(target)
            if got != (level, weight):
                fail("A4", i=i, before=[level, weight], after=list(got))

    if weight > 1:
        if not moves.can_apply(level, e):
            fail("A5", reason="a<level> not applicable", level=level)
        else:
            after = metrics(moves.alpha(level, e))
            if not (after.level > level or (after.level == level and after.weight < weight)):
                fail("A5", before=[level, weight], after=list(after))
    return bad, stats


def check_observations(n_max: int = DEFAULTS["observations"], moves: MoveTable = STANDARD,
                       jobs: int = 1, cap: int | None = None) -> VerificationReport:
    """Observations A1-A5 plus the level/weight bookkeeping, exhaustively."""
    return _run_expr_suite("observations", 1, n_max, _observations_one, moves, jobs, cap)


# -- lemma -------------------------------------------------------------------

def ordered_words_to_comb(e: Expr, moves: MoveTable = STANDARD) -> list[tuple[Letter, ...]]:
    """All positive words with non-decreasing indices taking ``e`` to the left comb."""
    n = e.size
    goal = left_comb(n)
    found: list[tuple[Letter, ...]] = []
    stack: list[tuple[Expr, int, tuple[Letter, ...]]] = [(e, 0, ())]
    limit = n * (n - 1) // 2 + 1
    while stack:
        cur, lowest, word = stack.pop()
        if cur == goal:
            found.append(word)
        if len(word) > limit:
            raise RuntimeError(f"path longer than the rotation potential allows from {render(e)}")
        for i in range(lowest, n):
            if moves.can_apply(i, cur):
                stack.append((moves.alpha(i, cur), i, word + (Letter(i),)))
    return sorted(found)


def _lemma_one(e: Expr, moves: MoveTable) -> tuple[list[dict], Counter]:
    words = ordered_words_to_comb(e, moves)
    expected = normalize_word(e, moves)
    bad = []
    if len(words) != 1 or words[0] != expected:
        bad.append({
            "property": "unique-ordered-word",
            "expr": render(e),
            "found": [format_word(w) for w in words],
            "normalize_word": format_word(expected),
        })
    elif apply_word(expected, e, moves) != left_comb(e.size):
        bad.append({"property": "reaches-left-comb", "expr": render(e)})
    return bad, Counter(words_found=len(words))


def check_lemma_uniqueness(n_max: int = DEFAULTS["lemma"], moves: MoveTable = STANDARD,
                           jobs: int = 1, cap: int | None = None) -> VerificationReport:
    return _run_expr_suite("lemma", 1, n_max, _lemma_one, moves, jobs, cap)


# -- rectangle ---------------------------------------------------------------

def rectangle_routes(e: Expr, i: int, j: int, moves: MoveTable = STANDARD) -> tuple[Expr, Expr]:
    """``(a<j> then a<i>, a<i> then a<j+1>)`` starting from ``e``."""
    return moves.alpha(i, moves.alpha(j, e)), moves.alpha(j + 1, moves.alpha(i, e))


def _rectangle_one(e: Expr, moves: MoveTable) -> tuple[list[dict], Counter]:
    bad: list[dict] = []
    stats: Counter = Counter()
    n = e.size
    level = metrics(e).level
    applicable = [i for i in range(n) if moves.can_apply(i, e)]
    for i, j in itertools.combinations(applicable, 2):
        stats["rectangles"] += 1
        if i == level:
            stats["rectangles_at_level"] += 1
        f1 = moves.alpha(i, e)
        g = moves.alpha(j, e)
        info = {"expr": render(e), "i": i, "j": j}
        if not moves.can_apply(j + 1, f1):
            bad.append({"property": "a<j+1> after a<i>", **info})
            continue
        if not moves.can_apply(i, g):
            bad.append({"property": "a<i> after a<j>", **info})
            continue
        top, bottom = moves.alpha(i, g), moves.alpha(j + 1, f1)
        if top != bottom:
            bad.append({"property": "commutes", **info, "via_j": render(top), "via_i": render(bottom)})
    return bad, stats


def check_rectangle(n_max: int = DEFAULTS["rectangle"], moves: MoveTable = STANDARD,
                    jobs: int = 1, cap: int | None = None) -> VerificationReport:
    """For ``i < j`` both applicable: ``a<j> a<i> == a<i> a<j+1>`` on the nose."""
    return _run_expr_suite("rectangle", 1, n_max, _rectangle_one, moves, jobs, cap)


# -- parallel paths ----------------------------------------------------------

def positive_paths(e: Expr, moves: MoveTable = STANDARD) -> dict[Expr, list[tuple[Letter, ...]]]:
    """Every positive path from ``e``, grouped by endpoint (``e`` itself via the empty path)."""
    n = e.size
    out: dict[Expr, list[tuple[Letter, ...]]] = defaultdict(list)
    stack: list[tuple[Expr, tuple[Letter, ...]]] = [(e, ())]
    limit = n * (n - 1) // 2 + 1
    while stack:
        cur, word = stack.pop()
        out[cur].append(word)
        if len(word) > limit:
            raise RuntimeError(f"path longer than the rotation potential allows from {render(e)}")
        for i in range(n):
            if moves.can_apply(i, cur):
                stack.append((moves.alpha(i, cur), word + (Letter(i),)))
    return out


def _parallel_one(e: Expr, moves: MoveTable) -> tuple[list[dict], Counter]:
    bad: list[dict] = []
    stats: Counter = Counter()
    for f, words in sorted(positive_paths(e, moves).items(), key=lambda kv: render(kv[0])):
        stats["connected_pairs"] += 1
        stats["paths"] += len(words)
        if len(words) > 1:
            stats["pairs_with_parallel_paths"] += 1
        forms = {rewrite_positive(w) for w in words}
        if len(forms) != 1:
            bad.append({
                "property": "rewrite-normal-form",
                "source": render(e),
                "target": render(f),
                "forms": sorted(format_word(w) for w in forms),
            })
        expected = reduce_pair(TreePair(e, f))
        for w in words:
            if from_word(w, moves) != expected:
                bad.append({
                    "property": "group-image",
                    "source": render(e),
                    "target": render(f),
                    "word": format_word(w),
                })
                break
    return bad, stats


def check_parallel_paths(n_max: int = DEFAULTS["parallel"], moves: MoveTable = STANDARD,
                         jobs: int = 1, cap: int | None = None) -> VerificationReport:
    """All positive paths between two expressions agree, syntactically and in F.

    Cases are ordered pairs ``(e, f)``; pairs with no positive path are
    counted but vacuous.
    """
    report = _run_expr_suite("parallel", 1, n_max, _parallel_one, moves, jobs, cap)
    per_n = report.details["expressions_per_n"]
    report.cases_checked = sum(c * c for c in per_n.values())
    return report


# -- pentagon ----------------------------------------------------------------

def _pentagon_one(e: Expr, moves: MoveTable) -> tuple[list[dict], Counter]:
    bad: list[dict] = []
    stats: Counter = Counter()
    for addr in rotation_addresses(e):
        target = rotate_at(e, addr)
        word = canonical_iso(e, target, moves)
        info = {"expr": render(e), "address": format_address(addr), "word": format_word(word)}
        i = spine_index(addr)
        if i is None:
            stats["non_spine_rotations"] += 1
            if apply_word(word, e, moves) != target:
                bad.append({"property": "reproduces-rotation", **info})
            if from_word(word, moves) != reduce_pair(TreePair(e, target)):
                bad.append({"property": "group-image", **info})
        else:
            stats["spine_rotations"] += 1
            if from_word(word, moves) != from_word([Letter(i)], moves):
                bad.append({"property": "spine-rotation-is-generator", "i": i, **info})
    return bad, stats


def check_pentagon(n_max: int = DEFAULTS["pentagon"], moves: MoveTable = STANDARD,
                   jobs: int = 1, cap: int | None = None) -> VerificationReport:
    """Express every rotation, spine or not, through the restricted moves."""
    start = time.perf_counter()
    t1, t2 = parse(PENTAGON_SOURCE), parse(PENTAGON_TARGET)

    def named() -> list[dict]:
        bad = []
        if rotate_at(t1, ("R",)) != t2:
            bad.append({"property": "pentagon-edge", "got": render(rotate_at(t1, ("R",)))})
        word = canonical_iso(t1, t2, moves)
        if word != PENTAGON_WORD:
            bad.append({"property": "pentagon-word", "got": format_word(word)})
        if apply_word(word, t1, moves) != t2:
            bad.append({"property": "pentagon-apply"})
        if from_word(PENTAGON_WORD, moves) != reduce_pair(TreePair(t1, t2)):
            bad.append({"property": "pentagon-group-image"})
        return bad

    head = _guard(named, "pentagon")
    report = _run_expr_suite("pentagon", 1, n_max, _pentagon_one, moves, jobs, cap)
    report.violations[:0] = head
    report.cases_checked = 1 + report.details.get("non_spine_rotations", 0) + report.details.get("spine_rotations", 0)
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


# -- presentation ------------------------------------------------------------

def check_presentation(i_max: int = DEFAULTS["presentation"], moves: MoveTable | None = None) -> VerificationReport:
    """Relations ``[a_j, a_i] == [a_i, a_{j+1}]`` for ``0 <= i < j <= i_max``.

    Also checks that conjugating ``a_j`` by ``a_0`` gives ``a_{j+1}``:
    applying ``A0``, then ``a_j``, then ``a0`` equals ``a_{j+1}``.
    """
    start = time.perf_counter()
    report = VerificationReport("presentation", (0, i_max))
    relations = 0
    for i in range(i_max + 1):
        for j in range(i + 1, i_max + 1):
            relations += 1

            def one(i=i, j=j):
                lhs = from_word([Letter(j), Letter(i)], moves)
                rhs = from_word([Letter(i), Letter(j + 1)], moves)
                if lhs != rhs:
                    return [{"property": "relation", "i": i, "j": j, "lhs": str(lhs), "rhs": str(rhs)}]
                return []

            report.violations.extend(_guard(one, f"relation {i},{j}"))
    conjugations = 0
    for j in range(1, i_max + 1):
        conjugations += 1

        def conj(j=j):
            lhs = from_word([Letter(0, -1), Letter(j), Letter(0)], moves)
            rhs = from_word([Letter(j + 1)], moves)
            if lhs != rhs:
                return [{"property": "conjugation", "j": j, "lhs": str(lhs), "rhs": str(rhs)}]
            return []

        report.violations.extend(_guard(conj, f"conjugation {j}"))
    report.cases_checked = relations + conjugations
    report.details = {"relations": relations, "conjugations": conjugations}
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


# -- group axioms and round trips -------------------------------------------

def all_words(max_len: int, max_index: int) -> list[tuple[Letter, ...]]:
    letters = [Letter(i, s) for i in range(max_index + 1) for s in (1, -1)]
    return [w for k in range(max_len + 1) for w in itertools.product(letters, repeat=k)]


def random_word(rng: random.Random, max_len: int, max_index: int) -> tuple[Letter, ...]:
    length = rng.randint(0, max_len)
    return tuple(Letter(rng.randint(0, max_index), rng.choice((1, -1))) for _ in range(length))


def relation_neighbours(word: Sequence[Letter]) -> list[tuple[Letter, ...]]:
    """Words obtained by one application of a defining relation, either direction.

    Covers positive pairs ``a_j a_i <-> a_i a_{j+1}`` and their inverses
    ``A_i A_j <-> A_{j+1} A_i``.
    """
    out = []
    w = tuple(word)
    for k in range(len(w) - 1):
        x, y = w[k], w[k + 1]
        if x.sign > 0 and y.sign > 0:
            if y.index < x.index:
                out.append(w[:k] + (Letter(y.index), Letter(x.index + 1)) + w[k + 2:])
            if x.index + 1 < y.index:
                out.append(w[:k] + (Letter(y.index - 1), Letter(x.index)) + w[k + 2:])
        elif x.sign < 0 and y.sign < 0:
            # inverse of a_j a_i = a_i a_{j+1} is A_i A_j = A_{j+1} A_i
            if x.index < y.index:
                out.append(w[:k] + (Letter(y.index + 1, -1), Letter(x.index, -1)) + w[k + 2:])
            if y.index + 1 < x.index:
                out.append(w[:k] + (Letter(y.index, -1), Letter(x.index - 1, -1)) + w[k + 2:])
    return out


def check_group_axioms(max_len: int = DEFAULTS["group"], max_index: int = 3, random_words: int = 1000,
                       random_max_len: int = 12, seed: int = 0, moves: MoveTable | None = None) -> VerificationReport:
    start = time.perf_counter()
    rng = random.Random(seed)
    words = all_words(max_len, max_index)
    exhaustive = len(words)
    words += [random_word(rng, random_max_len, max_index) for _ in range(random_words)]
    report = VerificationReport("group", (0, random_max_len))
    stats: Counter = Counter()

    def element(w):
        return from_word(w, moves)

    for k, w in enumerate(words):
        def one(w=w):
            bad = []
            p = element(w)
            label = format_word(w)
            if reduce_pair(p) != p:
                bad.append({"property": "from_word-reduced", "word": label})
            if multiply(IDENTITY, p) != p or multiply(p, IDENTITY) != p:
                bad.append({"property": "identity", "word": label})
            inv = invert(p)
            if multiply(p, inv) != IDENTITY or multiply(inv, p) != IDENTITY:
                bad.append({"property": "inverse", "word": label})
            canon = canonical_word(p)
            if element(canon) != p:
                bad.append({"property": "canonical-round-trip", "word": label, "canonical": format_word(canon)})
            if element(free_reduce(w)) != p:
                bad.append({"property": "free-reduction", "word": label})
            for other in relation_neighbours(w):
                stats["relation_applications"] += 1
                if canonical_word(element(other)) != canon:
                    bad.append({"property": "relation-invariance", "word": label, "rewritten": format_word(other)})
            y = words[rng.randrange(len(words))]
            z = words[rng.randrange(len(words))]
            py, pz = element(y), element(z)
            stats["triples"] += 1
            if multiply(multiply(p, py), pz) != multiply(p, multiply(py, pz)):
                bad.append({"property": "associativity", "words": [label, format_word(y), format_word(z)]})
            if multiply(p, py) != element(tuple(w) + tuple(y)):
                bad.append({"property": "homomorphism", "words": [label, format_word(y)]})
            return bad

        report.violations.extend(_guard(one, format_word(w)))
    report.cases_checked = len(words)
    report.details = {"exhaustive_words": exhaustive, "random_words": random_words, "seed": seed, **dict(sorted(stats.items()))}
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


# -- path oracle -------------------------------------------------------------

def _edges_one(e: Expr, moves: MoveTable) -> tuple[list[dict], Counter]:
    bad = []
    stats: Counter = Counter()
    for i in range(e.size):
        for letter in (Letter(i), Letter(i, -1)):
            if not moves.can_apply_letter(letter, e):
                continue
            stats["edges"] += 1
            f = moves.apply_letter(letter, e)
            if from_word([letter], moves) != reduce_pair(TreePair(e, f)):
                bad.append({"property": "edge", "expr": render(e), "letter": str(letter), "target": render(f)})
    return bad, stats


def random_path(e: Expr, rng: random.Random, length: int, moves: MoveTable = STANDARD) -> tuple[Expr, tuple[Letter, ...]]:
    """A seeded random walk along ``a<i>``/``A<i>`` edges."""
    word: list[Letter] = []
    for _ in range(length):
        options = [
            letter
            for i in range(e.size)
            for letter in (Letter(i), Letter(i, -1))
            if moves.can_apply_letter(letter, e)
        ]
        if not options:
            break
        letter = rng.choice(options)
        e = moves.apply_letter(letter, e)
        word.append(letter)
    return e, tuple(word)


def check_path_oracle(n_max: int = DEFAULTS["paths"], random_paths: int = 1000, max_path_len: int = 16,
                      seed: int = 0, moves: MoveTable = STANDARD, jobs: int = 1,
                      cap: int | None = None) -> VerificationReport:
    """Any path's letters evaluate in F to the reduced (source, target) pair."""
    start = time.perf_counter()
    report = _run_expr_suite("paths", 1, n_max, _edges_one, moves, jobs, cap)
    rng = random.Random(seed)
    pools = {n: enumerate_exprs(n, cap=cap) for n in range(1, n_max + 1)}
    for _ in range(random_paths):
        n = rng.randint(1, n_max)
        e = rng.choice(pools[n])
        length = rng.randint(0, max_path_len)

        def one(e=e, length=length):
            f, word = random_path(e, rng, length, moves)
            if from_word(word, moves) != reduce_pair(TreePair(e, f)):
                return [{"property": "random-path", "source": render(e), "word": format_word(word)}]
            return []

        report.violations.extend(_guard(one, render(e)))
    report.cases_checked = report.details.get("edges", 0) + random_paths
    report.details.update({"random_paths": random_paths, "seed": seed})
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


SUITES: dict[str, Callable[..., VerificationReport]] = {
    "observations": check_observations,
    "lemma": check_lemma_uniqueness,
    "rectangle": check_rectangle,
    "parallel": check_parallel_paths,
    "pentagon": check_pentagon,
    "presentation": check_presentation,
    "group": check_group_axioms,
    "paths": check_path_oracle,
}


def run_suite(name: str, n_max: int | None = None, seed: int = 0, jobs: int = 1,
              moves: MoveTable = STANDARD, cap: int | None = None) -> VerificationReport:
    """Dispatch by suite name with a uniform argument set."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    bound = DEFAULTS[name] if n_max is None else n_max
    if name == "presentation":
        return check_presentation(bound, None if moves is STANDARD else moves)
    if name == "group":
        return check_group_axioms(max_len=bound, seed=seed, moves=None if moves is STANDARD else moves)
    if name == "paths":
        return check_path_oracle(bound, seed=seed, moves=moves, jobs=jobs, cap=cap)
    return SUITES[name](bound, moves=moves, jobs=jobs, cap=cap)


def run_all(seed: int = 0, jobs: int = 1) -> list[VerificationReport]:
    return [run_suite(name, seed=seed, jobs=jobs) for name in SUITES]
