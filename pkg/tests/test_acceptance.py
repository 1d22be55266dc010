"""Exit criteria, one test per criterion, at the bounds they state.

A summary line per criterion is printed at the end of the pytest run.
"""

import time

from assoc_coherence.expr import enumerate_exprs, parse, render
from assoc_coherence.fgroup import TreePair, from_word, reduce_pair
from assoc_coherence.graph import rotation_graph
from assoc_coherence.moves import Letter, apply_alpha, generator_template
from assoc_coherence.normalize import canonical_iso, format_word
from assoc_coherence.verify import (
    PENTAGON_WORD,
    RECTANGLE_EXAMPLE,
    check_group_axioms,
    check_lemma_uniqueness,
    check_observations,
    check_parallel_paths,
    check_path_oracle,
    check_pentagon,
    check_presentation,
    check_rectangle,
    rectangle_routes,
)
from oracles import catalan_by_dyck


def _catalan_recurrence(k: int) -> int:
    c = [1]
    for m in range(1, k + 1):
        c.append(sum(c[i] * c[m - 1 - i] for i in range(m)))
    return c[k]


def test_01_observations(criterion):
    report = check_observations(10)
    start = time.perf_counter()
    eleven = check_observations(11)
    seconds = time.perf_counter() - start
    criterion(
        "#1 observations A1-A5, n=1..10 (and n=11 < 60 s)",
        report.passed and eleven.passed and seconds < 60
        and eleven.details["expressions_per_n"]["11"] == 16796,
        f"cases={report.cases_checked} violations={len(report.violations)}; n<=11 in {seconds:.1f}s",
    )


def test_02_lemma_uniqueness(criterion):
    start = time.perf_counter()
    report = check_lemma_uniqueness(8)
    seconds = time.perf_counter() - start
    per_n = report.details["expressions_per_n"]
    criterion(
        "#2 lemma uniqueness, n=1..8 (< 30 s)",
        report.passed and per_n["8"] == 429 and report.details["words_found"] == report.cases_checked
        and seconds < 30,
        f"cases={report.cases_checked} in {seconds:.1f}s",
    )


def test_03_rectangle(criterion):
    report = check_rectangle(9)
    text, i, j = RECTANGLE_EXAMPLE
    via_j, via_i = rectangle_routes(parse(text), i, j)
    named = render(via_j) == render(via_i) == "((((x*x)*x)*x)*x)"
    criterion(
        "#3 rectangle, n=1..9 + named five-leaf instance",
        report.passed and named,
        f"rectangles={report.details['rectangles']} named={named}",
    )


def test_04_parallel_paths(criterion):
    report = check_parallel_paths(6)
    criterion(
        "#4 parallel positive paths, n=1..6",
        report.passed and report.details["pairs_with_parallel_paths"] > 0,
        f"pairs={report.cases_checked} paths={report.details['paths']} "
        f"parallel={report.details['pairs_with_parallel_paths']}",
    )


def test_05_displayed_objects(criterion):
    checks = {
        "alpha0": render(apply_alpha(0, parse("(x*(x*x))"))) == "((x*x)*x)",
        "alpha_prime": render(apply_alpha(0, parse("((x*x)*(x*x))"))) == "(((x*x)*x)*x)",
        "alpha_double_prime": render(apply_alpha(0, parse("(x*((x*x)*x))"))) == "((x*(x*x))*x)",
        "alpha1": render(apply_alpha(1, parse("((x*(x*x))*x)"))) == "(((x*x)*x)*x)",
        "template0": tuple(map(render, generator_template(0))) == ("(x*(x*x))", "((x*x)*x)"),
        "pair0": str(from_word([Letter(0)])) == "(x*(x*x)) | ((x*x)*x)",
    }
    failed = [k for k, ok in checks.items() if not ok]
    criterion("#5 displayed objects reproduced", not failed, f"failed={failed}")


def test_06_presentation(criterion):
    report = check_presentation(8)
    criterion(
        "#6 presentation, 0<=i<j<=8 + conjugation j=1..8",
        report.passed and report.details == {"relations": 36, "conjugations": 8},
        f"cases={report.cases_checked}",
    )


def test_07_group_axioms(criterion):
    report = check_group_axioms(max_len=4, max_index=3, random_words=1000, random_max_len=12, seed=0)
    criterion(
        "#7 group axioms and round trips",
        report.passed and report.details["exhaustive_words"] == 4681,
        f"words={report.cases_checked} relation_applications={report.details['relation_applications']}",
    )


def test_08_path_oracle(criterion):
    report = check_path_oracle(7, random_paths=1000, seed=0)
    criterion(
        "#8 path oracle, n<=7, all edges + 1000 random paths",
        report.passed,
        f"edges={report.details['edges']} random={report.details['random_paths']}",
    )


def test_09_pentagon(criterion):
    t1, t2 = parse("(x*(x*(x*x)))"), parse("(x*((x*x)*x))")
    word = canonical_iso(t1, t2)
    report = check_pentagon(7)
    criterion(
        "#9 pentagon word + all non-spine rotations, n<=7",
        word == PENTAGON_WORD and format_word(word) == "a0 a0 A1 A0"
        and from_word(word) == reduce_pair(TreePair(t1, t2)) and report.passed,
        f"word={format_word(word)} rotations={report.details['non_spine_rotations']}",
    )


def test_10_structural_counts(criterion):
    counts_ok = all(
        len(enumerate_exprs(n)) == _catalan_recurrence(n - 1) == catalan_by_dyck(n - 1)
        for n in range(1, 11)
    )
    _, restricted = rotation_graph(4)
    _, full = rotation_graph(4, full=True)
    criterion(
        "#10 Catalan counts n<=10; n=4 graph 4 edges restricted / 5 full",
        counts_ok and len(restricted) == 4 and len(full) == 5,
        f"restricted={len(restricted)} full={len(full)}",
    )
