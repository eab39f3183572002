"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
"""

import random
import subprocess
import sys
import time

import pytest

from helpers import (
    all_jamo_segmentations,
    invariant_factors_by_minors,
    random_presentation,
)
from homophonic.abelianization import abelian_invariants, smith_normal_form
from homophonic.cli import main
from homophonic.datasets import builtin_data_dir, builtin_dataset, to_presentation
from homophonic.hangul import (
    SYLLABLE_BASE,
    SYLLABLE_COUNT,
    compose_syllable,
    decompose_syllable,
    parse_jamo,
)
from homophonic.presentation import (
    FreeOfRank,
    Trivial,
    Unresolved,
    eliminable,
    eliminate,
    simplify,
)

GERMAN = str(builtin_data_dir() / "german.hq")
KOREAN = str(builtin_data_dir() / "korean.hq")
TURKISH = str(builtin_data_dir() / "turkish.hq")


def certify(capsys, path):
    start = time.perf_counter()
    code = main(["certify", path])
    elapsed = time.perf_counter() - start
    return code, capsys.readouterr().out, elapsed


def test_criterion_1_german_collapses_completely(capsys):
    code, out, elapsed = certify(capsys, GERMAN)
    assert code == 0
    assert "verdict: trivial (30 generators eliminated)" in out
    assert "abelianization: free rank 0, torsion []; consistent: yes" in out
    assert elapsed < 1.0
    print(f"criterion 1 PASS: german trivial, 30/30 eliminated, {elapsed:.3f}s")


def test_criterion_2_korean_free_of_rank_two(capsys):
    code, out, elapsed = certify(capsys, KOREAN)
    assert code == 0
    assert "verdict: free of rank 2; basis: ㅏ ㅗ" in out
    assert "abelianization: free rank 2, torsion []; consistent: yes" in out
    assert elapsed < 1.0
    print(f"criterion 2 PASS: korean free of rank 2 on ㅏ ㅗ, {elapsed:.3f}s")


# Hand-derived exponent rows of the six Turkish relators, glyph: coefficient.
TURKISH_HAND_ROWS = (
    {"ğ": -1},
    {"h": 1},
    {"t": 1},
    {"a": 1, "ı": -1},
    {"e": 1, "i": -1},
    {"a": 1, "ğ": 1, "e": 1, "y": 1, "i": -1},
)


def test_criterion_3_turkish_rank_is_certified(capsys):
    dataset = builtin_dataset("turkish")
    columns = {glyph: j for j, glyph in enumerate(dataset.glyphs)}
    matrix = []
    for row in TURKISH_HAND_ROWS:
        vector = [0] * len(dataset.glyphs)
        for glyph, coefficient in row.items():
            vector[columns[glyph]] = coefficient
        matrix.append(vector)
    hand_rank = len(dataset.glyphs) - len(invariant_factors_by_minors(matrix))

    verdict, _ = simplify(to_presentation(dataset))
    invariants = abelian_invariants(to_presentation(dataset))
    assert isinstance(verdict, FreeOfRank)
    assert verdict.rank == invariants.free_rank == hand_rank == 23

    code, out, _ = certify(capsys, TURKISH)
    assert code == 0
    assert "consistent: yes" in out

    assert main(["report"]) == 0
    report = capsys.readouterr().out
    assert f"computed rank: {verdict.rank}; reference rank: 22" in report
    print(
        "criterion 3 PASS: turkish rank computed as "
        f"{verdict.rank} (reference claim 22 printed alongside)"
    )


def test_criterion_4_hangul_round_trip_exhaustive():
    start = time.perf_counter()
    for code in range(SYLLABLE_BASE, SYLLABLE_BASE + SYLLABLE_COUNT):
        syllable = chr(code)
        assert compose_syllable(decompose_syllable(syllable)) == syllable
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    print(f"criterion 4 PASS: {SYLLABLE_COUNT} syllables round-trip, {elapsed:.3f}s")


def test_criterion_5_ordered_decomposition_is_unique():
    rng = random.Random(5)
    runs = 1000
    for _ in range(runs):
        syllables = [
            decompose_syllable(chr(SYLLABLE_BASE + rng.randrange(SYLLABLE_COUNT)))
            for _ in range(rng.randint(1, 10))
        ]
        flat = [jamo for d in syllables for jamo in d.jamo()]
        assert parse_jamo(flat) == syllables
        assert all_jamo_segmentations(flat) == [[d.jamo() for d in syllables]]
    print(f"criterion 5 PASS: {runs} random sequences parse uniquely")


def test_criterion_6_smith_form_matches_minor_gcds():
    rng = random.Random(6)
    runs = 1000
    for _ in range(runs):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        matrix = [[rng.randint(-5, 5) for _ in range(cols)] for _ in range(rows)]
        assert smith_normal_form(matrix) == invariant_factors_by_minors(matrix)
    print(f"criterion 6 PASS: {runs} random matrices agree with the minors oracle")


def test_criterion_7_elimination_preserves_abelian_invariants():
    rng = random.Random(7)
    runs = 500
    checked = 0
    for _ in range(runs):
        p = random_presentation(rng)
        before = abelian_invariants(p)
        for index, g in eliminable(p):
            after = abelian_invariants(eliminate(p, g, index)[0])
            assert after.free_rank == before.free_rank
            assert after.torsion == before.torsion
            checked += 1
    print(
        f"criterion 7 PASS: {runs} presentations, "
        f"{checked} single eliminations left invariants unchanged"
    )


def _random_picker(rng):
    def pick(p, candidates):
        return candidates[rng.randrange(len(candidates))]

    return pick


@pytest.mark.parametrize("name", ("german", "korean", "turkish"))
def test_criterion_8_any_elimination_order_agrees(name):
    p = to_presentation(builtin_dataset(name))
    reference, _ = simplify(p)
    for seed in range(100):
        verdict, _ = simplify(p, pick=_random_picker(random.Random(seed)))
        assert not isinstance(verdict, Unresolved)
        assert type(verdict) is type(reference)
        if isinstance(reference, FreeOfRank):
            assert verdict.rank == reference.rank
    kind = (
        "trivial"
        if isinstance(reference, Trivial)
        else f"free of rank {reference.rank}"
    )
    print(f"criterion 8 PASS: {name}, 100 random orders all reach {kind}")


def test_criterion_9_machine_report_is_byte_identical():
    command = [sys.executable, "-m", "homophonic", "report", "--machine", "--ascii"]
    first = subprocess.run(command, capture_output=True, check=True)
    second = subprocess.run(command, capture_output=True, check=True)
    assert first.stdout == second.stdout
    assert first.stdout
    print(
        "criterion 9 PASS: two machine reports identical "
        f"({len(first.stdout)} bytes)"
    )
