"""Finitely presented groups: relators, greedy generator elimination, traces.

A presentation is simplified by repeatedly eliminating a generator that
occurs exactly once in some relator: the relator is solved for that
generator and the solution substituted into every other relator.  The
whole history is recorded as a replayable trace.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .words import (
    Alphabet,
    Generator,
    Word,
    concat,
    cyclic_reduce,
    display,
    invert,
    occurrences,
    substitute,
)

DEFAULT_MAX_ROUNDS = 10_000
DEFAULT_MAX_RELATOR_LEN = 10_000


class NotEliminableError(ValueError):
    """The chosen generator does not occur exactly once in the chosen relator."""


class TraceInvalidError(ValueError):
    """A recorded elimination step fails its precondition on replay."""

    def __init__(self, step_index: int, message: str):
        self.step_index = step_index
        super().__init__(f"step {step_index}: {message}")


@dataclass(frozen=True)
class Provenance:
    """Where a relator came from: the witnessing record of its dataset."""

    kind: str = "raw-identity"  # "word-pair" or "raw-identity"
    lhs: str = ""
    rhs: str = ""
    gloss: str = ""
    ref: str = ""

    def witness(self) -> str:
        pair = f"{self.lhs} --- {self.rhs}"
        return f"{pair} ({self.gloss})" if self.gloss else pair


@dataclass(frozen=True)
class Relation:
    """An equation lhs = rhs between two words over one alphabet."""

    lhs: Word
    rhs: Word
    provenance: Provenance = Provenance()


def relator_from_relation(rel: Relation) -> Word:
    """Turn lhs = rhs into the cyclically reduced relator of lhs * rhs^-1.

    The result may be empty when the relation is vacuous.
    """
    core, _ = cyclic_reduce(concat(rel.lhs, invert(rel.rhs)))
    return core


@dataclass(frozen=True)
class Presentation:
    """Alphabet, cyclically reduced relators, and the still-live generators.

    ``origins`` runs parallel to ``relators`` and survives substitution, so
    a trace can always name the dataset record behind each elimination.
    """

    alphabet: Alphabet
    relators: tuple[Word, ...]
    origins: tuple[Provenance, ...]
    live: frozenset[int]

    def __post_init__(self):
        if len(self.relators) != len(self.origins):
            raise ValueError("origins must align with relators")
        for w in self.relators:
            if not w:
                raise ValueError("empty relator")
            if len(w) >= 2 and w.letters[0] == w.letters[-1].inverse():
                raise ValueError(f"relator {display(w)} is not cyclically reduced")
            for sl in w.letters:
                if sl.gen.id not in self.live:
                    raise ValueError(
                        f"relator {display(w)} uses eliminated generator {sl.gen.glyph!r}"
                    )

    @classmethod
    def from_relations(
        cls, alphabet: Alphabet, relations: Sequence[Relation]
    ) -> "Presentation":
        """Build a presentation on the full alphabet, dropping vacuous relations."""
        relators: list[Word] = []
        origins: list[Provenance] = []
        for rel in relations:
            core = relator_from_relation(rel)
            if core:
                relators.append(core)
                origins.append(rel.provenance)
        return cls(alphabet, tuple(relators), tuple(origins), frozenset(range(len(alphabet))))

    @classmethod
    def from_relators(
        cls, alphabet: Alphabet, relators: Sequence[Word]
    ) -> "Presentation":
        """Build a presentation from bare relators (for tests and hand input)."""
        kept: list[Word] = []
        origins: list[Provenance] = []
        for w in relators:
            core, _ = cyclic_reduce(w)
            if core:
                kept.append(core)
                origins.append(Provenance(lhs=display(core), rhs="1"))
        return cls(alphabet, tuple(kept), tuple(origins), frozenset(range(len(alphabet))))

    def live_generators(self) -> tuple[Generator, ...]:
        return tuple(self.alphabet[i] for i in sorted(self.live))


@dataclass(frozen=True)
class Trivial:
    """Every generator was eliminated and no relator remains."""


@dataclass(frozen=True)
class FreeOfRank:
    """No relator remains; the live generators form a free basis."""

    rank: int
    basis: tuple[Generator, ...]


@dataclass(frozen=True)
class Unresolved:
    """Simplification stopped with relators left over."""

    remaining: Presentation
    reason: str = ""


Verdict = Trivial | FreeOfRank | Unresolved


@dataclass(frozen=True)
class EliminationStep:
    generator: Generator
    solution: Word
    relator_index: int
    provenance: Provenance


@dataclass(frozen=True)
class EliminationTrace:
    steps: tuple[EliminationStep, ...]
    final: Presentation


def _canonical_relator_key(w: Word) -> tuple:
    """Least rotation of the relator or its inverse; dedup key."""
    seq = [(sl.gen.id, sl.sign) for sl in w.letters]
    inv = [(g, -s) for g, s in reversed(seq)]
    n = len(seq)
    return min(
        tuple(variant[k:] + variant[:k]) for variant in (seq, inv) for k in range(n)
    )


def normalize(p: Presentation) -> Presentation:
    """Drop empty relators and duplicates up to rotation and inversion."""
    seen: set[tuple] = set()
    relators: list[Word] = []
    origins: list[Provenance] = []
    for w, origin in zip(p.relators, p.origins):
        core, _ = cyclic_reduce(w)
        if not core:
            continue
        key = _canonical_relator_key(core)
        if key in seen:
            continue
        seen.add(key)
        relators.append(core)
        origins.append(origin)
    return Presentation(p.alphabet, tuple(relators), tuple(origins), p.live)


def solve_for(relator: Word, g: Generator) -> Word:
    """Solution word for ``g`` from a relator containing it exactly once.

    The relator is rotated to start with the single occurrence of ``g``;
    what remains, inverted as the sign demands, equals ``g``.
    """
    if occurrences(relator, g) != 1:
        raise NotEliminableError(
            f"{g.glyph!r} occurs {occurrences(relator, g)} times in {display(relator)}"
        )
    k = next(i for i, sl in enumerate(relator.letters) if sl.gen == g)
    sign = relator.letters[k].sign
    rest = Word(relator.letters[k + 1 :] + relator.letters[:k])
    return invert(rest) if sign > 0 else rest


def eliminate(
    p: Presentation, g: Generator, relator_index: int
) -> tuple[Presentation, EliminationStep]:
    """Eliminate ``g`` using the relator at ``relator_index``.

    The relator must contain ``g`` exactly once.  The solution is
    substituted into all other relators, which are re-reduced; empty
    relators are dropped and ``g`` leaves the live set.
    """
    if not 0 <= relator_index < len(p.relators):
        raise NotEliminableError(f"no relator at index {relator_index}")
    solution = solve_for(p.relators[relator_index], g)
    relators: list[Word] = []
    origins: list[Provenance] = []
    for j, (w, origin) in enumerate(zip(p.relators, p.origins)):
        if j == relator_index:
            continue
        core, _ = cyclic_reduce(substitute(w, g, solution))
        if core:
            relators.append(core)
            origins.append(origin)
    step = EliminationStep(g, solution, relator_index, p.origins[relator_index])
    reduced = Presentation(
        p.alphabet, tuple(relators), tuple(origins), p.live - {g.id}
    )
    return reduced, step


def eliminable(p: Presentation) -> list[tuple[int, Generator]]:
    """All (relator index, generator) pairs where the generator occurs once."""
    out: list[tuple[int, Generator]] = []
    for i, w in enumerate(p.relators):
        counts: dict[Generator, int] = {}
        for sl in w.letters:
            counts[sl.gen] = counts.get(sl.gen, 0) + 1
        for g in sorted(counts, key=lambda g: g.id):
            if counts[g] == 1:
                out.append((i, g))
    return out


def _greedy_pick(p: Presentation, candidates: list[tuple[int, Generator]]):
    """Shortest relator wins; ties break on relator index, then on the
    largest generator id so that earlier-alphabet letters survive."""
    best = min({i for i, _ in candidates}, key=lambda i: (len(p.relators[i]), i))
    gens = [g for i, g in candidates if i == best]
    return best, max(gens, key=lambda g: g.id)


def _verdict_of(p: Presentation, reason: str = "") -> Verdict:
    if p.relators:
        return Unresolved(p, reason or "no relator with a single-occurrence generator")
    if p.live:
        return FreeOfRank(len(p.live), p.live_generators())
    return Trivial()


def simplify(
    p: Presentation,
    max_rounds: int = DEFAULT_MAX_ROUNDS,
    max_relator_len: int = DEFAULT_MAX_RELATOR_LEN,
    pick: Callable[[Presentation, list[tuple[int, Generator]]], tuple[int, Generator]]
    | None = None,
) -> tuple[Verdict, EliminationTrace]:
    """Run the elimination loop to a verdict and a replayable trace.

    Each round normalizes the presentation, picks an eliminable
    (relator, generator) pair, and eliminates.  Hitting either limit
    yields an Unresolved verdict rather than an error.
    """
    chooser = pick or _greedy_pick
    p = normalize(p)
    steps: list[EliminationStep] = []
    reason = ""
    rounds = 0
    while True:
        candidates = eliminable(p)
        if not candidates:
            break
        if rounds >= max_rounds:
            reason = "round limit reached"
            break
        index, g = chooser(p, candidates)
        p, step = eliminate(p, g, index)
        steps.append(step)
        rounds += 1
        if any(len(w) > max_relator_len for w in p.relators):
            reason = "relator length limit exceeded"
            break
        p = normalize(p)
    trace = EliminationTrace(tuple(steps), p)
    return _verdict_of(p, reason), trace


def replay(trace: EliminationTrace, p: Presentation) -> Verdict:
    """Re-apply a recorded trace step by step, checking each precondition.

    Raises TraceInvalidError (with the failing step index) when a step no
    longer matches the presentation it claims to act on.
    """
    p = normalize(p)
    for i, step in enumerate(trace.steps):
        if not 0 <= step.relator_index < len(p.relators):
            raise TraceInvalidError(i, f"relator index {step.relator_index} out of range")
        relator = p.relators[step.relator_index]
        if occurrences(relator, step.generator) != 1:
            raise TraceInvalidError(
                i, f"{step.generator.glyph!r} does not occur exactly once"
            )
        p, applied = eliminate(p, step.generator, step.relator_index)
        if applied.solution != step.solution:
            raise TraceInvalidError(i, "recorded solution does not match")
        p = normalize(p)
    return _verdict_of(p)


def describe_verdict(verdict: Verdict, eliminated: int | None = None) -> str:
    if isinstance(verdict, Trivial):
        if eliminated is None:
            return "verdict: trivial"
        return f"verdict: trivial ({eliminated} generators eliminated)"
    if isinstance(verdict, FreeOfRank):
        basis = " ".join(g.glyph for g in verdict.basis)
        return f"verdict: free of rank {verdict.rank}; basis: {basis}"
    left = verdict.remaining
    return (
        f"verdict: unresolved ({len(left.live)} generators live, "
        f"{len(left.relators)} relators remain)"
    )


def render_trace(trace: EliminationTrace, verdict: Verdict) -> str:
    """Two-column elimination table followed by the verdict line."""
    lines = [
        f"{step.generator.glyph} | {step.provenance.witness()}" for step in trace.steps
    ]
    lines.append(describe_verdict(verdict, eliminated=len(trace.steps)))
    return "\n".join(lines)


def machine_trace(trace: EliminationTrace, ascii_inverse: bool = True) -> list[str]:
    """Tab-separated step lines: index, glyph, solution, relator index, ref."""
    return [
        "\t".join(
            (
                str(i),
                step.generator.glyph,
                display(step.solution, ascii_inverse),
                str(step.relator_index),
                step.provenance.ref,
            )
        )
        for i, step in enumerate(trace.steps)
    ]
