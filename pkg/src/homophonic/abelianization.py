"""Exact integer certificates for verdicts.

Abelianizing a presentation turns each relator into a row of signed
exponent sums.  The Smith normal form of that matrix gives invariant
factors that any trivial or free verdict must agree with.  Everything
here is exact integer arithmetic; Python integers never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .presentation import FreeOfRank, Presentation, Trivial, Unresolved, Verdict


@dataclass(frozen=True)
class ExponentMatrix:
    """Rows are relators, columns the live generators in id order."""

    generator_ids: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class AbelianInvariants:
    free_rank: int
    torsion: tuple[int, ...]


def exponent_matrix(p: Presentation) -> ExponentMatrix:
    ids = tuple(sorted(p.live))
    column = {gid: j for j, gid in enumerate(ids)}
    rows = []
    for w in p.relators:
        row = [0] * len(ids)
        for sl in w.letters:
            row[column[sl.gen.id]] += sl.sign
        rows.append(tuple(row))
    return ExponentMatrix(ids, tuple(rows))


def _find_pivot(rows: list[list[int]], start: int) -> tuple[int, int] | None:
    """Smallest-magnitude nonzero entry in the trailing submatrix,
    ties broken by row-major position."""
    best: tuple[int, int] | None = None
    best_val = 0
    for i in range(start, len(rows)):
        for j in range(start, len(rows[i])):
            v = abs(rows[i][j])
            if v and (best is None or v < best_val):
                best, best_val = (i, j), v
                if v == 1:
                    return best
    return best


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors d1 | d2 | ... of an integer matrix.

    Computed by exact row/column reduction around a smallest-magnitude
    pivot; the zero matrix (and the empty one) gives an empty list.
    """
    rows = [[int(x) for x in r] for r in matrix]
    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    if any(len(r) != nc for r in rows):
        raise ValueError("ragged matrix")
    factors: list[int] = []
    t = 0
    while t < nr and t < nc:
        pos = _find_pivot(rows, t)
        if pos is None:
            break
        while True:
            i0, j0 = pos
            rows[t], rows[i0] = rows[i0], rows[t]
            if j0 != t:
                for row in rows:
                    row[t], row[j0] = row[j0], row[t]
            if rows[t][t] < 0:
                rows[t] = [-x for x in rows[t]]
            d = rows[t][t]
            dirty = False
            for i in range(t + 1, nr):
                q = rows[i][t] // d
                if q:
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[t])]
                if rows[i][t]:
                    dirty = True
            for j in range(t + 1, nc):
                q = rows[t][j] // d
                if q:
                    for i in range(nr):
                        rows[i][j] -= q * rows[i][t]
                if rows[t][j]:
                    dirty = True
            if dirty:
                pos = _find_pivot(rows, t)
                continue
            offender = next(
                (
                    i
                    for i in range(t + 1, nr)
                    if any(rows[i][j] % d for j in range(t + 1, nc))
                ),
                None,
            )
            if offender is None:
                break
            # Pull the offending row up so the next sweep shrinks the pivot.
            rows[t] = [a + b for a, b in zip(rows[t], rows[offender])]
            pos = (t, t)
        factors.append(rows[t][t])
        t += 1
    return factors


def abelian_invariants(p: Presentation) -> AbelianInvariants:
    factors = smith_normal_form(exponent_matrix(p).rows)
    free_rank = len(p.live) - len(factors)
    return AbelianInvariants(free_rank, tuple(d for d in factors if d > 1))


def consistent(verdict: Verdict, invariants: AbelianInvariants) -> bool:
    """Does the abelianization confirm the verdict?

    Trivial needs free rank 0, a free verdict needs matching rank, and
    both forbid torsion.  An unresolved verdict claims nothing, so any
    certificate is consistent with it.
    """
    if isinstance(verdict, Trivial):
        return invariants.free_rank == 0 and not invariants.torsion
    if isinstance(verdict, FreeOfRank):
        return invariants.free_rank == verdict.rank and not invariants.torsion
    return True


def certificate_line(invariants: AbelianInvariants, verdict: Verdict) -> str:
    ok = consistent(verdict, invariants)
    status = "yes" if ok else "no"
    if ok and isinstance(verdict, Unresolved):
        status = "yes (unresolved)"
    torsion = "[" + ", ".join(str(d) for d in invariants.torsion) + "]"
    return (
        f"abelianization: free rank {invariants.free_rank}, "
        f"torsion {torsion}; consistent: {status}"
    )
