"""The German homophone group collapses to nothing.

Thirty letters, thirty homophone pairs, and every letter falls to the
same move: find a relator in which it occurs exactly once, solve for it,
substitute everywhere.  The abelianization cross-checks the verdict.
"""

from homophonic import (
    abelian_invariants,
    builtin_dataset,
    certificate_line,
    render_trace,
    replay,
    simplify,
    to_presentation,
)

dataset = builtin_dataset("german")
presentation = to_presentation(dataset)
print(f"{len(dataset.glyphs)} letters, {len(dataset.records)} homophone pairs\n")

verdict, trace = simplify(presentation)

# The elimination table: which pair retired which letter.
print(render_trace(trace, verdict))

# An independent exact-integer certificate over the same relators.
print(certificate_line(abelian_invariants(presentation), verdict))

# The trace is a proof object: replaying it step by step must reach
# the same verdict.
assert replay(trace, presentation) == verdict
print("replay of the stored trace reaches the same verdict")
