"""Turkish: six relations, and how many letters really disappear.

The six pairs silence the soft g, h, and t, merge a with dotless i and
e with i, and tie y to a.  Counting carefully, 29 letters minus 6
eliminations leaves a free group of rank 23.  The commonly quoted figure
of 22 assumes one relation can retire two letters; the exponent matrix
says otherwise, and the report prints both numbers side by side.
"""

import random

from homophonic import (
    abelian_invariants,
    builtin_dataset,
    display,
    exponent_matrix,
    render_trace,
    simplify,
    to_presentation,
)

dataset = builtin_dataset("turkish")
presentation = to_presentation(dataset)

print("relators:")
for relator, origin in zip(presentation.relators, presentation.origins):
    print(f"  {display(relator):24} from {origin.witness()}")

verdict, trace = simplify(presentation)
print()
print(render_trace(trace, verdict))

invariants = abelian_invariants(presentation)
matrix = exponent_matrix(presentation)
print(
    f"\nexponent matrix is {len(matrix.rows)} x {len(matrix.generator_ids)}, "
    f"free rank {invariants.free_rank}"
)

# The verdict does not depend on the elimination order.
rng = random.Random(0)
ranks = set()
for _ in range(20):
    def anywhere(p, candidates, rng=rng):
        return candidates[rng.randrange(len(candidates))]

    random_verdict, _ = simplify(presentation, pick=anywhere)
    ranks.add(random_verdict.rank)
print("ranks over 20 random elimination orders:", ranks)
