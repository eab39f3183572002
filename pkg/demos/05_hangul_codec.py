"""The Hangul codec: syllables to jamo and uniquely back.

Every precomposed syllable is a lead consonant, a vowel, and up to two
tail consonants.  Compound vowels stay atomic; compound tail clusters
split in two.  The flattened form is uniquely parseable, so nothing is
lost by working at the jamo level.
"""

import random

from homophonic import (
    SyllableDecomposition,
    compose_syllable,
    decompose_syllable,
    decompose_text,
    parse_jamo,
)
from homophonic.hangul import SYLLABLE_BASE, SYLLABLE_COUNT

# Simple, tense-tail, and cluster-tail syllables.
for syllable in ("수", "밖", "넓", "돼"):
    d = decompose_syllable(syllable)
    print(f"{syllable} -> {'+'.join(d.jamo())}")

# Whole words flatten syllable by syllable.
print("부엌 ->", "+".join(decompose_text("부엌")))

# Parsing segments a jamo stream back into syllables: the consonant
# right before each vowel is the lead, leftovers are the previous tail.
jamo = decompose_text("안일")
print("안일 ->", "+".join(jamo), "->", [
    compose_syllable(d) for d in parse_jamo(jamo)
])

# Composition rejects impossible tails.
try:
    compose_syllable(SyllableDecomposition("ㄱ", "ㅏ", ("ㄱ", "ㄱ")))
except ValueError as exc:
    print("rejected:", exc)

# Round-trip spot check over random syllables (the test suite does all
# eleven thousand).
rng = random.Random(1)
sample = [chr(SYLLABLE_BASE + rng.randrange(SYLLABLE_COUNT)) for _ in range(5)]
assert all(compose_syllable(decompose_syllable(s)) == s for s in sample)
print("round trip holds on a random sample:", " ".join(sample))
