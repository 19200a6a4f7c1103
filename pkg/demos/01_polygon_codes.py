"""From side lengths to genetic codes and back.

A generic length vector determines its polygon space up to homeomorphism
through its genetic code.  This walk-through builds a few codes, realizes
them with integer lengths, and shows the normalization moves.
"""

from polygon_tc import GeneticCode, LengthVector, enumerate_codes, genetic_code, normalize, realize, stabilize

lv = LengthVector([1, 1, 1, 1, 3])
print("lengths", lv, "-> code", genetic_code(lv))

torus = GeneticCode.parse("74321")
print("74321 is realized by", realize(torus), "and is a torus:", torus.is_torus)

print("codes with six sides:", ", ".join(str(c) for c in enumerate_codes(6)))

raw = LengthVector([1, 1, 1, 9, 9, 9])
small = normalize(raw)
print(raw, "normalizes to", small, "with the same code", genetic_code(small))
bigger = stabilize(small)
print("adding a side gives", bigger, "whose gees match:", genetic_code(bigger).gees == genetic_code(raw).gees)
