"""Integer sumset races: sizes, rank patterns, and witness search.

Two finite sets of integers can trade the lead as the fold count grows:
one has more single sums, the other more double sums. This script shows
the bookkeeping and then asks the searcher to find such a pair from
nothing but the prescribed rank patterns.
"""

from sumset_races import dense_rank, hfold_ints, search_race_sets

# A sparse set and a dense set of the same span.
b1 = (0, 1, 5, 12)
b2 = (0, 1, 2, 3, 4)

for h in (1, 2, 3):
    s1 = hfold_ints(b1, h)
    s2 = hfold_ints(b2, h)
    ranks = dense_rank((len(s1), len(s2)))
    print(f"h={h}: |hB1|={len(s1):3d}  |hB2|={len(s2):3d}  rank pattern {ranks}")

# At h=1 the dense set is ahead (5 elements vs 4); from h=2 on the
# sparse set pulls away because its sums spread out instead of piling up.
print()

# Now the inverse problem: prescribe the rank patterns and search for
# sets that follow them. (1,2) then (2,1) asks for exactly one lead flip.
targets = [(1, 2), (2, 1)]
witness = search_race_sets(targets, ground=12, maxsize=5)
print("prescribed patterns:", targets)
print("witness found:", witness)

for h, want in enumerate(targets, start=1):
    sizes = tuple(len(hfold_ints(b, h)) for b in witness)
    print(f"h={h}: sizes {sizes} -> ranks {dense_rank(sizes)} (wanted {want})")
print()

# The search is exhaustive in its bounded space, so a None answer is a
# proof of infeasibility within the bounds rather than a timeout.
impossible = search_race_sets([(1, 2), (2, 1)], ground=2, maxsize=2)
print("same patterns with ground 2, maxsize 2:", impossible)
