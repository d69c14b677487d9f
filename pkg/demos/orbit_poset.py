#!/usr/bin/env python3
"""Enumerate endomorphism-tuple orbits and draw their degeneration order.

For fixed m and n the orbits of tuples (f_1, ..., f_{n-1}) of m x m maps
under base change at every vertex are finite; they are labelled by the rank
table r(a, b) = rk(f_{b-1} ... f_a), ordered by entrywise comparison (lower
table = deeper degeneration).  The script lists all orbits for m = 4, n = 2,
classifies each against d = (1, 3), and prints the Hasse diagram and the
flat-stratum diagram in DOT format.
"""

from lindeg import (
    DimVector,
    classify,
    decomposition_of,
    degenerates_to,
    enumerate_orbits,
    hasse_dot,
    strata_dot,
)

m, n = 4, 2
dv = DimVector(m, (1, 3))
orbits = enumerate_orbits(m, n)
print(f"{len(orbits)} orbits of endomorphisms of C^{m}")
print()

for rs in orbits:
    rep = classify(rs, dv)
    flags = [
        name
        for name, on in [
            ("flat", rep.flat),
            ("irreducible", rep.irreducible),
            ("smooth", rep.smooth),
            ("well-behaved", rep.well_behaved),
        ]
        if on
    ]
    dim = f"dim {rep.dimension}" if rep.dimension is not None else "not flat"
    print(f"rank {rs.edge_ranks()[0]}: {decomposition_of(rs)}")
    print(f"    {dim}; {', '.join(flags) if flags else 'none of the flags'}")

deeper = sum(
    degenerates_to(a, b) for a in orbits for b in orbits if a is not b
)
print(f"\n{deeper} strict degeneration relations among {len(orbits)} orbits")

def annotation(rs):
    rep = classify(rs, dv)
    if rep.smooth:
        return "smooth"
    if rep.irreducible:
        return "irreducible"
    return "flat" if rep.flat else ""


print("\nHasse diagram (pipe into `dot -Tpdf`):\n")
print(hasse_dot(orbits, annotation))

print("flat strata (edge sets with all maps zero) for three vertices:\n")
print(strata_dot(3))
