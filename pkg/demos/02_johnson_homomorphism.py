"""The Johnson homomorphism and the abelianization rank formula.

A Torelli automorphism f is measured by where it moves each generator:
the row for z is the wedge-square projection of f(z) z^-1.  On the kernel
generating set these rows are single wedges, the images are linearly
independent, and the integer rank of the stacked images matches the
closed-form rank of the abelianization.
"""

from torellikit import (
    Basis,
    commutator,
    conjugation,
    expected_johnson_rank,
    johnson,
    johnson_basis_generators,
    johnson_rank,
    lambda2_projection,
    transvection,
    wedge,
)

b = Basis(n=3, k=2)

# The projection to the wedge square is a pair count.  On a commutator it
# recovers the wedge of the abelianizations -- the oracle every Johnson
# computation rests on.
u, v = b.word("x1 y2"), b.word("x2 x3^-1")
print("pi([u,v]) =", lambda2_projection(commutator(u, v)))
print("wedge     =", wedge(u.abelianize(), v.abelianize()))
print()

# Johnson rows of the two kinds of kernel generators.  Note the conjugation
# move's row is the wedge of conjugator-then-moved-letter.
c = conjugation(b, b.x(1), b.x(2))
print("tau(C[x1,x2]) row for x1:", johnson(c)[b.x(1)])
t = transvection(b, b.x(1), 1, commutator(b.word("y1"), b.word("x2")))
print("tau(M[x1,[y1,x2]]) row:  ", johnson(t)[b.x(1)])
print()

for n, k in ((2, 1), (2, 2), (3, 2), (4, 2)):
    gens = johnson_basis_generators(Basis(n, k))
    rank = johnson_rank(gens)
    print(
        "rank at (n,k)=(%d,%d): %3d generators, integer rank %3d, formula %3d"
        % (n, k, len(gens), rank, expected_johnson_rank(n, k))
    )
