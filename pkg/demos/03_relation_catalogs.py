"""The substitution system and the relation catalogs.

The Torelli Birman kernel at k = 1 carries an L-presentation: a finite
generating set S_K, ten seed relation families, and a substitution rule
phi(s) per quotient generator s whose interpretation is conjugation by s.
Everything below is checked exactly, by interpreting symbolic words as
automorphisms of F_{n,1}.
"""

from itertools import islice

from torellikit.lpres import krel, phi_gen, phi_word, relation_catalog, verify_instance
from torellikit.symwords import format_word, interpret, parse_token, parse_word, std_basis

n = 3
b = std_basis(n)

s = parse_token("M[x1,y1]", b)
t = parse_token("C[y1,x2]", b)
image = phi_gen(s, t, n)
print("phi(M[x1,y1])(C[y1,x2]) =", format_word(image, b))

s_endo = interpret((s,), b)
print(
    "interprets to s t s^-1?  ",
    interpret(image, b) == s_endo * interpret((t,), b) * s_endo.inverse(),
)
print()

r = krel(4, n, a=1, b=2, alpha=1, beta=-1, eps=1)
print("a seed relation instance:", r)
print("interprets to identity?  ", interpret(r.tokens, b).is_identity)
print("inconsistent parameters: ", krel(2, n, a=1, b=1, c=2, d=3, alpha=1, beta=1))
print()

# phi is a monoid homomorphism; applying it along an inverse pair fixes
# every kernel generator up to interpretation.
moved = phi_word((s, parse_token("M[x1,y1]^-1", b)), parse_word("C[y1,x2]", b), n)
print("phi(s s^-1)(C[y1,x2]) =  ", format_word(moved, b), "(interpretation unchanged)")
print()

for kind, k in (("nielsen", 1), ("rk0", 1), ("jensen_wahl", 1), ("table1", 3)):
    instances = list(relation_catalog(kind, n, k))
    ok = all(verify_instance(i) for i in instances)
    print("catalog %-12s %4d instances, all identities: %s" % (kind, len(instances), ok))
print()

print("first rows of the seed-relation catalog:")
for inst in islice(relation_catalog("rk0", 2), 4):
    print("  ", inst.describe())
