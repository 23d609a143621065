"""Endomorphisms and automorphisms of the free group F_{n,k}.

An :class:`Endo` stores one image word per basis generator, plus an optional
factorization into named elementary automorphisms (transvections,
conjugation moves, swaps, inversions).  The factorization is what makes
inversion possible without any Whitehead-style search: each named factor
inverts by its own rule.

Composition convention: ``compose(f, g)`` (also ``f * g``) applies ``g``
first, so ``(f * g)(w) = f(g(w))`` and products act on the left.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import intmat
from .words import Basis, Word, commutator

# Factorization atoms.  Each is a tuple:
#   ("M", z, alpha, v_letters)  transvection M_{z^alpha, v}
#   ("C", z, zp, gamma)         conjugation move z |-> zp^gamma z zp^-gamma
#   ("P", a, b)                 swap of x_a, x_b (codes)
#   ("I", a)                    inversion of x_a (code)


class Endo:
    """Endomorphism of F_{n,k} given by images of the basis generators."""

    __slots__ = ("basis", "images", "factors", "_hash")

    def __init__(self, basis: Basis, images, factors=None):
        if len(images) != basis.size:
            raise ValueError("need one image per basis generator")
        for w in images:
            if w.basis != basis:
                raise ValueError("image word over the wrong basis")
        self.basis = basis
        self.images = tuple(images)
        self.factors = None if factors is None else tuple(factors)
        self._hash = None

    def image(self, code: int) -> Word:
        return self.images[code]

    def apply(self, w: Word) -> Word:
        if w.basis != self.basis:
            raise ValueError("word over the wrong basis")
        letters = []
        for code, sign in w.letters:
            img = self.images[code]
            letters.extend(img.letters if sign == 1 else img.inv().letters)
        return Word(self.basis, letters)

    def __mul__(self, other: "Endo") -> "Endo":
        """Composition, ``other`` first: ``(f * g)(w) = f(g(w))``."""
        if self.basis != other.basis:
            raise ValueError("cannot compose over different bases")
        images = tuple(self.apply(w) for w in other.images)
        factors = None
        if self.factors is not None and other.factors is not None:
            factors = self.factors + other.factors
        return Endo(self.basis, images, factors)

    def __eq__(self, other) -> bool:
        """Equality of endomorphisms = equality of all basis images.

        Sound and complete: an endomorphism is determined by the images of
        the generators.
        """
        return (
            isinstance(other, Endo)
            and self.basis == other.basis
            and self.images == other.images
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.basis, self.images))
        return self._hash

    @property
    def is_identity(self) -> bool:
        return all(
            w.letters == ((code, 1),) for code, w in enumerate(self.images)
        )

    def inverse(self) -> "Endo":
        """Invert by reversing the factorization (see module docstring)."""
        if self.factors is None:
            raise ValueError("cannot invert an endomorphism without a factorization")
        out = identity(self.basis)
        for atom in reversed(self.factors):
            out = out * _atom_endo(self.basis, _atom_inverse(self.basis, atom))
        return out

    def __pow__(self, e: int) -> "Endo":
        if e < 0:
            return self.inverse() ** (-e)
        out = identity(self.basis)
        for _ in range(e):
            out = out * self
        return out

    def abel_matrix(self) -> tuple:
        """Action on the abelianization; column j = abelianize(image of gen j)."""
        cols = [w.abelianize() for w in self.images]
        m = self.basis.size
        return tuple(tuple(cols[j][i] for j in range(m)) for i in range(m))

    def __str__(self) -> str:
        b = self.basis
        parts = [
            f"{b.gen_name(c)} -> {w}" for c, w in enumerate(self.images)
            if w.letters != ((c, 1),)
        ]
        return "Endo(" + ("identity" if not parts else "; ".join(parts)) + ")"

    __repr__ = __str__


def identity(basis: Basis) -> Endo:
    return Endo(basis, tuple(basis.generators()), ())


def _atom_inverse(basis: Basis, atom):
    tag = atom[0]
    if tag in ("P", "I"):
        return atom
    if tag == "M":
        _, z, alpha, v_letters = atom
        v_inv = Word(basis, v_letters).inv().letters
        return ("M", z, alpha, v_inv)
    if tag == "C":
        _, z, zp, gamma = atom
        return ("C", z, zp, -gamma)
    raise ValueError(f"unknown factor atom {atom!r}")


def _atom_endo(basis: Basis, atom) -> Endo:
    tag = atom[0]
    if tag == "M":
        _, z, alpha, v_letters = atom
        return transvection(basis, z, alpha, Word(basis, v_letters))
    if tag == "C":
        _, z, zp, gamma = atom
        return conjugation(basis, z, zp, gamma)
    if tag == "P":
        return swap(basis, atom[1], atom[2])
    return inversion(basis, atom[1])


def transvection(basis: Basis, z: int, alpha: int, v: Word) -> Endo:
    """M_{z^alpha, v}: multiplies z by v on the side selected by alpha.

    ``z |-> v z`` when alpha = +1 and ``z |-> z v^-1`` when alpha = -1, so
    that in both cases ``z^alpha |-> v z^alpha``.  The word ``v`` must not
    mention ``z``.
    """
    if alpha not in (1, -1):
        raise ValueError("alpha must be +-1")
    if v.basis != basis:
        raise ValueError("v over the wrong basis")
    if v.mentions(z):
        raise ValueError(f"transvection word mentions {basis.gen_name(z)}")
    images = list(basis.generators())
    zword = images[z]
    images[z] = v * zword if alpha == 1 else zword * v.inv()
    return Endo(basis, images, (("M", z, alpha, v.letters),))


def conjugation(basis: Basis, z: int, zp: int, gamma: int = 1) -> Endo:
    """C_{z, zp^gamma}: sends z to zp^gamma z zp^-gamma, fixing the rest."""
    if z == zp:
        raise ValueError("conjugation needs distinct generators")
    if gamma not in (1, -1):
        raise ValueError("gamma must be +-1")
    images = list(basis.generators())
    conj = Word(basis, ((zp, gamma),))
    images[z] = conj * images[z] * conj.inv()
    return Endo(basis, images, (("C", z, zp, gamma),))


def swap(basis: Basis, a: int, b: int) -> Endo:
    """Exchange the x-generators with codes a and b."""
    if a == b:
        raise ValueError("swap needs distinct generators")
    if not (basis.is_x(a) and basis.is_x(b)):
        raise ValueError("swap acts on x-generators")
    images = list(basis.generators())
    images[a], images[b] = images[b], images[a]
    return Endo(basis, images, (("P", min(a, b), max(a, b)),))


def inversion(basis: Basis, a: int) -> Endo:
    """Send x_a to its inverse, fixing the other generators."""
    if not basis.is_x(a):
        raise ValueError("inversion acts on x-generators")
    images = list(basis.generators())
    images[a] = images[a].inv()
    return Endo(basis, images, (("I", a),))


def compose(*endos: Endo) -> Endo:
    """Compose any number of endomorphisms, rightmost applied first."""
    if not endos:
        raise ValueError("compose needs at least one endomorphism")
    out = endos[0]
    for f in endos[1:]:
        out = out * f
    return out


@dataclass(frozen=True)
class Membership:
    """Membership flags for the subgroups hanging off the Birman sequence."""

    in_A: bool
    in_IA: bool
    in_BKer: bool
    in_KIA: bool


def _delete_y(basis: Basis, w: Word) -> Word:
    return Word(basis, [(c, s) for c, s in w.letters if basis.is_x(c)])


def classify(f: Endo) -> Membership:
    """Decide membership in A_{n,k}, IA_{n,k}, the Birman kernel, and their
    intersection.

    All four predicates are exact: A-membership is conjugacy of cyclic
    words, IA-membership is the abelianization matrix, kernel membership is
    deletion of the y-letters.
    """
    from .words import is_conjugate

    b = f.basis
    in_a = all(
        is_conjugate(f.images[b.y(j)], Word(b, ((b.y(j), 1),)))
        for j in range(1, b.k + 1)
    )
    in_ia = f.abel_matrix() == intmat.identity(b.size)
    in_bker = in_a and all(
        _delete_y(b, f.images[b.x(i)]).letters == ((b.x(i), 1),)
        for i in range(1, b.n + 1)
    )
    return Membership(in_a, in_ia, in_bker, in_bker and in_ia)


# ---------------------------------------------------------------------------
# Johnson homomorphism


def pair_basis(m: int) -> list:
    """Ordered basis of the wedge square: pairs (a, b) with a < b."""
    return [(a, b) for a in range(m) for b in range(a + 1, m)]


def wedge(u, v) -> tuple:
    """u ^ v of two integer vectors, in the pair_basis coordinates."""
    m = len(u)
    return tuple(u[a] * v[b] - u[b] * v[a] for a, b in pair_basis(m))


def lambda2_projection(w: Word) -> tuple:
    """Image of a total-exponent-zero word in the wedge square of Z^{n+k}.

    The coefficient of e_a ^ e_b (a < b) is the second Magnus coefficient:
    the signed count of letter pairs i < j with generators (a, b).  This is
    invariant under multiplication by triple commutators, and on commutators
    it satisfies ``lambda2_projection([u, v]) = wedge(ab(u), ab(v))``.
    """
    if any(w.abelianize()):
        raise ValueError("word has nonzero abelianization")
    m = w.basis.size
    # Running exponent sums make the double loop a single pass.  Only the
    # ordered pairs with gen_i < gen_j are counted; the reversed pairs feed
    # the (antisymmetric) lower triangle, which the precondition makes
    # redundant.  Counting both would double every coefficient.
    totals = [0] * m
    coeff = {pair: 0 for pair in pair_basis(m)}
    for code, sign in w.letters:
        for other in range(code):
            if totals[other]:
                coeff[(other, code)] += totals[other] * sign
        totals[code] += sign
    return tuple(coeff[pair] for pair in pair_basis(m))


def johnson(f: Endo) -> tuple:
    """Johnson homomorphism value of a Torelli element.

    Row for generator z is ``lambda2_projection(f(z) z^-1)``; requires
    ``classify(f).in_IA``.
    """
    b = f.basis
    rows = []
    for code in range(b.size):
        gen = Word(b, ((code, 1),))
        diff = f.images[code] * gen.inv()
        if any(diff.abelianize()):
            raise ValueError("endomorphism is not in the Torelli subgroup")
        rows.append(lambda2_projection(diff))
    return tuple(rows)


def johnson_rank(endos) -> int:
    """Integer rank of the stacked, flattened Johnson images."""
    rows = []
    for f in endos:
        rows.append([c for row in johnson(f) for c in row])
    return intmat.rank(rows)


# ---------------------------------------------------------------------------
# Standard generating sets


def torelli_kernel_generators(basis: Basis) -> list:
    """The generating set of the Torelli Birman kernel KIA_{n,k}:
    commutator transvections M_{x,[y,z]} plus all conjugation moves into or
    out of the y-generators.
    """
    b = basis
    gens = []
    for i in range(1, b.n + 1):
        x = b.x(i)
        for j in range(1, b.k + 1):
            y = b.y(j)
            for other in range(b.size):
                if other in (x, y):
                    continue
                v = commutator(Word(b, ((y, 1),)), Word(b, ((other, 1),)))
                gens.append(transvection(b, x, 1, v))
    for j in range(1, b.k + 1):
        y = b.y(j)
        for other in range(b.size):
            if other == y:
                continue
            gens.append(conjugation(b, y, other))
            gens.append(conjugation(b, other, y))
    return _dedupe(gens)


def johnson_basis_generators(basis: Basis) -> list:
    """The rank-counting variant: y-pair commutator transvections are
    restricted to ordered pairs a < b, so the Johnson images are linearly
    independent.
    """
    b = basis
    gens = []
    for i in range(1, b.n + 1):
        x = b.x(i)
        for j in range(1, b.k + 1):
            y = b.y(j)
            for i2 in range(1, b.n + 1):
                if i2 == i:
                    continue
                v = commutator(Word(b, ((y, 1),)), Word(b, ((b.x(i2), 1),)))
                gens.append(transvection(b, x, 1, v))
        for ja in range(1, b.k + 1):
            for jb in range(ja + 1, b.k + 1):
                v = commutator(Word(b, ((b.y(ja), 1),)), Word(b, ((b.y(jb), 1),)))
                gens.append(transvection(b, x, 1, v))
    for j in range(1, b.k + 1):
        y = b.y(j)
        for other in range(b.size):
            if other == y:
                continue
            gens.append(conjugation(b, y, other))
            gens.append(conjugation(b, other, y))
    return _dedupe(gens)


def expected_johnson_rank(n: int, k: int) -> int:
    """Rank of the abelianization of KIA_{n,k} as a polynomial in n and k."""
    return n * (n - 1) * k + n * (k * (k - 1) // 2) + 2 * n * k + k * (k - 1)


def _dedupe(endos) -> list:
    seen = set()
    out = []
    for f in endos:
        if f not in seen:
            seen.add(f)
            out.append(f)
    return out
