"""Nonabelian extensions built from a twisted bilinear map.

Elements are pairs (k, q) with k in the kernel group and q = (z, a) in the
semidirect product Z^n x| Aut(F_n); the multiplication

    (k1, q1)(k2, q2) = (k1 * phi(q1)(k2) * gamma(q1, q2), q1 q2)

is associative exactly because of the two cocycle identities that
``cocycle_check`` verifies.  The concrete model uses automorphisms of
F_{n,1} lying in the Torelli Birman kernel as the kernel group, the
conjugation actions through the two splittings, and the twisted commutator
as the bilinear map; the forward comparison map ``forward`` into
Aut(F_{n,1}) is then a homomorphism, and rebuilding the y-stabilizer's
presentation generator by generator (``phi_inverse_gen``) inverts it.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random
from typing import Callable

from . import autos
from .semidirect import QElement, semi_inv, semi_mul
from .symwords import interpret, is_generator, std_basis, token_inv
from .twisted import interpret_aut, iota1, iota2, lambda_bar
from .words import Basis


@dataclass
class ExtGroup:
    """Hooks defining the extension: the kernel automorphism ``phi`` per
    quotient element, its inverse, and the kernel-valued 2-cochain
    ``gamma``."""

    n: int
    phi: Callable  # (q, k) -> k
    phi_inv: Callable  # (q, k) -> k
    gamma: Callable  # (q1, q2) -> k
    kernel_identity: autos.Endo

    def identity(self) -> "ExtElement":
        qid = QElement((0,) * self.n, autos.identity(Basis(self.n, 0)))
        return ExtElement(self.kernel_identity, qid)


@dataclass(frozen=True)
class ExtElement:
    k: autos.Endo
    q: QElement


def ext_mul(group: ExtGroup, g1: ExtElement, g2: ExtElement) -> ExtElement:
    k = g1.k * group.phi(g1.q, g2.k) * group.gamma(g1.q, g2.q)
    return ExtElement(k, semi_mul(g1.q, g2.q))


def ext_inv(group: ExtGroup, g: ExtElement) -> ExtElement:
    """Two-sided inverse: solve (k, q)(k', q') = 1 for (k', q')."""
    q_inv = semi_inv(g.q)
    value = g.k.inverse() * group.gamma(g.q, q_inv).inverse()
    return ExtElement(group.phi_inv(g.q, value), q_inv)


def ext_product(group: ExtGroup, elements) -> ExtElement:
    out = group.identity()
    for g in elements:
        out = ext_mul(group, out, g)
    return out


def ext_eq(g1: ExtElement, g2: ExtElement) -> bool:
    return g1.k == g2.k and g1.q.z == g2.q.z and g1.q.a == g2.q.a


def is_ext_identity(group: ExtGroup, g: ExtElement) -> bool:
    return ext_eq(g, group.identity())


# ---------------------------------------------------------------------------
# the concrete model over the Torelli Birman kernel


def birman_ext(n: int, corrupt_gamma=None) -> ExtGroup:
    """The extension data induced by the twisted commutator at rank n.

    ``corrupt_gamma`` optionally post-composes gamma's value when a
    predicate fires (mutation testing of the cocycle identities).
    """
    big = std_basis(n)

    def phi(q: QElement, k: autos.Endo) -> autos.Endo:
        conj = iota2(q.z, n) * iota1(q.a, n)
        return conj * k * conj.inverse()

    def phi_inv(q: QElement, k: autos.Endo) -> autos.Endo:
        conj = iota2(q.z, n) * iota1(q.a, n)
        return conj.inverse() * k * conj

    def gamma(q1: QElement, q2: QElement) -> autos.Endo:
        b1 = iota2(q1.z, n)
        value = b1 * lambda_bar(q1.a, q2.z, n) * b1.inverse()
        if corrupt_gamma is not None and corrupt_gamma(q1, q2):
            value = value * interpret(
                (("C", (big.x(1), 1), (big.y(1), 1)),), big
            )
        return value

    return ExtGroup(
        n=n,
        phi=phi,
        phi_inv=phi_inv,
        gamma=gamma,
        kernel_identity=autos.identity(big),
    )


def forward(group: ExtGroup, g: ExtElement) -> autos.Endo:
    """The comparison map into Aut(F_{n,1}): k * iota2(z) * iota1(a)."""
    return g.k * iota2(g.q.z, group.n) * iota1(g.q.a, group.n)


def random_q(n: int, rng: Random, word_len: int = 4, span: int = 2) -> QElement:
    from .symwords import signed_alphabet

    sa = signed_alphabet("S_A", n)
    word = tuple(rng.choice(sa) for _ in range(rng.randint(0, word_len)))
    z = tuple(rng.randint(-span, span) for _ in range(n))
    return QElement(z, interpret_aut(word, n))


def random_kernel(n: int, rng: Random, word_len: int = 4) -> autos.Endo:
    from .symwords import alphabet

    big = std_basis(n)
    sk = alphabet("S_K", n)
    word = []
    for _ in range(rng.randint(0, word_len)):
        t = rng.choice(sk)
        word.append(t if rng.random() < 0.5 else token_inv(t))
    return interpret(tuple(word), big)


def random_element(group: ExtGroup, rng: Random) -> ExtElement:
    return ExtElement(random_kernel(group.n, rng), random_q(group.n, rng))


def cocycle_check(group: ExtGroup, samples: int = 100, seed: int = 0x5EED) -> list:
    """Verify the two identities that make ext_mul associative.

    Returns a failure list of (identity-name, witness) pairs; empty means
    every sampled instance holds.
    """
    rng = Random(seed)
    failures = []
    for case in range(samples):
        q1, q2 = random_q(group.n, rng), random_q(group.n, rng)
        k = random_kernel(group.n, rng)
        g12 = group.gamma(q1, q2)
        lhs = group.phi(q1, group.phi(q2, k))
        rhs = g12 * group.phi(semi_mul(q1, q2), k) * g12.inverse()
        if lhs != rhs:
            failures.append(("conjugation-identity", f"case {case}"))
    for case in range(samples):
        q1, q2, q3 = (random_q(group.n, rng) for _ in range(3))
        lhs = group.gamma(q1, q2) * group.gamma(semi_mul(q1, q2), q3)
        rhs = group.phi(q1, group.gamma(q2, q3)) * group.gamma(q1, semi_mul(q2, q3))
        if lhs != rhs:
            failures.append(("cocycle-identity", f"case {case}"))
    return failures


# ---------------------------------------------------------------------------
# rebuilding the y-stabilizer generator by generator


def phi_inverse_gen(tok, group: ExtGroup) -> ExtElement:
    """Image of one presentation generator of the y-stabilizer.

    Transvections among the x's, swaps, and inversions land in the
    Aut(F_n) coordinate; M[x_a, y] lands in the Z^n coordinate;
    C[y, x_a] lands in the kernel; M[x_a^-1, y] is the composite
    kernel-conjugation * inverse-y-transvection.
    """
    n = group.n
    big = std_basis(n)
    y = big.y(1)
    qid = autos.identity(Basis(n, 0))
    zero = (0,) * n
    tag = tok[0]
    if tag in ("P", "I") or (tag == "M" and tok[2][0] != y):
        return ExtElement(group.kernel_identity, QElement(zero, interpret_aut((tok,), n)))
    if tag == "C":
        (u, _), (w, ws) = tok[1], tok[2]
        if u == y and ws == 1:
            return ExtElement(interpret((tok,), big), QElement(zero, qid))
        raise ValueError(f"not a presentation generator: {tok!r}")
    if tag == "M":
        (a, alpha), (_, vs) = tok[1], tok[2]
        if vs != 1:
            raise ValueError(f"not a presentation generator: {tok!r}")
        e_a = tuple(1 if i == a else 0 for i in range(n))
        y_part = ExtElement(group.kernel_identity, QElement(e_a, qid))
        if alpha == 1:
            return y_part
        con = ExtElement(
            interpret((("C", (a, 1), (y, 1)),), big), QElement(zero, qid)
        )
        return ext_mul(group, con, ext_inv(group, y_part))
    raise ValueError(f"not a presentation generator: {tok!r}")


def phi_inverse_word(tokens, group: ExtGroup) -> ExtElement:
    """Extend phi_inverse_gen multiplicatively over a word (inverse tokens
    map to inverses)."""
    n = group.n
    out = group.identity()
    for tok in tokens:
        if is_generator(tok, "S_C", n):
            g = phi_inverse_gen(tok, group)
        else:
            g = ext_inv(group, phi_inverse_gen(token_inv(tok), group))
        out = ext_mul(group, out, g)
    return out


# ---------------------------------------------------------------------------
# the abelian warm-up: splicing direct products along a bilinear map


class SplicedGroup:
    """Triples (k, b, a) over abelian groups with multiplication twisted by
    a bilinear map into K; the commutator of the two embeddings recovers
    the map."""

    def __init__(self, k_moduli, b_moduli, a_moduli, lam):
        self.k_moduli = tuple(k_moduli)
        self.b_moduli = tuple(b_moduli)
        self.a_moduli = tuple(a_moduli)
        self.lam = lam

    def _norm(self, vec, moduli):
        return tuple(v % m if m else v for v, m in zip(vec, moduli))

    def identity(self):
        return (
            (0,) * len(self.k_moduli),
            (0,) * len(self.b_moduli),
            (0,) * len(self.a_moduli),
        )

    def element(self, k, b, a):
        return (
            self._norm(k, self.k_moduli),
            self._norm(b, self.b_moduli),
            self._norm(a, self.a_moduli),
        )

    def mul(self, g1, g2):
        k1, b1, a1 = g1
        k2, b2, a2 = g2
        cross = self.lam(a1, b2)
        k = tuple(x + y + c for x, y, c in zip(k1, k2, cross))
        b = tuple(x + y for x, y in zip(b1, b2))
        a = tuple(x + y for x, y in zip(a1, a2))
        return self.element(k, b, a)

    def inv(self, g):
        k, b, a = g
        cross = self.lam(a, b)  # lam(-a, -b) = lam(a, b) by bilinearity
        return self.element(
            tuple(-x + c for x, c in zip(k, cross)),
            tuple(-x for x in b),
            tuple(-x for x in a),
        )

    def iota_a(self, a):
        return self.element((0,) * len(self.k_moduli), (0,) * len(self.b_moduli), a)

    def iota_b(self, b):
        return self.element((0,) * len(self.k_moduli), b, (0,) * len(self.a_moduli))

    def commutator(self, g1, g2):
        return self.mul(self.mul(g1, g2), self.mul(self.inv(g1), self.inv(g2)))


def splice_associativity_check(group: SplicedGroup, samples: int = 100,
                               seed: int = 0x5EED) -> list:
    """Sample triples for associativity; a non-bilinear table (or one that
    does not respect the torsion moduli) shows up here."""
    rng = Random(seed)

    def rand(moduli):
        return tuple(
            rng.randrange(m) if m else rng.randint(-4, 4) for m in moduli
        )

    failures = []
    for case in range(samples):
        g1, g2, g3 = (
            group.element(
                rand(group.k_moduli), rand(group.b_moduli), rand(group.a_moduli)
            )
            for _ in range(3)
        )
        if group.mul(group.mul(g1, g2), g3) != group.mul(g1, group.mul(g2, g3)):
            failures.append((g1, g2, g3))
    return failures


def splice_direct(k_moduli, b_moduli, a_moduli, lam) -> SplicedGroup:
    """Build the spliced group; ``lam`` is either a callable (a, b) -> K
    vector or a nested matrix of K vectors indexed by (a-gen, b-gen)."""
    if not callable(lam):
        table = lam

        def lam_fn(a, b):
            out = [0] * len(k_moduli)
            for i, ai in enumerate(a):
                for j, bj in enumerate(b):
                    if ai and bj:
                        for t, c in enumerate(table[i][j]):
                            out[t] += ai * bj * c
            return tuple(out)

        return SplicedGroup(k_moduli, b_moduli, a_moduli, lam_fn)
    return SplicedGroup(k_moduli, b_moduli, a_moduli, lam)
