"""Twisted bilinear maps and their generator recursions.

The central example: inside the automorphisms of F_{n,1} that preserve the
conjugacy class of y, the subgroup fixing y pointwise (a copy of Aut(F_n),
embedded by ``iota1``) and the subgroup generated by the y-transvections
(a copy of Z^n, embedded by ``iota2``) interact through the twisted
commutator

    lambda_bar(f, z) = iota1(f) iota2(z) iota1(f)^-1 iota2(f . z)^-1,

which lands in the Torelli Birman kernel and satisfies the three twisted
bilinearity axioms TB1-TB3.  ``tlambda1``/``tlambda2`` rebuild the same map
purely symbolically from its generator table, expanding words letter by
letter without simplifying them first; the verification suites check that
the expansion collapses on relators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from random import Random
from typing import Callable

from . import autos
from .semidirect import aut_act_on_Zn
from .symwords import C, M, Mc, SymWord, interpret, std_basis, token_inv
from .words import Basis
from .lpres import phi_word

DEFAULT_SEED = 0x5EED


# ---------------------------------------------------------------------------
# the two partial splittings


def aut_basis(n: int) -> Basis:
    return Basis(n, 0)


def interpret_aut(tokens, n: int) -> autos.Endo:
    """Interpret an S_A word as an automorphism of F_n (no y)."""
    if isinstance(tokens, SymWord):
        tokens = tokens.tokens
    return interpret(tokens, aut_basis(n))


def iota1(f, n: int) -> autos.Endo:
    """Extend an automorphism of F_n to F_{n,1}, fixing y pointwise.

    Accepts an S_A token word or an Endo of F_n (whose factorization lifts
    verbatim: the factor atoms only mention x-generators).
    """
    from .words import Word

    big = std_basis(n)
    if isinstance(f, autos.Endo):
        images = [Word(big, f.images[code].letters) for code in range(f.basis.size)]
        images.append(big.gen("y1"))
        return autos.Endo(big, images, f.factors)
    tokens = f.tokens if isinstance(f, SymWord) else tuple(f)
    return interpret(tokens, big)


def iota2(z, n: int) -> autos.Endo:
    """The y-transvection product M[x_1,y]^{z_1} ... M[x_n,y]^{z_n}."""
    big = std_basis(n)
    out = autos.identity(big)
    for i, zi in enumerate(z):
        out = out * (autos.transvection(big, big.x(i + 1), 1, big.gen("y1")) ** zi)
    return out


def zn_vector(tok, n: int) -> tuple:
    """The image of an S_Z^{+-1} token in Z^n."""
    (i, isign), (_, eps) = tok[1], tok[2]
    if isign != 1:
        raise ValueError(f"not an S_Z token: {tok!r}")
    vec = [0] * n
    vec[i] = eps
    return tuple(vec)


def canonical_zword(z, n: int) -> tuple:
    """The canonical S_Z word for a vector: index order, sign as exponent."""
    big = std_basis(n)
    y = big.y(1)
    tokens = []
    for i, zi in enumerate(z):
        tok = M(big.x(i + 1), 1, y, 1 if zi > 0 else -1)
        tokens.extend([tok] * abs(zi))
    return tuple(tokens)


def lambda_bar(f, z, n: int) -> autos.Endo:
    """The twisted commutator of the two splittings, evaluated concretely."""
    A = iota1(f, n)
    f_aut = f if isinstance(f, autos.Endo) else interpret_aut(f, n)
    moved = aut_act_on_Zn(f_aut, tuple(z))
    return A * iota2(z, n) * A.inverse() * iota2(moved, n).inverse()


# ---------------------------------------------------------------------------
# the generator table and the two expansion recursions


def lambda_gen(f, z, n: int) -> tuple:
    """Value of the twisted bilinear map on a generator pair, symbolically.

    ``f`` is an S_A token or inverse, ``z`` an S_Z token or inverse.
    Pairs without a table entry map to the empty word.
    """
    big = std_basis(n)
    y = big.y(1)
    (i, isign), (yy, eps) = z[1], z[2]
    if z[0] != "M" or isign != 1 or yy != y:
        raise ValueError(f"not an S_Z^+-1 token: {z!r}")
    tag = f[0]
    if tag == "P":
        return ()
    if tag == "I":
        return (C(f[1], y, eps),) if f[1] == i else ()
    (a, alpha), (b, beta) = f[1], f[2]
    if b == y:
        raise ValueError(f"not an S_A^+-1 token: {f!r}")
    if alpha == 1:
        if i == a:
            return (Mc(a, 1, y, -eps, b, -beta),)
        if i == b and beta == 1:
            return (Mc(a, 1, y, eps, b, -1),)
        return ()
    if i == b and beta == 1:
        word = (Mc(a, -1, y, 1, b, -1), C(a, y, -1))
        if eps == 1:
            return word
        return tuple(token_inv(t) for t in reversed(word))
    if i == b and beta == -1:
        return (C(a, y, eps),)
    return ()


def tlambda1(f, w, n: int) -> SymWord:
    """Letter-by-letter expansion over the second argument.

    ``w`` is a raw S_Z^{+-1} token sequence and is deliberately NOT reduced
    first: well-definedness under insertion of relators is a theorem to be
    checked, not an assumption.
    """
    big = std_basis(n)
    w = tuple(w.tokens) if isinstance(w, SymWord) else tuple(w)
    if not w:
        return SymWord(big, ())
    if len(w) == 1:
        return SymWord(big, lambda_gen(f, w[0], n))
    head = SymWord(big, lambda_gen(f, w[0], n))
    f_aut = interpret_aut((f,), n)
    moved = aut_act_on_Zn(f_aut, zn_vector(w[0], n))
    tail = tlambda1(f, w[1:], n)
    shifted = phi_word(canonical_zword(moved, n), tail, n)
    return head * shifted


def tlambda2(w, z, n: int) -> SymWord:
    """Letter-by-letter expansion over the first argument.

    ``w`` is a raw S_A^{+-1} token sequence (again not reduced first) and
    ``z`` an integer vector.  The single-letter case delegates to
    :func:`tlambda1` through the canonical word for ``z``.
    """
    big = std_basis(n)
    w = tuple(w.tokens) if isinstance(w, SymWord) else tuple(w)
    if not w:
        return SymWord(big, ())
    if len(w) == 1:
        return tlambda1(w[0], canonical_zword(z, n), n)
    s, rest = w[0], w[1:]
    moved_tail = phi_word((s,), tlambda2(rest, z, n), n)
    rest_aut = interpret_aut(rest, n)
    return moved_tail * tlambda2((s,), aut_act_on_Zn(rest_aut, tuple(z)), n)


# ---------------------------------------------------------------------------
# axiom checking


@dataclass
class TwistedBilinearData:
    """A twisted bilinear map together with the three group actions it is
    twisted by, plus samplers so the axioms can be spot-checked."""

    lam: Callable
    act_A_on_B: Callable
    act_A_on_K: Callable
    act_B_on_K: Callable
    mul_A: Callable
    mul_B: Callable
    mul_K: Callable
    inv_K: Callable
    eq_K: Callable
    sample_A: Callable
    sample_B: Callable
    sample_K: Callable
    describe: Callable = field(default=lambda x: str(x))


def tb_check(data: TwistedBilinearData, samples: int = 100,
             seed: int = DEFAULT_SEED, k_generators=None) -> list:
    """Evaluate TB1/TB2/TB3 on seeded samples; returns the failure list.

    Each failure is a (axiom, witness-string) pair.  When ``k_generators``
    is given, TB3 is additionally checked exhaustively for k running over
    it (checking a conjugation identity on a generating set suffices).
    """
    rng = Random(seed)
    failures = []
    d = data
    for case in range(samples):
        a, b1, b2 = d.sample_A(rng), d.sample_B(rng), d.sample_B(rng)
        lhs = d.lam(a, d.mul_B(b1, b2))
        rhs = d.mul_K(d.lam(a, b1), d.act_B_on_K(d.act_A_on_B(a, b1), d.lam(a, b2)))
        if not d.eq_K(lhs, rhs):
            failures.append(("TB1", f"a={d.describe(a)} b1={b1} b2={b2}"))
    for case in range(samples):
        a1, a2, b = d.sample_A(rng), d.sample_A(rng), d.sample_B(rng)
        lhs = d.lam(d.mul_A(a1, a2), b)
        rhs = d.mul_K(d.act_A_on_K(a1, d.lam(a2, b)), d.lam(a1, d.act_A_on_B(a2, b)))
        if not d.eq_K(lhs, rhs):
            failures.append(("TB2", f"a1={d.describe(a1)} a2={d.describe(a2)} b={b}"))

    def tb3_once(a, b, k, label):
        lam = d.lam(a, b)
        lhs = d.mul_K(
            d.mul_K(lam, d.act_B_on_K(d.act_A_on_B(a, b), d.act_A_on_K(a, k))),
            d.inv_K(lam),
        )
        rhs = d.act_A_on_K(a, d.act_B_on_K(b, k))
        if not d.eq_K(lhs, rhs):
            failures.append(("TB3", label))

    for case in range(samples):
        a, b, k = d.sample_A(rng), d.sample_B(rng), d.sample_K(rng)
        tb3_once(a, b, k, f"a={d.describe(a)} b={b} (sampled k)")
    if k_generators is not None:
        for a in getattr(d, "exhaustive_A", []):
            for b in getattr(d, "exhaustive_B", []):
                for idx, k in enumerate(k_generators):
                    tb3_once(a, b, k, f"a={d.describe(a)} b={b} k#{idx}")
    return failures


def birman_data(n: int, corrupt=None) -> TwistedBilinearData:
    """The semantic instance of the axioms at rank n.

    A = words over S_A^{+-1}, B = Z^n, K = automorphisms of F_{n,1}.
    ``corrupt`` optionally post-composes the map's value on one input pair,
    for mutation testing.
    """
    from .symwords import alphabet, signed_alphabet

    big = std_basis(n)
    sa = signed_alphabet("S_A", n)
    sk = alphabet("S_K", n)

    def lam(a, b):
        value = lambda_bar(a, b, n)
        if corrupt is not None and corrupt(a, b):
            value = value * interpret((C(big.x(1), big.y(1)),), big)
        return value

    def sample_A(rng):
        return tuple(rng.choice(sa) for _ in range(rng.randint(0, 6)))

    def sample_B(rng):
        return tuple(rng.randint(-3, 3) for _ in range(n))

    def sample_K(rng):
        word = [rng.choice(sk) for _ in range(rng.randint(0, 4))]
        if rng.random() < 0.5 and word:
            word[0] = token_inv(word[0])
        return interpret(tuple(word), big)

    data = TwistedBilinearData(
        lam=lam,
        act_A_on_B=lambda a, b: aut_act_on_Zn(interpret_aut(a, n), b),
        act_A_on_K=lambda a, k: iota1(a, n) * k * iota1(a, n).inverse(),
        act_B_on_K=lambda b, k: iota2(b, n) * k * iota2(b, n).inverse(),
        mul_A=lambda a1, a2: tuple(a1) + tuple(a2),
        mul_B=lambda b1, b2: tuple(x + y for x, y in zip(b1, b2)),
        mul_K=lambda k1, k2: k1 * k2,
        inv_K=lambda k: k.inverse(),
        eq_K=lambda k1, k2: k1 == k2,
        sample_A=sample_A,
        sample_B=sample_B,
        sample_K=sample_K,
        describe=lambda a: "*".join(str(t) for t in a) or "1",
    )
    data.exhaustive_A = [(t,) for t in alphabet("S_A", n)]
    data.exhaustive_B = [zn_vector(t, n) for t in alphabet("S_Z", n)]
    return data


def trivial_data(rank: int = 2, modulus: int = 12) -> TwistedBilinearData:
    """Degenerate instance: trivial actions, abelian groups, an ordinary
    bilinear map; the axioms reduce to plain bilinearity."""

    def lam(a, b):
        return tuple(
            sum(a[i] * b[j] for i in range(rank) for j in range(rank)) % modulus
            for _ in range(1)
        )

    def add(u, v):
        return tuple((x + y) % modulus for x, y in zip(u, v))

    def sample(rng):
        return tuple(rng.randrange(modulus) for _ in range(rank))

    return TwistedBilinearData(
        lam=lam,
        act_A_on_B=lambda a, b: b,
        act_A_on_K=lambda a, k: k,
        act_B_on_K=lambda b, k: k,
        mul_A=add,
        mul_B=add,
        mul_K=lambda k1, k2: tuple((x + y) % modulus for x, y in zip(k1, k2)),
        inv_K=lambda k: tuple((-x) % modulus for x in k),
        eq_K=lambda k1, k2: k1 == k2,
        sample_A=sample,
        sample_B=sample,
        sample_K=lambda rng: (rng.randrange(modulus),),
    )
