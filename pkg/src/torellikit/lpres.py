"""The substitution system behind the L-presentation of the Torelli Birman
kernel, and machine-readable catalogs of every relation family in play.

``phi_gen(s, t, n)`` rewrites a kernel generator ``t`` (alphabet ``S_K``)
under a quotient generator ``s`` (alphabet ``S_Q``, with inverses); its
defining property, checked exhaustively by the verification suites, is that
interpretation turns it into conjugation:

    interpret(phi_gen(s, t)) == s_endo * interpret(t) * s_endo^-1

Rule resolution order: swap/inversion relabeling, then the fixed cases,
then the explicit rewrite rows.  A totality audit asserts every (s, t)
shape resolves exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .symwords import (
    C,
    I,
    M,
    Mc,
    P,
    SymWord,
    alphabet,
    interpret,
    is_generator,
    signed_alphabet,
    std_basis,
    token_inv,
)
from .words import Basis

# ---------------------------------------------------------------------------
# the substitution rules


def _relabel(tok, perm_sign):
    """Apply a signed x-permutation (code -> (code, sign)) to a token."""

    def letter(pair):
        code, sign = pair
        new, flip = perm_sign(code)
        return (new, sign * flip)

    tag = tok[0]
    if tag == "C":
        (u, _), w = tok[1], tok[2]
        nu, _ = perm_sign(u)
        return C(nu, *letter(w))
    if tag == "Mc":
        a, p, q = (letter(x) for x in tok[1:])
        return ("Mc", a, p, q)
    raise ValueError(f"cannot relabel {tok!r}")


def _perm_of(s):
    """The signed permutation of generator codes given by a swap/inversion."""
    if s[0] == "P":
        a, b = s[1], s[2]

        def perm(code):
            if code == a:
                return b, 1
            if code == b:
                return a, 1
            return code, 1

    else:
        a = s[1]

        def perm(code):
            return code, -1 if code == a else 1

    return perm


_PHI_CACHE: dict = {}


def phi_gen(s, t, n: int) -> tuple:
    """Image of the kernel generator ``t`` under the rule for ``s``.

    ``s`` is a token of S_Q or an inverse of one; ``t`` must be a generator
    (not an inverse) of S_K.  Returns the image as a token tuple.
    """
    key = (n, s, t)
    cached = _PHI_CACHE.get(key)
    if cached is not None:
        return cached
    if not is_generator(t, "S_K", n):
        raise ValueError(f"not an S_K generator: {t!r}")
    tag = s[0]
    if tag in ("P", "I"):
        out = (_relabel(t, _perm_of(s)),)
    elif tag == "M":
        y = std_basis(n).y(1)
        (a, alpha), (v, vs) = s[1], s[2]
        if v == y:
            out = _phi_m_xy(a, alpha, vs, t, y)
        else:
            out = _phi_m_xx(a, alpha, v, vs, t, y)
    else:
        raise ValueError(f"not an S_Q token: {s!r}")
    _PHI_CACHE[key] = out
    return out


def _phi_m_xy(a, alpha, eps, t, y):
    """Rules for s = M[x_a^alpha, y]^eps (S_Q itself has alpha = +1)."""
    tag = t[0]
    if tag == "C":
        (u, _), (w, _) = t[1], t[2]
        if w == y:
            return (t,)  # C[x_c, y] is fixed for every c
        if alpha != 1:
            raise ValueError("no rewrite rule for M[x^-1, y] on this shape")
        if w == a:
            return (C(a, y, eps), t)
        return (t, Mc(a, 1, y, -eps, w, -1))
    # t = Mc[f^fs, y^zeta, l^ls]
    (f, fs), _, (l, ls) = t[1], t[2], t[3]
    if (f == a and fs == -alpha) or (l == a and ls == -alpha):
        return (t,)
    if f != a and l != a:
        return (t,)
    if alpha != 1:
        raise ValueError("no rewrite rule for M[x^-1, y] on this shape")
    return (C(a, y, eps), t, C(a, y, -eps))


def _phi_m_xx(a, alpha, b, beta, t, y):
    """Rules for s = M[x_a^alpha, x_b]^beta."""
    tag = t[0]
    if tag == "C":
        (u, _), (w, _) = t[1], t[2]
        if u == y:
            if w == a:
                word = (C(y, a, alpha), C(y, b, beta))
                if alpha == 1:
                    return word
                return tuple(token_inv(x) for x in reversed(word))
            return (t,)  # C[y, x_b] and C[y, x_c] are fixed
        if u == a:
            return (C(a, y), Mc(a, alpha, b, -beta, y, 1))
        if u == b:
            return (C(b, y), Mc(a, alpha, b, -beta, y, -1))
        return (t,)  # C[x_c, y] is fixed
    # t = Mc[f^fs, y^eps, l^ls]
    (f, fs), (_, eps), (l, ls) = t[1], t[2], t[3]
    if f == a:
        if fs == -alpha:
            return (t,)
        if l == b:
            if ls == beta:
                return (Mc(a, alpha, b, -beta, y, eps),)
            return (C(y, b, -beta), t, C(y, b, beta))
        return (
            C(y, l, ls),
            Mc(a, alpha, y, eps, b, -beta),
            C(y, l, -ls),
            t,
            Mc(a, alpha, b, -beta, y, eps),
        )
    if f == b and l == a:
        if fs == beta and ls == alpha:
            return (
                Mc(b, -beta, y, -eps, a, alpha),
                C(b, y, eps),
                Mc(a, alpha, y, eps, b, -beta),
                C(a, y, -eps),
            )
        if fs == -beta and ls == alpha:
            return (
                C(y, a, alpha),
                C(y, b, beta),
                C(b, y, -eps),
                Mc(a, alpha, b, -beta, y, eps),
                C(y, b, -beta),
                Mc(b, -beta, a, -alpha, y, eps),
                C(y, a, -alpha),
                C(a, y, eps),
            )
        if fs == beta and ls == -alpha:
            return (
                C(y, b, -beta),
                C(y, a, -alpha),
                C(a, y, eps),
                Mc(a, alpha, b, -beta, y, eps),
                C(b, y, -eps),
                Mc(b, -beta, a, alpha, y, -eps),
                C(y, a, alpha),
                C(y, b, beta),
            )
        return (
            C(y, b, -beta),
            C(y, a, -alpha),
            C(a, y, -eps),
            C(y, a, alpha),
            t,
            C(y, b, beta),
            Mc(a, alpha, y, eps, b, -beta),
            C(b, y, eps),
        )
    if f == b:
        if fs == beta:
            return (
                t,
                Mc(a, alpha, y, eps, b, -beta),
                Mc(a, alpha, l, ls, y, eps),
                C(y, l, ls),
                Mc(a, alpha, b, -beta, y, eps),
                C(y, l, -ls),
            )
        return (t, Mc(a, alpha, y, eps, l, ls))
    if l == a:
        if ls == alpha:
            return (C(y, a, alpha), Mc(f, fs, y, eps, b, beta), C(y, a, -alpha), t)
        return (C(y, b, -beta), t, Mc(f, fs, b, beta, y, eps), C(y, b, beta))
    return (t,)  # Mc[x_c, y, x_b], Mc[x_c, y, x_d] are fixed


def phi_apply(s, word, n: int):
    """Extend phi_gen over a word of S_K tokens (an endomorphism of the
    free group on S_K)."""
    if isinstance(word, SymWord):
        word = word.tokens
    out = []
    for tok in word:
        if is_generator(tok, "S_K", n):
            out.extend(phi_gen(s, tok, n))
        else:
            image = phi_gen(s, token_inv(tok), n)
            out.extend(token_inv(x) for x in reversed(image))
    return tuple(out)


def phi_word(u, w, n: int) -> SymWord:
    """Apply the substitution rules of a whole S_Q word, innermost first.

    ``phi_word(u * v, w) == phi_word(u, phi_word(v, w))``: the map
    ``u -> phi(u)`` is a monoid homomorphism into End(F(S_K)).
    """
    basis = std_basis(n)
    if isinstance(u, SymWord):
        u = u.tokens
    tokens = w.tokens if isinstance(w, SymWord) else tuple(w)
    for s in reversed(u):
        tokens = phi_apply(s, tokens, n)
    return SymWord(basis, tokens)


def audit_phi_totality(n: int) -> int:
    """Assert every (s, t) pair resolves to exactly one rule; returns the
    number of pairs checked."""
    count = 0
    for s in signed_alphabet("S_Q", n):
        for t in alphabet("S_K", n):
            phi_gen(s, t, n)
            count += 1
    return count


# ---------------------------------------------------------------------------
# seed relations of the L-presentation (the ten kernel relation families)


def krel(index: int, n: int, **params) -> SymWord | None:
    """Instance of kernel relation family 1..10, as a relator word.

    Returns None when the supplied parameters violate the family's side
    conditions (the "invalid marker").  Parameters are 1-based x-indices
    ``a, b, c, d`` and signs ``alpha, beta, gamma, delta, eps``.
    """
    basis = std_basis(n)
    y = basis.y(1)
    get = params.get

    def x(name):
        idx = get(name)
        return None if idx is None else basis.x(idx)

    a, b, c, d = x("a"), x("b"), x("c"), x("d")
    alpha, beta = get("alpha", 1), get("beta", 1)
    gamma, delta, eps = get("gamma", 1), get("delta", 1), get("eps", 1)

    def word(tokens):
        return SymWord(basis, tuple(tokens))

    def comm(t1, t2):
        return (t1, t2, token_inv(t1), token_inv(t2))

    if index == 1:
        if a == b:
            return None
        return word(comm(C(a, y), C(b, y)))
    if index == 2:
        # [Mc[x_a^alpha, y^eps, x_c^gamma], Mc[x_b^beta, y, x_d^delta]] with
        # x_a^alpha != x_b^beta, a != d, b != c; a == b or c == d allowed.
        if a == c or b == d or a == d or b == c:
            return None
        if a == b and alpha == beta:
            return None
        return word(comm(Mc(a, alpha, y, eps, c, gamma), Mc(b, beta, y, 1, d, delta)))
    if index == 3:
        if a in (b, c) or b == c:
            return None
        return word(comm(C(a, y), Mc(b, beta, y, eps, c, gamma)))
    if a == b or a is None or b is None:
        return None
    t_abe = Mc(a, alpha, y, eps, b, beta)
    if index == 4:
        lhs = (C(y, b, -beta), t_abe, C(y, b, beta))
        rhs = (Mc(a, alpha, b, -beta, y, eps),)
    elif index == 5:
        lhs = (C(b, y, -eps), t_abe, C(b, y, eps))
        rhs = (Mc(a, alpha, b, beta, y, -eps),)
    elif index == 6:
        lhs = (C(a, y, eps), t_abe, C(a, y, -eps))
        rhs = (Mc(a, alpha, b, beta, y, -eps),)
    elif index == 7:
        lhs = (t_abe, Mc(a, -alpha, y, eps, b, beta))
        rhs = (C(y, b, beta), C(a, y, -eps), C(y, b, -beta), C(a, y, eps))
    elif index in (8, 9, 10):
        if c is None or c in (a, b):
            return None
        if index == 8:
            lhs = (Mc(b, beta, y, -eps, c, gamma), t_abe, Mc(b, beta, c, gamma, y, -eps))
            rhs = (Mc(a, alpha, c, gamma, y, -eps), t_abe, Mc(a, alpha, c, gamma, y, eps))
        elif index == 9:
            lhs = (C(b, y, -eps), C(y, c, gamma), t_abe, C(y, c, -gamma), C(b, y, eps))
            rhs = (
                Mc(a, alpha, b, beta, y, -eps),
                C(y, c, gamma),
                t_abe,
                C(y, c, -gamma),
                Mc(a, alpha, y, eps, c, gamma),
                Mc(a, alpha, b, beta, y, eps),
                Mc(a, alpha, c, gamma, y, eps),
            )
        else:
            lhs = (C(c, y, -eps), C(y, c, gamma), t_abe, C(y, c, -gamma), C(c, y, eps))
            rhs = (
                Mc(a, alpha, y, -eps, b, beta),
                Mc(a, alpha, c, gamma, y, -eps),
                C(y, c, gamma),
                Mc(a, alpha, b, beta, y, -eps),
                C(y, c, -gamma),
                t_abe,
                Mc(a, alpha, y, -eps, c, gamma),
            )
    else:
        raise ValueError(f"relation family index {index} out of range 1..10")
    rhs_inv = tuple(token_inv(tk) for tk in reversed(rhs))
    return word(lhs + rhs_inv)


# ---------------------------------------------------------------------------
# relation catalogs


@dataclass(frozen=True)
class RelationInstance:
    """One instance of a relation family, in relator form: the word
    interprets to the identity automorphism."""

    family: str
    params: tuple
    word: SymWord

    def describe(self) -> str:
        par = ",".join(str(p) for p in self.params)
        return f"{self.family}({par}): {self.word}"


def _inst(family, params, basis, tokens) -> RelationInstance:
    return RelationInstance(family, tuple(params), SymWord(basis, tuple(tokens)))


def _comm(t1, t2):
    return (t1, t2, token_inv(t1), token_inv(t2))


def _eq(lhs, rhs):
    return tuple(lhs) + tuple(token_inv(t) for t in reversed(rhs))


def nielsen_relators(n: int) -> Iterator[RelationInstance]:
    """All instances of the five Nielsen relation families at rank n,
    over the alphabet S_A (tokens are interpreted fixing y)."""
    b = std_basis(n)
    xs = [b.x(i) for i in range(1, n + 1)]
    signs = (1, -1)

    def pairs():
        return ((p, q) for p in xs for q in xs if p != q)

    for p in xs:
        yield _inst("N1.inv2", (p,), b, (I(p), I(p)))
    for p, q in pairs():
        if p < q:
            yield _inst("N1.invcomm", (p, q), b, _comm(I(p), I(q)))
    for p, q in pairs():
        if p < q:
            yield _inst("N1.swap2", (p, q), b, (P(p, q), P(p, q)))
    for p, q in pairs():
        for r, s in pairs():
            if p < q and r < s and p < r and len({p, q, r, s}) == 4:
                yield _inst("N1.swapcomm", (p, q, r, s), b, _comm(P(p, q), P(r, s)))
    for p, q in pairs():
        for r in xs:
            if r in (p, q):
                continue
            yield _inst(
                "N1.swapconj", (p, q, r), b,
                _eq((P(p, q), P(q, r), P(p, q)), (P(p, r),)),
            )
    for p, q in pairs():
        yield _inst("N1.swapinv", (p, q), b, _eq((P(p, q), I(p), P(p, q)), (I(q),)))
    for p, q in pairs():
        if p < q:
            for r in xs:
                if r in (p, q):
                    continue
                yield _inst("N1.swapinvcomm", (p, q, r), b, _comm(P(p, q), I(r)))
    # N2: conjugating transvections by swaps and inversions
    for p, q in pairs():
        if p > q:
            continue
        perm = _perm_of(P(p, q))
        for cgen, dgen in pairs():
            for g in signs:
                tv = M(cgen, g, dgen)
                nc, fc = perm(cgen)
                nd, fd = perm(dgen)
                rhs = ("M", (nc, g * fc), (nd, fd))
                yield _inst(
                    "N2.swap", (p, q, cgen, g, dgen), b,
                    _eq((P(p, q), tv, P(p, q)), (rhs,)),
                )
    for p in xs:
        perm = _perm_of(I(p))
        for cgen, dgen in pairs():
            for g in signs:
                tv = M(cgen, g, dgen)
                nc, fc = perm(cgen)
                nd, fd = perm(dgen)
                rhs = ("M", (nc, g * fc), (nd, fd))
                yield _inst(
                    "N2.inv", (p, cgen, g, dgen), b,
                    _eq((I(p), tv, I(p)), (rhs,)),
                )
    # N3.  The signed-permutation side depends on the relative sign: the
    # composite equals I_b * P when alpha == beta and P * I_b otherwise
    # (checked semantically; a uniform right-hand side fails half the cases).
    for p, q in pairs():
        for al in signs:
            for be in signs:
                lhs = (
                    M(p, -al, q, be),
                    ("M", (q, be), (p, al)),
                    M(p, al, q, -be),
                )
                rhs = (I(q), P(p, q)) if al == be else (P(p, q), I(q))
                yield _inst("N3", (p, al, q, be), b, _eq(lhs, rhs))
    # N4: disjoint-support commuting transvections
    for p, q in pairs():
        for al in signs:
            for r, s in pairs():
                for g in signs:
                    if (p, al) == (r, g) or p == s or r == q:
                        continue
                    if (p, al, q) > (r, g, s):
                        continue  # commutators are symmetric; emit once
                    yield _inst(
                        "N4", (p, al, q, r, g, s), b,
                        _comm(M(p, al, q), M(r, g, s)),
                    )
    # N5
    for p, q in pairs():
        for r in xs:
            if r in (p, q):
                continue
            for al in signs:
                for be in signs:
                    for g in signs:
                        lhs = (("M", (q, be), (p, al)), ("M", (r, g), (q, be)))
                        rhs = (
                            ("M", (r, g), (q, be)),
                            ("M", (q, be), (p, al)),
                            ("M", (r, g), (p, al)),
                        )
                        yield _inst("N5", (p, q, r, al, be, g), b, _eq(lhs, rhs))


def inverse_pair_words(kind: str, n: int) -> Iterator[RelationInstance]:
    """The words s * s^-1 for s in the signed alphabet."""
    b = std_basis(n)
    for s in signed_alphabet(kind, n):
        yield _inst(f"{kind}.invpair", (s,), b, (s, token_inv(s)))


def zn_relators(n: int) -> Iterator[RelationInstance]:
    """Commutators of the y-transvections: the relations of Z^n."""
    b = std_basis(n)
    y = b.y(1)
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            yield _inst(
                "Z.comm", (i, j), b,
                _comm(M(b.x(i), 1, y), M(b.x(j), 1, y)),
            )


def rk0_instances(n: int) -> Iterator[RelationInstance]:
    """Every instance of the ten seed relation families at rank n,
    including the permitted non-generic coincidences."""
    signs = (1, -1)
    idxs = range(1, n + 1)

    def emit(index, **params):
        w = krel(index, n, **params)
        if w is not None:
            return RelationInstance(
                f"R{index}", tuple(sorted(params.items())), w
            )
        return None

    for a in idxs:
        for bb in idxs:
            if a != bb:
                out = emit(1, a=a, b=bb)
                if out:
                    yield out
    for a in idxs:
        for c in idxs:
            for bb in idxs:
                for d in idxs:
                    for alpha in signs:
                        for gamma in signs:
                            for eps in signs:
                                for beta in signs:
                                    for delta in signs:
                                        out = emit(
                                            2, a=a, b=bb, c=c, d=d,
                                            alpha=alpha, beta=beta, gamma=gamma,
                                            delta=delta, eps=eps,
                                        )
                                        if out:
                                            yield out
    for a in idxs:
        for bb in idxs:
            for c in idxs:
                for beta in signs:
                    for eps in signs:
                        for gamma in signs:
                            out = emit(3, a=a, b=bb, c=c, beta=beta, eps=eps, gamma=gamma)
                            if out:
                                yield out
    for index in (4, 5, 6, 7):
        for a in idxs:
            for bb in idxs:
                if a == bb:
                    continue
                for alpha in signs:
                    for beta in signs:
                        for eps in signs:
                            out = emit(index, a=a, b=bb, alpha=alpha, beta=beta, eps=eps)
                            if out:
                                yield out
    for index in (8, 9, 10):
        for a in idxs:
            for bb in idxs:
                for c in idxs:
                    if len({a, bb, c}) != 3:
                        continue
                    for alpha in signs:
                        for beta in signs:
                            for gamma in signs:
                                for eps in signs:
                                    out = emit(
                                        index, a=a, b=bb, c=c,
                                        alpha=alpha, beta=beta, gamma=gamma, eps=eps,
                                    )
                                    if out:
                                        yield out


def jensen_wahl_relators(n: int) -> Iterator[RelationInstance]:
    """The relation families presenting the y-conjugacy stabilizer of
    Aut(F_{n,1}) on the generators S_A + {M[x^a, y], C[y, x]}."""
    b = std_basis(n)
    y = b.y(1)
    xs = [b.x(i) for i in range(1, n + 1)]
    signs = (1, -1)

    yield from nielsen_relators(n)  # Q1
    # Q2: commuting relations
    for a in xs:
        for al in signs:
            for bb in xs:
                for be in signs:
                    if (a, al) >= (bb, be):
                        continue
                    yield _inst(
                        "Q2.yy", (a, al, bb, be), b,
                        _comm(M(a, al, y), M(bb, be, y)),
                    )
    for a in xs:
        for al in signs:
            for bb in xs:
                if bb == a:
                    continue
                for c in xs:
                    if c == bb:
                        continue
                    for g in signs:
                        if (c, g) == (a, al):
                            continue
                        yield _inst(
                            "Q2.xy", (a, al, bb, c, g), b,
                            _comm(M(a, al, bb), M(c, g, y)),
                        )
                for c in xs:
                    if c == a:
                        continue
                    yield _inst(
                        "Q2.xc", (a, al, bb, c), b,
                        _comm(M(a, al, bb), C(y, c)),
                    )
    # Q3: swap/inversion relabeling of the y-generators
    perms = [(P(p, q), f"P[{p+1},{q+1}]") for p in xs for q in xs if p < q]
    perms += [(I(p), f"I[{p+1}]") for p in xs]
    for sigma, name in perms:
        perm = _perm_of(sigma)
        for c in xs:
            nc, fc = perm(c)
            yield _inst(
                "Q3.con", (name, c), b,
                _eq((sigma, C(y, c), sigma), (C(y, nc, fc),)),
            )
            for g in signs:
                ng = g * fc
                yield _inst(
                    "Q3.mul", (name, c, g), b,
                    _eq((sigma, M(c, g, y), sigma), (M(nc, ng, y),)),
                )
    # Q4
    for a in xs:
        for al in signs:
            for bb in xs:
                if bb == a:
                    continue
                for be in signs:
                    lhs = (M(a, al, bb, -be), M(bb, be, y), M(a, al, bb, be))
                    rhs = (M(a, al, y), M(bb, be, y))
                    yield _inst("Q4", (a, al, bb, be), b, _eq(lhs, rhs))
    # Q5
    for a in xs:
        for al in signs:
            lhs = (C(y, a, -al), M(a, -al, y), C(y, a, al))
            rhs = (M(a, al, y, -1),)
            yield _inst("Q5", (a, al), b, _eq(lhs, rhs))


# Conjugation table for the kernel generating set: fix s = M[x_a, y_d];
# each row rewrites s t s^-1 and s^-1 t s as words in the generating set.
# Row specs carry how many x- and y-indices they mention so instances are
# enumerated exactly once per injective index assignment.


def _mc(base, p, q):
    return Mc(base, 1, p, 1, q, 1)


def _t1_row_specs():
    def r1(a, b, d):
        t = _mc(a, d, b)
        return t, (C(a, d), t, C(a, d, -1)), (C(a, d, -1), t, C(a, d))

    def r2(a, b, d):
        t = _mc(b, d, a)
        return t, (C(a, d), t, C(a, d, -1)), (C(a, d, -1), t, C(a, d))

    def r3(a, b, d, e):
        t = _mc(a, e, b)
        return t, (C(a, d), t, C(a, d, -1)), (C(a, d, -1), t, C(a, d))

    def r4(a, b, d, e):
        t = _mc(b, e, a)
        return (
            t,
            (C(b, d, -1), t, C(b, d), _mc(b, e, d)),
            (C(b, d), t, _mc(b, d, e), C(b, d, -1)),
        )

    def r5(a, d, e):
        t = _mc(a, d, e)
        return t, (C(a, d), t, C(a, d, -1)), (C(a, d, -1), t, C(a, d))

    def r6(a, d, e, f):
        t = _mc(a, e, f)
        return t, (C(a, d), t, C(a, d, -1)), (C(a, d, -1), t, C(a, d))

    def r7(a, d, e):
        t = C(d, e)
        return (
            t,
            (C(a, d), _mc(a, d, e), C(a, d, -1), t),
            (_mc(a, e, d), t),
        )

    def r8(a, d):
        t = C(d, a)
        return t, (C(a, d), t), (C(a, d, -1), t)

    def r9(a, b, d):
        # the one row whose words are not a plain sandwich; the final
        # exponent of the plus word and the shape of the minus word were
        # pinned by exhaustive search against s t s^-1 and s^-1 t s
        t = C(d, b)
        return (
            t,
            (t, C(a, d), C(d, b, -1), _mc(a, d, b), t, C(a, d, -1)),
            (token_inv(_mc(a, d, b)), t),
        )

    def r10(a, d, e):
        t = C(e, a)
        return t, (t, C(e, d)), (t, C(e, d, -1))

    def r11(a, d, e):
        t = C(a, e)
        return (
            t,
            (t, C(a, d), _mc(a, e, d), C(a, d, -1)),
            (t, _mc(a, d, e)),
        )

    # (name, number of x-indices, number of y-indices, builder)
    return [
        ("Mc[a,d,b]", 2, 1, r1),
        ("Mc[b,d,a]", 2, 1, r2),
        ("Mc[a,e,b]", 2, 2, r3),
        ("Mc[b,e,a]", 2, 2, r4),
        ("Mc[a,d,e]", 1, 2, r5),
        ("Mc[a,e,f]", 1, 3, r6),
        ("C[d,e]", 1, 2, r7),
        ("C[d,a]", 1, 1, r8),
        ("C[d,b]", 2, 1, r9),
        ("C[e,a]", 1, 2, r10),
        ("C[a,e]", 1, 2, r11),
    ]


def table1_instances(n: int, k: int) -> Iterator[RelationInstance]:
    """The conjugation table for the kernel generating set at rank (n, k):
    both columns of every row, for every assignment of distinct indices."""
    if n < 2 or k < 1:
        raise ValueError("the conjugation table needs n >= 2 and k >= 1")
    from itertools import permutations

    b = Basis(n, k)
    for name, nx, ny, build in _t1_row_specs():
        if ny > k:
            continue
        for xids in permutations(range(1, n + 1), nx):
            for yids in permutations(range(1, k + 1), ny):
                xcodes = [b.x(i) for i in xids]
                ycodes = [b.y(j) for j in yids]
                t, plus, minus = build(*xcodes, *ycodes)
                s = M(xcodes[0], 1, ycodes[0])
                params = xids + yids
                yield _inst(
                    f"T1.{name}+", params, b, _eq((s, t, token_inv(s)), plus)
                )
                yield _inst(
                    f"T1.{name}-", params, b, _eq((token_inv(s), t, s), minus)
                )


def s1prime_instances(n: int, k: int) -> Iterator[RelationInstance]:
    """The commuting facts behind the normal generation argument:
    y-transvections on distinct x-generators commute."""
    b = Basis(n, k)
    for xa in range(1, n + 1):
        for xb in range(1, n + 1):
            if xa >= xb:
                continue
            for d in range(1, k + 1):
                for e in range(1, k + 1):
                    t1 = M(b.x(xa), 1, b.y(d))
                    t2 = M(b.x(xb), 1, b.y(e))
                    yield _inst("S1'", (xa, d, xb, e), b, _comm(t1, t2))


_CATALOGS = {
    "nielsen": lambda n, k: nielsen_relators(n),
    "jensen_wahl": lambda n, k: jensen_wahl_relators(n),
    "rk0": lambda n, k: rk0_instances(n),
    "zn": lambda n, k: zn_relators(n),
    "table1": table1_instances,
    "s1prime": s1prime_instances,
}


def relation_catalog(kind: str, n: int, k: int = 1) -> Iterator[RelationInstance]:
    """Exhaustively enumerate a relation family's instances."""
    if kind not in _CATALOGS:
        raise ValueError(f"unknown catalog {kind!r}; have {sorted(_CATALOGS)}")
    if n < 2:
        raise ValueError("catalogs need n >= 2")
    return iter(_CATALOGS[kind](n, k))


# ---------------------------------------------------------------------------
# reduction to a smaller generating set


def genset_reduce(t, allowed, n: int) -> SymWord:
    """Rewrite a commutator transvection over a chosen subset.

    ``allowed`` maps each ordered x-pair (a, b) of generator codes to the
    one representative Mc[a^alpha, y^eps, b^beta] kept for that pair.  The
    rewrites used are the three sign-flipping relation families (third
    letter, middle letter, first letter), so the result interprets to the
    same automorphism.
    """
    basis = std_basis(n)
    y = basis.y(1)
    if t[0] != "Mc":
        return SymWord(basis, (t,))
    (a, al), (p, ps), (q, qs) = t[1], t[2], t[3]
    if p != y:
        raise ValueError("expected an S_K commutator transvection")
    rep = allowed[(a, q)]
    (_, ral), (_, rps), (_, rqs) = rep[1], rep[2], rep[3]

    def expand(al, ps, qs):
        if (al, ps, qs) == (ral, rps, rqs):
            return (Mc(a, al, y, ps, q, qs),)
        if qs != rqs:
            # third-letter flip
            inner = expand(al, ps, -qs)
            inner_inv = tuple(token_inv(x) for x in reversed(inner))
            return (C(y, q, qs),) + inner_inv + (C(y, q, -qs),)
        if ps != rps:
            # middle-letter flip
            inner = expand(al, -ps, qs)
            inner_inv = tuple(token_inv(x) for x in reversed(inner))
            return (C(q, y, ps),) + inner_inv + (C(q, y, -ps),)
        # first-letter flip
        inner = expand(-al, ps, qs)
        inner_inv = tuple(token_inv(x) for x in reversed(inner))
        return inner_inv + (C(y, q, qs), C(a, y, -ps), C(y, q, -qs), C(a, y, ps))

    return SymWord(basis, expand(al, ps, qs))


def verify_instance(inst: RelationInstance) -> bool:
    """Interpret the relator; True when it is the identity automorphism."""
    return interpret(inst.word.tokens, inst.word.basis).is_identity
