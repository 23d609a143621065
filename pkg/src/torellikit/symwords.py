"""Symbolic words over the named-generator alphabets.

Generators of the groups in play are modeled as tagged tokens:

* ``("M", (z, zs), (v, vs))`` -- transvection ``M[z^zs, v^vs]``,
* ``("C", (u, 1), (w, ws))`` -- conjugation move ``C[u, w^ws]``,
* ``("Mc", (a, A), (p, P), (q, Q))`` -- commutator transvection
  ``Mc[a^A, p^P, q^Q]`` = ``M[a^A, [p^P, q^Q]]``,
* ``("P", a, b)`` -- swap, ``("I", a)`` -- inversion,

where letters are generator codes of a :class:`~torellikit.words.Basis`.
Inverses are encoded structurally: swaps and inversions are their own
inverses, ``M[z^a, v]^-1 = M[z^a, v^-1]``, ``C[u, w]^-1 = C[u, w^-1]``, and
``Mc[a, p, q]^-1 = Mc[a, q, p]``.  The sign of the first parameter of a
``C`` token is dropped at construction: conjugating ``u`` or ``u^-1`` is
the same automorphism.

A :class:`SymWord` is a freely reduced token sequence, optionally pinned to
one of the alphabets ``S_A``, ``S_Z``, ``S_Q``, ``S_K``, ``S_C`` (all over
the basis ``x1..xn, y``).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import autos
from .words import Basis, Word, commutator

ALPHABETS = ("S_A", "S_Z", "S_Q", "S_K", "S_C")


# ---------------------------------------------------------------------------
# tokens


def M(z, zsign, v, vsign=1):
    if zsign not in (1, -1) or vsign not in (1, -1):
        raise ValueError("signs must be +-1")
    if z == v:
        raise ValueError("transvection parameters must be distinct")
    return ("M", (z, zsign), (v, vsign))


def C(u, w, wsign=1):
    if wsign not in (1, -1):
        raise ValueError("signs must be +-1")
    if u == w:
        raise ValueError("conjugation parameters must be distinct")
    return ("C", (u, 1), (w, wsign))


def Mc(a, asign, p, psign, q, qsign):
    if asign not in (1, -1) or psign not in (1, -1) or qsign not in (1, -1):
        raise ValueError("signs must be +-1")
    if len({a, p, q}) != 3:
        raise ValueError("commutator transvection parameters must be distinct")
    return ("Mc", (a, asign), (p, psign), (q, qsign))


def P(a, b):
    if a == b:
        raise ValueError("swap parameters must be distinct")
    return ("P", min(a, b), max(a, b))


def I(a):
    return ("I", a)


def token_inv(tok):
    tag = tok[0]
    if tag in ("P", "I"):
        return tok
    if tag == "M":
        (z, zs), (v, vs) = tok[1], tok[2]
        return ("M", (z, zs), (v, -vs))
    if tag == "C":
        u, (w, ws) = tok[1], tok[2]
        return ("C", u, (w, -ws))
    if tag == "Mc":
        return ("Mc", tok[1], tok[3], tok[2])
    raise ValueError(f"unknown token {tok!r}")


def _reduce_tokens(tokens) -> tuple:
    out = []
    for tok in tokens:
        if out and out[-1] == token_inv(tok):
            out.pop()
        else:
            out.append(tok)
    return tuple(out)


# ---------------------------------------------------------------------------
# symbolic words


@dataclass(frozen=True)
class SymWord:
    """Freely reduced word of generator tokens over a fixed basis."""

    basis: Basis
    tokens: tuple
    alphabet: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "tokens", _reduce_tokens(self.tokens))
        if self.alphabet is not None:
            if self.alphabet not in ALPHABETS:
                raise ValueError(f"unknown alphabet {self.alphabet!r}")
            for tok in self.tokens:
                if not in_alphabet(tok, self.alphabet, self.basis.n):
                    raise ValueError(
                        f"token {format_token(tok, self.basis)} outside {self.alphabet}"
                    )

    def __len__(self):
        return len(self.tokens)

    def __bool__(self):
        return bool(self.tokens)

    def __mul__(self, other: "SymWord") -> "SymWord":
        if self.basis != other.basis:
            raise ValueError("cannot multiply words over different bases")
        if self.alphabet != other.alphabet:
            raise ValueError("cannot multiply words over different alphabets")
        return SymWord(self.basis, self.tokens + other.tokens, self.alphabet)

    def inv(self) -> "SymWord":
        return SymWord(
            self.basis,
            tuple(token_inv(t) for t in reversed(self.tokens)),
            self.alphabet,
        )

    def __pow__(self, e: int) -> "SymWord":
        if e < 0:
            return self.inv() ** (-e)
        out = SymWord(self.basis, (), self.alphabet)
        for _ in range(e):
            out = out * self
        return out

    def __str__(self):
        return format_word(self.tokens, self.basis)

    def to_endo(self) -> autos.Endo:
        return interpret(self.tokens, self.basis)


def sym_mul(u: SymWord, v: SymWord) -> SymWord:
    return u * v


def sym_inv(u: SymWord) -> SymWord:
    return u.inv()


def sym_commutator(u: SymWord, v: SymWord) -> SymWord:
    return u * v * u.inv() * v.inv()


# ---------------------------------------------------------------------------
# alphabets (over the basis x1..xn, y; so k = 1)


def std_basis(n: int) -> Basis:
    return Basis(n, 1)


def alphabet(kind: str, n: int) -> list:
    """All generator tokens of the given alphabet at rank n (k = 1)."""
    if n < 2:
        raise ValueError("alphabets need n >= 2")
    b = std_basis(n)
    y = b.y(1)
    xs = [b.x(i) for i in range(1, n + 1)]
    gens = []
    if kind in ("S_A", "S_Q", "S_C"):
        for a in xs:
            for c in xs:
                if a != c:
                    gens.append(M(a, 1, c))
                    gens.append(M(a, -1, c))
        for i, a in enumerate(xs):
            for c in xs[i + 1:]:
                gens.append(P(a, c))
        for a in xs:
            gens.append(I(a))
    if kind in ("S_Z", "S_Q"):
        for a in xs:
            gens.append(M(a, 1, y))
    if kind == "S_C":
        for a in xs:
            gens.append(M(a, 1, y))
            gens.append(M(a, -1, y))
            gens.append(C(y, a))
    if kind == "S_K":
        for a in xs:
            gens.append(C(y, a))
            gens.append(C(a, y))
        for a in xs:
            for c in xs:
                if a == c:
                    continue
                for asign in (1, -1):
                    for eps in (1, -1):
                        for csign in (1, -1):
                            gens.append(Mc(a, asign, y, eps, c, csign))
    if not gens:
        raise ValueError(f"unknown alphabet {kind!r}")
    return gens


def is_generator(tok, kind: str, n: int) -> bool:
    """Whether the token is a generator (not an inverse) of the alphabet."""
    b = std_basis(n)
    y = b.y(1)
    tag = tok[0]
    if kind in ("S_A", "S_Q", "S_C"):
        if tag == "P":
            return b.is_x(tok[1]) and b.is_x(tok[2])
        if tag == "I":
            return b.is_x(tok[1])
        if tag == "M":
            (z, _), (v, vs) = tok[1], tok[2]
            if b.is_x(z) and b.is_x(v) and vs == 1:
                return True
    if kind in ("S_Z", "S_Q"):
        if tag == "M":
            (z, zs), (v, vs) = tok[1], tok[2]
            if b.is_x(z) and zs == 1 and v == y and vs == 1:
                return True
    if kind == "S_C":
        if tag == "M":
            (z, _), (v, vs) = tok[1], tok[2]
            if b.is_x(z) and v == y and vs == 1:
                return True
        if tag == "C":
            (u, _), (w, ws) = tok[1], tok[2]
            if u == y and b.is_x(w) and ws == 1:
                return True
    if kind == "S_K":
        if tag == "C":
            (u, _), (w, ws) = tok[1], tok[2]
            if u == y and b.is_x(w) and ws == 1:
                return True
            if b.is_x(u) and w == y and ws == 1:
                return True
        if tag == "Mc":
            (a, _), (p, _), (q, _) = tok[1], tok[2], tok[3]
            return b.is_x(a) and p == y and b.is_x(q)
    return False


def in_alphabet(tok, kind: str, n: int) -> bool:
    return is_generator(tok, kind, n) or is_generator(token_inv(tok), kind, n)


def signed_alphabet(kind: str, n: int) -> list:
    """Generators plus inverses, deduplicated (swaps and inversions are
    their own inverses)."""
    gens = alphabet(kind, n)
    out = list(gens)
    seen = set(gens)
    for g in gens:
        t = token_inv(g)
        if t not in seen:
            seen.add(t)
            out.append(t)
    return out


# ---------------------------------------------------------------------------
# interpretation as automorphisms

_ENDO_CACHE: dict = {}


def token_endo(tok, basis: Basis) -> autos.Endo:
    """The concrete automorphism of F_{n,k} named by a token."""
    key = (basis, tok)
    cached = _ENDO_CACHE.get(key)
    if cached is not None:
        return cached
    tag = tok[0]
    if tag == "M":
        (z, zs), (v, vs) = tok[1], tok[2]
        f = autos.transvection(basis, z, zs, Word(basis, ((v, vs),)))
    elif tag == "C":
        (u, _), (w, ws) = tok[1], tok[2]
        f = autos.conjugation(basis, u, w, ws)
    elif tag == "Mc":
        (a, asign), (p, ps), (q, qs) = tok[1], tok[2], tok[3]
        v = commutator(Word(basis, ((p, ps),)), Word(basis, ((q, qs),)))
        f = autos.transvection(basis, a, asign, v)
    elif tag == "P":
        f = autos.swap(basis, tok[1], tok[2])
    elif tag == "I":
        f = autos.inversion(basis, tok[1])
    else:
        raise ValueError(f"unknown token {tok!r}")
    _ENDO_CACHE[key] = f
    return f


def interpret(tokens, basis: Basis) -> autos.Endo:
    """Compose the named automorphisms, rightmost token applied first.

    This is the evaluation homomorphism from symbolic words to Aut(F_{n,k});
    in particular ``interpret(u * v) = interpret(u) * interpret(v)``.
    """
    if isinstance(tokens, SymWord):
        tokens = tokens.tokens
    out = autos.identity(basis)
    for tok in tokens:
        out = out * token_endo(tok, basis)
    return out


# ---------------------------------------------------------------------------
# relator insertion


def applyrels(start: SymWord, steps) -> SymWord:
    """Insert relator words into a word, reducing after each insertion.

    ``steps`` is a sequence of ``(insert, position)`` pairs; each position
    indexes into the token sequence of the *current* (already reduced) word,
    so ``0 <= position <= len(word)`` at that step.
    """
    word = start
    for idx, (insert, pos) in enumerate(steps):
        if insert.basis != word.basis:
            raise ValueError(f"step {idx}: insert word over the wrong basis")
        if not 0 <= pos <= len(word.tokens):
            raise ValueError(
                f"step {idx}: position {pos} out of range 0..{len(word.tokens)}"
            )
        tokens = word.tokens[:pos] + insert.tokens + word.tokens[pos:]
        word = SymWord(word.basis, tokens, word.alphabet)
    return word


# ---------------------------------------------------------------------------
# text notation


def format_token(tok, basis: Basis) -> str:
    tag = tok[0]

    def letter(pair):
        code, sign = pair
        name = basis.gen_name(code)
        return name if sign == 1 else f"{name}^-1"

    if tag == "P":
        return f"P[{tok[1] + 1},{tok[2] + 1}]"
    if tag == "I":
        return f"I[{tok[1] + 1}]"
    if tag == "M":
        return f"M[{letter(tok[1])},{letter(tok[2])}]"
    if tag == "C":
        return f"C[{letter(tok[1])},{letter(tok[2])}]"
    if tag == "Mc":
        return f"Mc[{letter(tok[1])},{letter(tok[2])},{letter(tok[3])}]"
    raise ValueError(f"unknown token {tok!r}")


def format_word(tokens, basis: Basis) -> str:
    if isinstance(tokens, SymWord):
        tokens = tokens.tokens
    if not tokens:
        return "1"
    return " * ".join(format_token(t, basis) for t in tokens)


def parse_token(text: str, basis: Basis):
    text = text.strip()
    invert = False
    if text.endswith("]^-1"):
        invert = True
        text = text[:-3]
    elif text.endswith("]^1"):
        text = text[:-2]
    if not text.endswith("]") or "[" not in text:
        raise ValueError(f"cannot parse token {text!r}")
    tag, body = text[:-1].split("[", 1)
    tag = tag.strip()
    parts = [p.strip() for p in body.split(",")]
    if tag == "P":
        if len(parts) != 2:
            raise ValueError(f"swap token needs two indices: {text!r}")
        tok = P(basis.x(int(parts[0])), basis.x(int(parts[1])))
    elif tag == "I":
        if len(parts) != 1:
            raise ValueError(f"inversion token needs one index: {text!r}")
        tok = I(basis.x(int(parts[0])))
    elif tag == "M":
        (z, zs), (v, vs) = (basis.parse_letter(p) for p in parts)
        tok = M(z, zs, v, vs)
    elif tag == "C":
        # the conjugated letter's sign does not change the automorphism
        (u, _), (w, ws) = (basis.parse_letter(p) for p in parts)
        tok = C(u, w, ws)
    elif tag == "Mc":
        if len(parts) != 3:
            raise ValueError(f"Mc token needs three letters: {text!r}")
        (a, asign), (p, ps), (q, qs) = (basis.parse_letter(x) for x in parts)
        tok = Mc(a, asign, p, ps, q, qs)
    else:
        raise ValueError(f"unknown token tag {tag!r}")
    return token_inv(tok) if invert else tok


def parse_word(text: str, basis: Basis, alphabet: str | None = None) -> SymWord:
    text = text.strip()
    if text in ("", "1"):
        return SymWord(basis, (), alphabet)
    tokens = [parse_token(part, basis) for part in text.split("*")]
    return SymWord(basis, tuple(tokens), alphabet)
