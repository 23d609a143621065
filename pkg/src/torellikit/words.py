"""Freely reduced words in a free group with a split basis.

The free group here has two families of generators, written ``x1..xn`` and
``y1..yk``.  Words are immutable: every operation returns a new, freely
reduced word.  Letters are pairs ``(code, sign)`` where ``code`` is an
integer generator code (x-generators first, then y-generators) and ``sign``
is +1 or -1.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Basis:
    """A free basis with ``n`` x-generators and ``k`` y-generators."""

    n: int
    k: int = 0

    def __post_init__(self):
        if self.n < 0 or self.k < 0 or self.n + self.k < 1:
            raise ValueError("basis needs n, k >= 0 and n + k >= 1")

    @property
    def size(self) -> int:
        return self.n + self.k

    def x(self, i: int) -> int:
        """Generator code of ``x_i`` (1-based)."""
        if not 1 <= i <= self.n:
            raise ValueError(f"x-index {i} out of range 1..{self.n}")
        return i - 1

    def y(self, j: int) -> int:
        """Generator code of ``y_j`` (1-based)."""
        if not 1 <= j <= self.k:
            raise ValueError(f"y-index {j} out of range 1..{self.k}")
        return self.n + j - 1

    def is_x(self, code: int) -> bool:
        return 0 <= code < self.n

    def is_y(self, code: int) -> bool:
        return self.n <= code < self.size

    def gen_name(self, code: int) -> str:
        if self.is_x(code):
            return f"x{code + 1}"
        if self.is_y(code):
            return f"y{code - self.n + 1}"
        raise ValueError(f"generator code {code} out of range for {self}")

    def parse_letter(self, text: str) -> tuple[int, int]:
        """Parse a single signed letter such as ``x2``, ``y1^-1`` or ``y``."""
        name, sign = text, 1
        if "^" in text:
            name, exp = text.split("^", 1)
            sign = int(exp)
            if sign not in (1, -1):
                raise ValueError(f"letter exponent must be +-1, got {text!r}")
        if name == "y" and self.k == 1:
            return self.y(1), sign
        if len(name) < 2 or name[0] not in "xy" or not name[1:].isdigit():
            raise ValueError(f"cannot parse letter {text!r}")
        idx = int(name[1:])
        code = self.x(idx) if name[0] == "x" else self.y(idx)
        return code, sign

    def word(self, text: str = "") -> "Word":
        """Parse whitespace-separated letters: ``"x1 x2^-1 y1"``."""
        letters = [self.parse_letter(part) for part in text.split()]
        return Word(self, letters)

    def gen(self, text: str) -> "Word":
        code, sign = self.parse_letter(text)
        return Word(self, ((code, sign),))

    def identity_word(self) -> "Word":
        return Word(self, ())

    def generators(self) -> list["Word"]:
        return [Word(self, ((code, 1),)) for code in range(self.size)]


def _reduce(letters) -> tuple:
    out = []
    for code, sign in letters:
        if sign not in (1, -1):
            raise ValueError(f"letter sign must be +-1, got {sign}")
        if out and out[-1][0] == code and out[-1][1] == -sign:
            out.pop()
        else:
            out.append((code, sign))
    return tuple(out)


class Word:
    """A freely reduced word.  The empty word is the group identity."""

    __slots__ = ("basis", "letters", "_hash")

    def __init__(self, basis: Basis, letters=()):
        self.basis = basis
        for code, _ in letters:
            if not 0 <= code < basis.size:
                raise ValueError(f"generator code {code} out of range for {basis}")
        self.letters = _reduce(letters)
        self._hash = None

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Word)
            and self.basis == other.basis
            and self.letters == other.letters
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.basis, self.letters))
        return self._hash

    def __mul__(self, other: "Word") -> "Word":
        if self.basis != other.basis:
            raise ValueError("cannot multiply words over different bases")
        return Word(self.basis, self.letters + other.letters)

    def inv(self) -> "Word":
        return Word(self.basis, tuple((c, -s) for c, s in reversed(self.letters)))

    def __pow__(self, e: int) -> "Word":
        if e < 0:
            return self.inv() ** (-e)
        out = Word(self.basis, ())
        for _ in range(e):
            out = out * self
        return out

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        parts = []
        for code, sign in self.letters:
            name = self.basis.gen_name(code)
            parts.append(name if sign == 1 else f"{name}^-1")
        return " ".join(parts)

    __repr__ = __str__

    def abelianize(self) -> tuple:
        """Exponent-sum vector in the ordered basis x1..xn, y1..yk."""
        vec = [0] * self.basis.size
        for code, sign in self.letters:
            vec[code] += sign
        return tuple(vec)

    def cyclic_reduce(self) -> tuple["Word", "Word"]:
        """Return ``(core, conjugator)`` with ``self = conj * core * conj^-1``."""
        letters = list(self.letters)
        prefix = []
        while len(letters) >= 2 and letters[0][0] == letters[-1][0] \
                and letters[0][1] == -letters[-1][1]:
            prefix.append(letters[0])
            letters = letters[1:-1]
        return Word(self.basis, letters), Word(self.basis, prefix)

    def mentions(self, code: int) -> bool:
        return any(c == code for c, _ in self.letters)


def mul(*words: Word) -> Word:
    """Freely reduced product of any number of words over one basis."""
    if not words:
        raise ValueError("mul needs at least one word")
    out = words[0]
    for w in words[1:]:
        out = out * w
    return out


def inv(w: Word) -> Word:
    return w.inv()


def commutator(u: Word, v: Word) -> Word:
    """The commutator ``u v u^-1 v^-1``."""
    return u * v * u.inv() * v.inv()


def conjugate(u: Word, by: Word) -> Word:
    """``by * u * by^-1``."""
    return by * u * by.inv()


def is_conjugate(u: Word, v: Word) -> bool:
    """Whether two words are conjugate in the free group.

    Exact: conjugacy classes of free-group elements are cyclic words, so two
    words are conjugate iff their cyclically reduced cores agree up to
    rotation.
    """
    if u.basis != v.basis:
        raise ValueError("cannot compare words over different bases")
    core_u, _ = u.cyclic_reduce()
    core_v, _ = v.cyclic_reduce()
    if len(core_u) != len(core_v):
        return False
    if not core_u:
        return True
    doubled = core_v.letters + core_v.letters
    m = len(core_u.letters)
    return any(doubled[i:i + m] == core_u.letters for i in range(m))
