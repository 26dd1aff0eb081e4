"""Elements of the rank-2 free group on x and y, as canonically reduced words.

Words are reduced eagerly at construction, so ``==`` on Word is group
equality.  The letter alphabet is x, X, y, Y with X = x^-1 and Y = y^-1;
internally a word is a bytes string of letter codes (see kernel).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Union

from . import kernel

_CHARS = "xXyY"
_CODE_OF = {"x": 0, "X": 1, "y": 2, "Y": 3}

# Exponents in word expressions are capped at machine-integer range;
# anything larger is a parse error, never a silent wrap.
MAX_EXPONENT = 2**63 - 1


class ParseError(ValueError):
    """Malformed word expression; ``position`` is the 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


@dataclass(frozen=True)
class Generator:
    """One of the four letters: x or y with sign +1, or their inverses."""

    letter: str  # 'x' or 'y'
    sign: int  # +1 or -1

    @property
    def code(self) -> int:
        c = 0 if self.letter == "x" else 2
        return c if self.sign > 0 else c | 1

    def inverse(self) -> "Generator":
        return _GENERATORS[self.code ^ 1]

    def __str__(self) -> str:
        return _CHARS[self.code]


_GENERATORS = (
    Generator("x", 1),
    Generator("x", -1),
    Generator("y", 1),
    Generator("y", -1),
)
GEN_X, GEN_X_INV, GEN_Y, GEN_Y_INV = _GENERATORS

LettersLike = Union[str, bytes, bytearray, Iterable[Union[int, Generator]]]


class Word:
    """A freely reduced word in x, y and their inverses.

    Accepts a plain letter string over xXyY, a bytes string of letter
    codes, or an iterable of codes / Generator values; reduction happens
    here, so every Word is canonical.  Immutable by convention: no method
    mutates, all operations return fresh words.

    >>> Word("xX")
    Word('e')
    >>> Word("xy") * Word("Yx")
    Word('x^2')
    """

    __slots__ = ("_letters",)

    def __init__(self, letters: LettersLike = b""):
        if isinstance(letters, Word):
            self._letters = letters._letters
            return
        if isinstance(letters, str):
            try:
                codes = bytes(_CODE_OF[ch] for ch in letters)
            except KeyError as exc:
                raise ValueError(f"not a word letter: {exc.args[0]!r}") from None
        elif isinstance(letters, (bytes, bytearray)):
            codes = bytes(letters)
        else:
            codes = bytes(g.code if isinstance(g, Generator) else g for g in letters)
        if any(c > 3 for c in codes):
            raise ValueError("letter codes must be in 0..3")
        self._letters = kernel.reduce_word(codes)

    @classmethod
    def _from_reduced(cls, data: bytes) -> "Word":
        w = cls.__new__(cls)
        w._letters = data
        return w

    @classmethod
    def identity(cls) -> "Word":
        return _IDENTITY

    @property
    def codes(self) -> bytes:
        return self._letters

    @property
    def letters(self) -> tuple[Generator, ...]:
        return tuple(_GENERATORS[c] for c in self._letters)

    def is_identity(self) -> bool:
        return not self._letters

    def __len__(self) -> int:
        return len(self._letters)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Word) and self._letters == other._letters

    def __hash__(self) -> int:
        return hash(self._letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word._from_reduced(kernel.mul(self._letters, other._letters))

    def __invert__(self) -> "Word":
        return Word._from_reduced(kernel.inv(self._letters))

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return (~self) ** (-n)
        result = _IDENTITY
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def abelianize(self) -> tuple[int, int]:
        w = self._letters
        return w.count(0) - w.count(1), w.count(2) - w.count(3)

    def __str__(self) -> str:
        if not self._letters:
            return "e"
        parts = []
        run_char, run_len = _CHARS[self._letters[0]], 1
        for c in self._letters[1:]:
            ch = _CHARS[c]
            if ch == run_char:
                run_len += 1
            else:
                parts.append(run_char if run_len == 1 else f"{run_char}^{run_len}")
                run_char, run_len = ch, 1
        parts.append(run_char if run_len == 1 else f"{run_char}^{run_len}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


_IDENTITY = Word._from_reduced(b"")


def multiply(u: Word, v: Word) -> Word:
    """Freely reduced group product."""
    return u * v


def invert(u: Word) -> Word:
    return ~u


def commutator(g: Word, h: Word) -> Word:
    """g h g^-1 h^-1."""
    return g * h * ~g * ~h


def conjugate(g: Word, h: Word) -> Word:
    """h g h^-1."""
    return h * g * ~h


def power(g: Word, n: int) -> Word:
    return g**n


def abelianize(g: Word) -> tuple[int, int]:
    """Exponent sums (of x, of y); the image in Z^2."""
    return g.abelianize()


def in_commutator_subgroup(g: Word) -> bool:
    """True iff both exponent sums vanish."""
    return g.abelianize() == (0, 0)


def square_root(w: Word) -> Optional[Word]:
    """The unique v with v^2 == w, if w is a square; otherwise None.

    >>> square_root(parse("yx^2Y"))
    Word('yxY')
    """
    root = kernel.square_root(w.codes)
    return None if root is None else Word._from_reduced(root)


def three_squares(g: Word, h: Word) -> tuple[Word, Word, Word]:
    """(g, g^-1 h, h^-1): the squares of these multiply to [g, h]."""
    return g, ~g * h, ~h


def parse(expr: str) -> Word:
    """Parse a word expression into a reduced Word.

    Grammar: a word is a sequence of terms; a term is an atom with an
    optional ^integer; an atom is one of x, y, X, Y, e, a parenthesised
    word, or a commutator [u,v] meaning u v u^-1 v^-1.  X and Y denote
    the inverses of x and y, juxtaposition is the product, whitespace is
    ignored, and both "e" and "" denote the identity.

    >>> parse("[x,y]")
    Word('xyXY')
    >>> parse("[x^2,y^3]")
    Word('x^2y^3X^2Y^3')
    """
    parser = _Parser(expr)
    word = parser.parse_word(stoppers="")
    parser.skip_ws()
    if parser.pos != len(expr):
        raise ParseError(f"unexpected {expr[parser.pos]!r}", parser.pos)
    return word


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse_word(self, stoppers: str) -> Word:
        result = _IDENTITY
        while True:
            ch = self.peek()
            if ch == "" or ch in stoppers:
                return result
            result = result * self.parse_term()

    def parse_term(self) -> Word:
        atom = self.parse_atom()
        if self.peek() == "^":
            self.pos += 1
            return atom ** self.parse_int()
        return atom

    def parse_atom(self) -> Word:
        ch = self.peek()
        pos = self.pos
        if ch in _CODE_OF:
            self.pos += 1
            return Word._from_reduced(bytes([_CODE_OF[ch]]))
        if ch == "e":
            self.pos += 1
            return _IDENTITY
        if ch == "(":
            self.pos += 1
            inner = self.parse_word(stoppers=")")
            if self.peek() != ")":
                raise ParseError("unclosed '('", pos)
            self.pos += 1
            return inner
        if ch == "[":
            self.pos += 1
            left = self.parse_word(stoppers=",]")
            if self.peek() != ",":
                raise ParseError("expected ',' in commutator", pos)
            self.pos += 1
            right = self.parse_word(stoppers=",]")
            if self.peek() != "]":
                raise ParseError("unclosed '['", pos)
            self.pos += 1
            return commutator(left, right)
        if ch == "":
            raise ParseError("unexpected end of expression", self.pos)
        raise ParseError(f"unexpected {ch!r}", self.pos)

    def parse_int(self) -> int:
        self.skip_ws()
        start = self.pos
        sign = 1
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            sign = -1
            self.pos += 1
        digits_start = self.pos
        value = 0
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            value = value * 10 + int(self.text[self.pos])
            if value > MAX_EXPONENT:
                raise ParseError("exponent overflow", start)
            self.pos += 1
        if self.pos == digits_start:
            raise ParseError("expected an integer after '^'", start)
        return sign * value
