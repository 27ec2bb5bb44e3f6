"""Words over named generators, free reduction, and the presentation file format.

A word is a sequence of letters g or g^-1 over the generators of a
presentation.  Internally each letter is a small integer: generator i
contributes 2*i, its inverse 2*i + 1, so flipping a sign is ``col ^ 1``.
This encoding doubles as the column index of a coset table, which keeps
the enumeration engine free of translation layers.

The file format is line oriented, UTF-8, with ``#`` starting a comment:

    gens s1 s2 s3          # exactly one such line, first in the file
    rel s1^4
    rel (s1 s2)^2
    rel s1 s2 = s2 s1      # equations are normalised to u v^-1
    sigma s1 s2 s3         # optional: distinguished rotation generators

Word grammar:  word := term+ ;  term := name [^int] | "(" word ")" [^int].
On a ``sigma``/``rho`` line each top-level term is one distinguished word,
so compound words must be parenthesised: ``sigma d (s1 s2 d^-1)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import ParseError

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


def _reduce_cols(cols) -> tuple:
    out = []
    for c in cols:
        if out and out[-1] == c ^ 1:
            out.pop()
        else:
            out.append(c)
    return tuple(out)


class Word:
    """A word in the free group; not reduced automatically.

    Multiplication concatenates, ``~w`` inverts, ``w ** k`` repeats.
    ``reduce()`` returns the freely reduced form and is idempotent.
    """

    __slots__ = ("_cols",)

    def __init__(self, cols=()):
        cols = tuple(cols)
        for c in cols:
            if not isinstance(c, int) or c < 0:
                raise ValueError(f"bad letter encoding: {c!r}")
        self._cols = cols

    @classmethod
    def gen(cls, index: int, power: int = 1) -> "Word":
        if index < 0:
            raise ValueError("generator index must be >= 0")
        col = 2 * index if power >= 0 else 2 * index + 1
        return cls((col,) * abs(power))

    @classmethod
    def identity(cls) -> "Word":
        return cls(())

    @classmethod
    def from_letters(cls, letters) -> "Word":
        """Build from (generator index, sign) pairs with sign in {+1, -1}."""
        cols = []
        for g, s in letters:
            if s not in (1, -1):
                raise ValueError(f"sign must be +1 or -1, got {s}")
            cols.append(2 * g + (0 if s == 1 else 1))
        return cls(cols)

    def cols(self) -> tuple:
        return self._cols

    @property
    def letters(self) -> tuple:
        """Letters as (generator index, sign) pairs."""
        return tuple((c >> 1, -1 if c & 1 else 1) for c in self._cols)

    def reduce(self) -> "Word":
        return Word(_reduce_cols(self._cols))

    def is_reduced(self) -> bool:
        cols = self._cols
        return all(cols[i + 1] != cols[i] ^ 1 for i in range(len(cols) - 1))

    def max_gen(self) -> int:
        """Largest generator index used, or -1 for the empty word."""
        return max((c >> 1 for c in self._cols), default=-1)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self._cols + other._cols)

    def __invert__(self) -> "Word":
        return Word(tuple(c ^ 1 for c in reversed(self._cols)))

    def __pow__(self, k: int) -> "Word":
        if k >= 0:
            return Word(self._cols * k)
        return Word((~self)._cols * (-k))

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self._cols == other._cols

    def __hash__(self):
        return hash(self._cols)

    def __len__(self):
        return len(self._cols)

    def __bool__(self):
        return bool(self._cols)

    def __repr__(self):
        return f"Word({self._cols!r})"

    def text(self, names) -> str:
        """Render with generator names, run-length collapsing powers."""
        if not self._cols:
            return "1"
        parts = []
        i, cols = 0, self._cols
        while i < len(cols):
            j = i
            while j < len(cols) and cols[j] == cols[i]:
                j += 1
            g, run = cols[i] >> 1, j - i
            exp = run if cols[i] & 1 == 0 else -run
            parts.append(names[g] if exp == 1 else f"{names[g]}^{exp}")
            i = j
        return " ".join(parts)


EPSILON = Word.identity()


def reduce(w: Word) -> Word:
    """Freely reduced form of w."""
    return w.reduce()


def invert(w: Word) -> Word:
    """Inverse word: reversed letters with flipped signs."""
    return ~w


def substitute(w: Word, images) -> Word:
    """Replace each letter of w by its image word; result is reduced.

    ``images[g]`` is substituted for generator g, its inverse for g^-1.
    """
    images = list(images)
    n = w.max_gen() + 1
    if len(images) < n:
        raise ValueError(f"need {n} image words, got {len(images)}")
    cols = []
    for c in w.cols():
        img = images[c >> 1]
        cols.extend(img.cols() if c & 1 == 0 else (~img).cols())
    return Word(_reduce_cols(cols))


@dataclass(frozen=True)
class GeneratorSymbol:
    name: str
    index: int

    def __post_init__(self):
        if not _NAME_RE.fullmatch(self.name):
            raise ValueError(f"bad generator name: {self.name!r}")


@dataclass(frozen=True)
class Presentation:
    """Generators, relator words, and optional distinguished generators.

    ``distinguished_kind`` is "sigma" for rotation generators or "rho"
    for involutory reflection generators, mirroring the input line used.
    """

    generators: tuple
    relators: tuple = ()
    distinguished: tuple | None = None
    distinguished_kind: str | None = None

    def __post_init__(self):
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator names")
        for i, g in enumerate(self.generators):
            if g.index != i:
                raise ValueError("generator indices must match positions")
        ngens = len(self.generators)
        for w in self.relators:
            if w.max_gen() >= ngens:
                raise ValueError("relator references undeclared generator")
        if self.distinguished is not None:
            if not 2 <= len(self.distinguished) <= 4:
                raise ValueError("distinguished list must have 2 to 4 words")
            if self.distinguished_kind not in ("sigma", "rho"):
                raise ValueError("distinguished_kind must be 'sigma' or 'rho'")
            for w in self.distinguished:
                if w.max_gen() >= ngens:
                    raise ValueError(
                        "distinguished word references undeclared generator"
                    )

    @classmethod
    def build(cls, names, relators=(), distinguished=None, kind=None):
        gens = tuple(GeneratorSymbol(n, i) for i, n in enumerate(names))
        return cls(
            gens,
            tuple(relators),
            tuple(distinguished) if distinguished is not None else None,
            kind,
        )

    @property
    def names(self) -> tuple:
        return tuple(g.name for g in self.generators)

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def gen_index(self, name: str) -> int:
        for g in self.generators:
            if g.name == name:
                return g.index
        raise KeyError(name)

    def word(self, text: str) -> Word:
        """Parse a word in this presentation's generators."""
        return _parse_word_text(text, {n: i for i, n in enumerate(self.names)})

    def with_relators(self, *extra: Word) -> "Presentation":
        for w in extra:
            if w.max_gen() >= self.ngens:
                raise ValueError("relator references undeclared generator")
        return Presentation(
            self.generators,
            self.relators + tuple(w.reduce() for w in extra),
            self.distinguished,
            self.distinguished_kind,
        )

    def with_generator(self, name: str) -> "Presentation":
        gens = self.generators + (GeneratorSymbol(name, self.ngens),)
        return Presentation(
            gens, self.relators, self.distinguished, self.distinguished_kind
        )


# --- parsing ---------------------------------------------------------------

_TOKEN_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*|\^-?\d+|[()=]|\S")


def _tokenize(line: str, lineno: int):
    tokens = []
    for m in _TOKEN_RE.finditer(line):
        t = m.group()
        if t[0] == "^" and len(t) > 1:
            tokens.append(("exp", int(t[1:])))
        elif t in "()=":
            tokens.append((t, t))
        elif _NAME_RE.fullmatch(t):
            tokens.append(("name", t))
        else:
            raise ParseError(lineno, f"unexpected character {t!r}")
    return tokens


class _WordParser:
    def __init__(self, tokens, gen_map, lineno):
        self.tokens = tokens
        self.pos = 0
        self.gen_map = gen_map
        self.lineno = lineno

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def term(self) -> Word:
        kind, val = self.tokens[self.pos]
        if kind == "name":
            self.pos += 1
            if val not in self.gen_map:
                raise ParseError(self.lineno, f"undeclared generator {val!r}")
            base = Word.gen(self.gen_map[val])
        elif kind == "(":
            self.pos += 1
            base = self.word()
            nxt = self.peek()
            if nxt is None or nxt[0] != ")":
                raise ParseError(self.lineno, "missing ')'")
            self.pos += 1
        else:
            raise ParseError(self.lineno, f"unexpected token {val!r}")
        nxt = self.peek()
        if nxt is not None and nxt[0] == "exp":
            self.pos += 1
            base = base ** nxt[1]
        return base

    def word(self) -> Word:
        w = EPSILON
        while True:
            nxt = self.peek()
            if nxt is None or nxt[0] in (")", "="):
                return w
            w = w * self.term()

    def terms(self):
        """Top-level terms of the remaining input, one word each."""
        out = []
        while self.peek() is not None:
            out.append(self.term())
        return out


def _parse_word_text(text: str, gen_map) -> Word:
    p = _WordParser(_tokenize(text, 0), gen_map, 0)
    w = p.word()
    if p.peek() is not None:
        raise ParseError(0, f"unexpected token {p.peek()[1]!r}")
    return w


def parse_presentation(text: str) -> Presentation:
    """Parse the file format described in the module docstring."""
    names: list = []
    gen_map: dict = {}
    relators: list = []
    distinguished = None
    kind = None
    seen_gens = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split(None, 1)
        head, rest = fields[0], fields[1] if len(fields) > 1 else ""
        if head == "gens":
            if seen_gens:
                raise ParseError(lineno, "duplicate gens line")
            seen_gens = True
            for name in rest.split():
                if not _NAME_RE.fullmatch(name):
                    raise ParseError(lineno, f"bad generator name {name!r}")
                if name in gen_map:
                    raise ParseError(lineno, f"duplicate generator name {name!r}")
                gen_map[name] = len(names)
                names.append(name)
            if not names:
                raise ParseError(lineno, "gens line declares no generators")
            continue
        if not seen_gens:
            raise ParseError(lineno, "first directive must be 'gens'")
        if head == "rel":
            tokens = _tokenize(rest, lineno)
            parser = _WordParser(tokens, gen_map, lineno)
            sides = [parser.word()]
            while parser.peek() is not None and parser.peek()[0] == "=":
                parser.pos += 1
                sides.append(parser.word())
            if parser.peek() is not None:
                raise ParseError(lineno, f"unexpected token {parser.peek()[1]!r}")
            if len(sides) == 1:
                relators.append(sides[0].reduce())
            else:
                for u, v in zip(sides, sides[1:]):
                    relators.append((u * ~v).reduce())
        elif head in ("sigma", "rho"):
            if distinguished is not None:
                raise ParseError(lineno, "duplicate sigma/rho line")
            parser = _WordParser(_tokenize(rest, lineno), gen_map, lineno)
            words = parser.terms()
            if not 2 <= len(words) <= 4:
                raise ParseError(lineno, f"{head} line needs 2 to 4 words")
            distinguished = tuple(words)
            kind = head
        else:
            raise ParseError(lineno, f"unknown directive {head!r}")

    if not seen_gens:
        raise ParseError(1, "missing gens line")
    return Presentation.build(names, relators, distinguished, kind)


def serialize_presentation(p: Presentation) -> str:
    """Inverse of parse_presentation for reduced-relator presentations."""
    names = p.names
    lines = ["gens " + " ".join(names)]
    for r in p.relators:
        if r:
            lines.append("rel " + r.text(names))
    if p.distinguished is not None:
        parts = []
        for w in p.distinguished:
            t = w.text(names)
            parts.append(f"({t})" if " " in t else t)
        lines.append(f"{p.distinguished_kind} " + " ".join(parts))
    return "\n".join(lines) + "\n"
