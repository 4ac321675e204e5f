"""Presentation files: a small line-oriented grammar with commutator sugar.

    gens: x y
    rels: r1 = [x,y] ; r2 = x^2 * y^-1
    field: F2          (default Q)
    trunc: 4           (default 4)

Words multiply left to right; `*` between terms is optional; `x^n`
expands before free reduction; `[u,v]` is u v u⁻¹ v⁻¹.  `#` starts a
comment.  Errors carry line/column positions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .fields import QQ, Field, field_from_name
from .words import GroupWord, commutator

DEFAULT_TRUNC = 4


@dataclass(frozen=True)
class Presentation:
    generators: tuple
    relators: tuple  # of (label, GroupWord)
    field: Field = QQ
    trunc: int = DEFAULT_TRUNC

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise ParseError("duplicate generator names")
        labels = [lab for lab, _ in self.relators]
        if len(set(labels)) != len(labels):
            raise ParseError("duplicate relator labels")
        n = len(self.generators)
        for lab, w in self.relators:
            if w.max_generator() >= n:
                raise ParseError(f"relator {lab} uses an undeclared generator")
        if self.trunc < 1:
            raise ParseError("trunc must be >= 1")

    @property
    def n_gens(self):
        return len(self.generators)

    def gen_index(self, name):
        return self.generators.index(name)

    def relator_labels(self):
        return tuple(lab for lab, _ in self.relators)

    def relator(self, label):
        for lab, w in self.relators:
            if lab == label:
                return w
        raise KeyError(label)


class _WordParser:
    def __init__(self, text, line, col0, generators):
        self.text = text
        self.line = line
        self.col0 = col0
        self.pos = 0
        self.generators = list(generators)

    def error(self, msg):
        raise ParseError(msg, self.line, self.col0 + self.pos + 1)

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def _peek(self):
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def _name(self):
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        if self.pos == start:
            self.error("expected a generator name")
        return self.text[start:self.pos]

    def _int(self):
        self._skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        token = self.text[start:self.pos]
        if not token.lstrip("+-"):
            self.error("expected an integer exponent")
        return int(token)

    def parse_word(self, stop_chars=()):
        w = GroupWord.identity()
        first = True
        while True:
            ch = self._peek()
            if ch is None or ch in stop_chars:
                if first:
                    self.error("empty word")
                return w
            if ch == "*":
                self.pos += 1
                continue
            w = w * self.parse_term()
            first = False

    def parse_term(self):
        ch = self._peek()
        if ch == "[":
            self.pos += 1
            u = self.parse_word(stop_chars=",")
            if self._peek() != ",":
                self.error("expected ',' in commutator")
            self.pos += 1
            v = self.parse_word(stop_chars="]")
            if self._peek() != "]":
                self.error("expected ']' closing commutator")
            self.pos += 1
            return commutator(u, v)
        name = self._name()
        if name == "1" and name not in self.generators:
            return GroupWord.identity()  # lets trivial relators round-trip
        if name not in self.generators:
            self.error(f"undeclared generator {name}")
        idx = self.generators.index(name)
        exp = 1
        if self._peek() == "^":
            self.pos += 1
            exp = self._int()
        return GroupWord.gen(idx) ** exp

    def expect_end(self):
        if self._peek() is not None:
            self.error(f"unexpected trailing input {self.text[self.pos:]!r}")


def parse_word(text, generators, line=1, col0=0) -> GroupWord:
    p = _WordParser(text, line, col0, generators)
    w = p.parse_word()
    p.expect_end()
    return w


def parse_presentation(text: str) -> Presentation:
    generators = None
    relators = []
    field = QQ
    trunc = DEFAULT_TRUNC
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if ":" not in line:
            raise ParseError("expected 'key: value'", lineno, 1)
        key, _, rest = line.partition(":")
        key = key.strip()
        if key in seen:
            raise ParseError(f"duplicate {key!r} line", lineno, 1)
        seen.add(key)
        col0 = len(line) - len(rest)
        if key == "gens":
            generators = tuple(rest.split())
            if not generators:
                raise ParseError("no generators declared", lineno, col0)
        elif key == "rels":
            if generators is None:
                raise ParseError("'rels' before 'gens'", lineno, 1)
            offset = col0
            for chunk in rest.split(";"):
                if not chunk.strip():
                    offset += len(chunk) + 1
                    continue
                if "=" not in chunk:
                    raise ParseError("expected '<label> = <word>'", lineno, offset + 1)
                lab, _, wtext = chunk.partition("=")
                label = lab.strip()
                if not label:
                    raise ParseError("empty relator label", lineno, offset + 1)
                wp = _WordParser(wtext, lineno, offset + len(lab) + 1, generators)
                w = wp.parse_word()
                wp.expect_end()
                relators.append((label, w))
                offset += len(chunk) + 1
        elif key == "field":
            try:
                field = field_from_name(rest)
            except ValueError as e:
                raise ParseError(str(e), lineno, col0) from None
        elif key == "trunc":
            try:
                trunc = int(rest.strip())
            except ValueError:
                raise ParseError(f"bad trunc value {rest.strip()!r}", lineno, col0) from None
        else:
            raise ParseError(f"unknown key {key!r}", lineno, 1)
    if generators is None:
        raise ParseError("missing 'gens' line")
    return Presentation(generators, tuple(relators), field, trunc)


def render_presentation(p: Presentation) -> str:
    lines = ["gens: " + " ".join(p.generators)]
    if p.relators:
        rels = " ; ".join(f"{lab} = {w.render(p.generators)}" for lab, w in p.relators)
        lines.append("rels: " + rels)
    lines.append("field: " + ("Q" if p.field.char == 0 else f"F{p.field.char}"))
    lines.append(f"trunc: {p.trunc}")
    return "\n".join(lines) + "\n"
