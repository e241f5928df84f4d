"""Parser for the textual function-spec language.

Forms::

    hex:<n>:<hex digits>        bit p of the integer is f at index p
    and:<n>  or:<n>  xor:<n>  maj:<n>  ind:<m>
    tribes:<r>x<c>
    sym:<n>:<profile bits, weight 0 first>
    zebra-affine:<n>:<l0>,<l1>,...,<ln>:<profile bits>
    compose(<spec>,<spec>)
    restrict(<spec>;<i>=<b>,...)
"""

from __future__ import annotations

import re

from . import core
from .core import Subcube, TruthTable


class ParseError(ValueError):
    pass


_INT = r"(\d+)"
_RAT = r"[-+]?\d+(?:/\d+|\.\d+)?"
_SIMPLE = {
    "and": core.and_,
    "or": core.or_,
    "xor": core.xor,
    "maj": core.maj,
    "ind": core.ind,
}


def parse_function(text: str) -> TruthTable:
    p = _Parser(text)
    f = p.spec()
    p.ws()
    if p.pos != len(p.text):
        raise ParseError(f"trailing input at column {p.pos}: {p.text[p.pos:]!r}")
    return f


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def eat(self, lit: str):
        self.ws()
        if not self.text.startswith(lit, self.pos):
            raise ParseError(f"expected {lit!r} at column {self.pos} in {self.text!r}")
        self.pos += len(lit)

    def match(self, pattern: str) -> re.Match:
        m = re.compile(pattern).match(self.text, self.pos)
        if not m:
            raise ParseError(f"malformed spec at column {self.pos}: {self.text[self.pos:]!r}")
        self.pos = m.end()
        return m

    def spec(self) -> TruthTable:
        self.ws()
        rest = self.text[self.pos:]
        try:
            if rest.startswith("compose("):
                self.pos += len("compose(")
                f = self.spec()
                self.eat(",")
                g = self.spec()
                self.eat(")")
                return core.compose(f, g)
            if rest.startswith("restrict("):
                self.pos += len("restrict(")
                f = self.spec()
                self.eat(";")
                fixed = {}
                while True:
                    m = self.match(r"\s*(\d+)\s*=\s*([01])\s*")
                    i = int(m.group(1))
                    if i in fixed:
                        raise ParseError(f"coordinate {i} restricted twice")
                    fixed[i] = int(m.group(2))
                    self.ws()
                    if self.text.startswith(",", self.pos):
                        self.pos += 1
                        continue
                    break
                self.eat(")")
                return core.restrict(f, Subcube(f.arity, fixed))
            return self.atom()
        except ParseError:
            raise
        except (ValueError, OverflowError) as exc:
            if isinstance(exc, core.CapExceeded):
                raise
            raise ParseError(str(exc)) from exc

    def atom(self) -> TruthTable:
        name = self.match(r"([a-z][a-z-]*):").group(1)
        if name in _SIMPLE:
            return _SIMPLE[name](int(self.match(_INT).group(1)))
        if name == "hex":
            m = self.match(_INT + r":([0-9a-fA-F]+)")
            n, bits = int(m.group(1)), int(m.group(2), 16)
            if n > core.MAX_ARITY:
                raise core.CapExceeded("hex", n, core.MAX_ARITY)
            if bits >> (1 << n):
                raise ParseError(f"hex table has more than 2**{n} bits")
            return TruthTable(n, bits)
        if name == "tribes":
            m = self.match(_INT + "x" + _INT)
            return core.tribes(int(m.group(1)), int(m.group(2)))
        if name == "sym":
            m = self.match(_INT + r":([01]+)")
            return core.sym(int(m.group(1)), m.group(2))
        if name == "zebra-affine":
            n = int(self.match(_INT + ":").group(1))
            coeffs = [self.match(_RAT).group(0)]
            for _ in range(n):
                self.eat(",")
                coeffs.append(self.match(_RAT).group(0))
            self.eat(":")
            prof = self.match(r"[01]+").group(0)
            return core.affine_zebra(n, coeffs, prof)
        raise ParseError(f"unknown function family {name!r}")
