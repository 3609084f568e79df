"""Parsing and formatting of unit expressions.

Grammar (recursive descent):

    expr    :=  factor ( factor | "*" factor | "/" factor )*
    factor  :=  primary ( "^" exponent )?
    primary :=  "(" expr ")" | SYMBOL | "1"
    exponent := ["+"|"-"] INT [ "/" INT ]

Whitespace, "*" and the middle dot all denote multiplication.  "/" binds
exactly one following factor or parenthesized group, so "a/b c" parses as
(a/b)*c.  Symbols resolve against the registry with bare-symbol priority:
a prefixed reading ("mN" = milli-newton) is used only when the bare symbol
does not exist; prefixes are matched longest first ("da" before "d").
The micro sign and Greek mu are accepted as "u".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .dimensions import (
    AMOUNT,
    CHARGE,
    CURRENT,
    DIMENSIONLESS,
    ELECTRIC_FIELD,
    ENERGY,
    FREQUENCY,
    LENGTH,
    LUMINOSITY,
    MAGNETIC_FIELD,
    MASS,
    PERMEABILITY,
    TEMPERATURE,
    TIME,
    Dimension,
    Quantity,
)


class UnitParseError(ValueError):
    """Base class for unit-expression parse failures."""


class EmptyInputError(UnitParseError):
    def __init__(self) -> None:
        super().__init__("empty unit expression")


class UnknownUnitError(UnitParseError):
    def __init__(self, symbol: str, position: int) -> None:
        self.symbol = symbol
        self.position = position
        super().__init__(f"unknown unit {symbol!r} at position {position}")


class UnitSyntaxError(UnitParseError):
    def __init__(self, position: int, expected: tuple[str, ...]) -> None:
        self.position = position
        self.expected = expected
        what = " or ".join(expected)
        super().__init__(f"syntax error at position {position}: expected {what}")


@dataclass(frozen=True)
class UnitEntry:
    symbol: str
    scale: float
    dimension: Dimension


_BASE_UNITS = {
    "m": UnitEntry("m", 1.0, LENGTH),
    "kg": UnitEntry("kg", 1.0, MASS),
    "s": UnitEntry("s", 1.0, TIME),
    "A": UnitEntry("A", 1.0, CURRENT),
    "K": UnitEntry("K", 1.0, TEMPERATURE),
    "mol": UnitEntry("mol", 1.0, AMOUNT),
    "cd": UnitEntry("cd", 1.0, LUMINOSITY),
}

_DERIVED_UNITS = {
    "Hz": UnitEntry("Hz", 1.0, FREQUENCY),
    "N": UnitEntry("N", 1.0, MASS * LENGTH / TIME**2),
    "J": UnitEntry("J", 1.0, ENERGY),
    "W": UnitEntry("W", 1.0, ENERGY / TIME),
    "C": UnitEntry("C", 1.0, CHARGE),
    "V": UnitEntry("V", 1.0, ELECTRIC_FIELD * LENGTH),
    "F": UnitEntry("F", 1.0, CHARGE / (ELECTRIC_FIELD * LENGTH)),
    "T": UnitEntry("T", 1.0, MAGNETIC_FIELD),
    "H": UnitEntry("H", 1.0, PERMEABILITY * LENGTH),
    # Non-coherent entries carry their scale to the SI coherent unit.
    "eV": UnitEntry("eV", 1.602176634e-19, ENERGY),
    "g": UnitEntry("g", 1e-3, MASS),
}

REGISTRY: dict[str, UnitEntry] = {**_BASE_UNITS, **_DERIVED_UNITS}

SI_PREFIXES: dict[str, float] = {
    "y": 1e-24,
    "z": 1e-21,
    "a": 1e-18,
    "f": 1e-15,
    "p": 1e-12,
    "n": 1e-9,
    "u": 1e-6,
    "m": 1e-3,
    "c": 1e-2,
    "d": 1e-1,
    "da": 1e1,
    "h": 1e2,
    "k": 1e3,
    "M": 1e6,
    "G": 1e9,
    "T": 1e12,
    "P": 1e15,
    "E": 1e18,
    "Z": 1e21,
    "Y": 1e24,
}


def _verify_registry() -> None:
    """Cross-check derived-unit dimensions against explicit exponent tables."""
    expected = {
        "Hz": (0, 0, -1, 0),
        "N": (1, 1, -2, 0),
        "J": (2, 1, -2, 0),
        "W": (2, 1, -3, 0),
        "C": (0, 0, 1, 1),
        "V": (2, 1, -3, -1),
        "F": (-2, -1, 4, 2),
        "T": (0, 1, -2, -1),
        "H": (2, 1, -2, -2),
        "eV": (2, 1, -2, 0),
        "g": (0, 1, 0, 0),
    }
    for symbol, (l, m, t, i) in expected.items():
        want = Dimension(length=Fraction(l), mass=Fraction(m), time=Fraction(t), current=Fraction(i))
        got = REGISTRY[symbol].dimension
        if got != want:
            raise AssertionError(f"registry dimension for {symbol!r} is {got}, expected {want}")


_verify_registry()


def _normalize_symbol(symbol: str) -> str:
    return symbol.replace("µ", "u").replace("μ", "u")


def _resolve_symbol(symbol: str, position: int) -> tuple[float, Dimension]:
    name = _normalize_symbol(symbol)
    entry = REGISTRY.get(name)
    if entry is not None:
        return entry.scale, entry.dimension
    for plen in (2, 1):
        prefix, rest = name[:plen], name[plen:]
        factor = SI_PREFIXES.get(prefix)
        if factor is not None and rest in REGISTRY:
            entry = REGISTRY[rest]
            return factor * entry.scale, entry.dimension
    raise UnknownUnitError(symbol, position)


# --- abstract syntax tree ------------------------------------------------

UnitNode = Union["BaseUnit", "Product", "Quotient", "Power", "Group"]


@dataclass(frozen=True)
class BaseUnit:
    symbol: str
    position: int


@dataclass(frozen=True)
class Product:
    left: UnitNode
    right: UnitNode


@dataclass(frozen=True)
class Quotient:
    numerator: UnitNode
    denominator: UnitNode


@dataclass(frozen=True)
class Power:
    base: UnitNode
    exponent: Fraction


@dataclass(frozen=True)
class Group:
    child: UnitNode


@dataclass(frozen=True)
class One:
    position: int


def evaluate(node: UnitNode | One) -> tuple[float, Dimension]:
    if isinstance(node, BaseUnit):
        return _resolve_symbol(node.symbol, node.position)
    if isinstance(node, One):
        return 1.0, DIMENSIONLESS
    if isinstance(node, Product):
        ls, ld = evaluate(node.left)
        rs, rd = evaluate(node.right)
        return ls * rs, ld * rd
    if isinstance(node, Quotient):
        ls, ld = evaluate(node.numerator)
        rs, rd = evaluate(node.denominator)
        return ls / rs, ld / rd
    if isinstance(node, Power):
        s, d = evaluate(node.base)
        return s ** float(node.exponent), d**node.exponent
    if isinstance(node, Group):
        return evaluate(node.child)
    raise TypeError(f"not a unit AST node: {node!r}")


# --- tokenizer -----------------------------------------------------------

_SYMBOL_EXTRA = "µμ"  # micro sign, Greek mu


@dataclass(frozen=True)
class _Token:
    kind: str  # "sym", "int", "op", "end"
    text: str
    position: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "·":  # middle dot multiplication
            tokens.append(_Token("op", "*", i))
            i += 1
            continue
        if ch in "*/^()":
            tokens.append(_Token("op", ch, i))
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            tokens.append(_Token("int", text[start:i], start))
            continue
        if ch.isalpha() or ch in _SYMBOL_EXTRA:
            start = i
            while i < n and (text[i].isalpha() or text[i] in _SYMBOL_EXTRA):
                i += 1
            tokens.append(_Token("sym", text[start:i], start))
            continue
        if ch in "+-":
            tokens.append(_Token("op", ch, i))
            i += 1
            continue
        raise UnitSyntaxError(i, ("unit symbol", "operator"))
    tokens.append(_Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]) -> None:
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def parse(self) -> UnitNode | One:
        node = self.parse_expr()
        tail = self.peek()
        if tail.kind != "end":
            raise UnitSyntaxError(tail.position, ("end of input",))
        return node

    def parse_expr(self) -> UnitNode | One:
        node: UnitNode | One = self.parse_factor()
        while True:
            token = self.peek()
            if token.kind == "op" and token.text == "*":
                self.advance()
                node = Product(node, self.parse_factor())
            elif token.kind == "op" and token.text == "/":
                self.advance()
                node = Quotient(node, self.parse_factor())
            elif token.kind in ("sym", "int") or (token.kind == "op" and token.text == "("):
                node = Product(node, self.parse_factor())
            else:
                break
        return node

    def parse_factor(self) -> UnitNode | One:
        node = self.parse_primary()
        token = self.peek()
        if token.kind == "op" and token.text == "^":
            self.advance()
            exponent = self.parse_exponent()
            node = Power(node, exponent)
        return node

    def parse_primary(self) -> UnitNode | One:
        token = self.peek()
        if token.kind == "op" and token.text == "(":
            self.advance()
            child = self.parse_expr()
            closing = self.peek()
            if not (closing.kind == "op" and closing.text == ")"):
                raise UnitSyntaxError(closing.position, (")",))
            self.advance()
            return Group(child)
        if token.kind == "sym":
            self.advance()
            return BaseUnit(token.text, token.position)
        if token.kind == "int" and token.text == "1":
            self.advance()
            return One(token.position)
        raise UnitSyntaxError(token.position, ("unit symbol", "("))

    def parse_exponent(self) -> Fraction:
        sign = 1
        token = self.peek()
        if token.kind == "op" and token.text in "+-":
            self.advance()
            if token.text == "-":
                sign = -1
            token = self.peek()
        if token.kind != "int":
            raise UnitSyntaxError(token.position, ("integer exponent",))
        self.advance()
        numerator = int(token.text)
        token = self.peek()
        if token.kind == "op" and token.text == "/":
            # Only a directly following integer makes this a rational exponent;
            # otherwise the slash belongs to the enclosing expression.
            nxt = self.tokens[self.pos + 1]
            if nxt.kind == "int":
                denominator = int(nxt.text)
                if denominator == 0:
                    raise UnitSyntaxError(nxt.position, ("nonzero exponent denominator",))
                self.advance()
                self.advance()
                return Fraction(sign * numerator, denominator)
        return Fraction(sign * numerator)


def parse_unit_ast(text: str) -> UnitNode | One:
    if not text or not text.strip():
        raise EmptyInputError()
    return _Parser(_tokenize(text)).parse()


def parse_unit(text: str) -> tuple[float, Dimension]:
    """Parse a unit expression into (scale to the SI coherent unit, dimension)."""
    return evaluate(parse_unit_ast(text))


def quantity(magnitude: float, unit: str) -> Quantity:
    """Build an SI quantity from a magnitude and a unit expression."""
    scale, dimension = parse_unit(unit)
    return Quantity(magnitude * scale, dimension)


# --- formatting ----------------------------------------------------------

# Electromagnetic-first display order; renders the permittivity dimension as
# "A^2 s^4 / (kg m^3)", matching the house style of the constant tables.
_FORMAT_ORDER = (
    ("current", "A"),
    ("time", "s"),
    ("mass", "kg"),
    ("length", "m"),
    ("temperature", "K"),
    ("amount", "mol"),
    ("luminosity", "cd"),
)


def _format_power(symbol: str, exponent: Fraction) -> str:
    if exponent == 1:
        return symbol
    if exponent.denominator == 1:
        return f"{symbol}^{exponent.numerator}"
    return f"{symbol}^{exponent.numerator}/{exponent.denominator}"


def format_dimension(d: Dimension) -> str:
    """Render a dimension as a canonical, re-parseable unit string."""
    positive: list[str] = []
    negative: list[str] = []
    for field, symbol in _FORMAT_ORDER:
        exponent: Fraction = getattr(d, field)
        if exponent > 0:
            positive.append(_format_power(symbol, exponent))
        elif exponent < 0:
            negative.append(_format_power(symbol, -exponent))
    head = " ".join(positive) if positive else "1"
    if not negative:
        return head
    tail = negative[0] if len(negative) == 1 else "(" + " ".join(negative) + ")"
    return f"{head} / {tail}"
