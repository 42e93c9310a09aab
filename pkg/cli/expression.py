"""Arithmetic expressions over the bicomplex numbers.

Grammar (loosest binding first)::

    expr    := term (("+" | "-") term)*
    term    := factor (("*" | "/") factor)*
    factor  := ("+" | "-") factor | power
    power   := atom ("^" integer)*
    atom    := number | "i1" | "i2" | "j" | "e1" | "e2"
             | ("conj1" | "conj2" | "conj3" | "sqrt") "(" expr ")"
             | "(" expr ")"

Powers chain to the left, so a^2^3 is (a^2)^3. Parsing builds a small tree first, and nothing is
computed until the whole string has been accepted.
"""

from typing import Callable, Dict
from dataclasses import dataclass

import pyparsing as pp

from core import (
    Bicomplex,
    ConjugationKind,
    ParseError,
    conj,
    nth_root,
    I1,
    I2,
    J,
    E1,
    E2,
)

CONSTANTS: Dict[str, Bicomplex] = {"i1": I1, "i2": I2, "j": J, "e1": E1, "e2": E2}

FUNCTIONS: Dict[str, Callable[[Bicomplex], Bicomplex]] = {
    "conj1": lambda w: conj(w, ConjugationKind.DAG1),
    "conj2": lambda w: conj(w, ConjugationKind.DAG2),
    "conj3": lambda w: conj(w, ConjugationKind.DAG3),
    "sqrt": lambda w: nth_root(w, 2),
}


class Node:
    def evaluate(self) -> Bicomplex:
        raise NotImplementedError


@dataclass(frozen=True)
class Literal(Node):
    value: Bicomplex

    def evaluate(self) -> Bicomplex:
        return self.value


@dataclass(frozen=True)
class Call(Node):
    name: str
    argument: Node

    def evaluate(self) -> Bicomplex:
        return FUNCTIONS[self.name](self.argument.evaluate())


@dataclass(frozen=True)
class Power(Node):
    base: Node
    exponent: int

    def evaluate(self) -> Bicomplex:
        return self.base.evaluate() ** self.exponent


@dataclass(frozen=True)
class Negate(Node):
    operand: Node

    def evaluate(self) -> Bicomplex:
        return -self.operand.evaluate()


@dataclass(frozen=True)
class BinaryOp(Node):
    op: str
    left: Node
    right: Node

    def evaluate(self) -> Bicomplex:
        left, right = self.left.evaluate(), self.right.evaluate()
        if self.op == "+":
            return left + right
        if self.op == "-":
            return left - right
        if self.op == "*":
            return left * right
        # division by a zero divisor raises NullConeError
        return left / right


def _fold_binary(tokens: pp.ParseResults) -> Node:
    items = tokens[0]
    node = items[0]
    for op, operand in zip(items[1::2], items[2::2]):
        node = BinaryOp(op, node, operand)
    return node


def _fold_sign(tokens: pp.ParseResults) -> Node:
    sign, operand = tokens[0]
    return Negate(operand) if sign == "-" else operand


def _fold_power(tokens: pp.ParseResults) -> Node:
    node, *exponents = tokens[0]
    for n in exponents:
        node = Power(node, n)
    return node


def _build_grammar() -> pp.ParserElement:
    expr = pp.Forward()

    # unsigned, so that "1-2" reads as a subtraction
    number = pp.Regex(r"(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?").set_name("number")
    number.set_parse_action(lambda t: Literal(Bicomplex(float(t[0]))))

    constant = pp.MatchFirst(pp.Keyword(name) for name in CONSTANTS).set_name("constant")
    constant.set_parse_action(lambda t: Literal(CONSTANTS[t[0]]))

    function = pp.MatchFirst(pp.Keyword(name) for name in FUNCTIONS).set_name("function")
    call = function + pp.Suppress("(") + expr + pp.Suppress(")")
    call.set_parse_action(lambda t: Call(t[0], t[1]))

    atom = call | constant | number

    exponent = pp.Regex(r"[+-]?\d+").set_name("integer exponent")
    exponent.set_parse_action(lambda t: int(t[0]))

    expr <<= pp.infix_notation(
        atom,
        [
            (pp.Suppress("^") + exponent, 1, pp.OpAssoc.LEFT, _fold_power),
            (pp.one_of("+ -"), 1, pp.OpAssoc.RIGHT, _fold_sign),
            (pp.one_of("* /"), 2, pp.OpAssoc.LEFT, _fold_binary),
            (pp.one_of("+ -"), 2, pp.OpAssoc.LEFT, _fold_binary),
        ],
    )
    return expr


GRAMMAR = _build_grammar()


def parse(text: str) -> Node:
    try:
        return GRAMMAR.parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as e:
        raise ParseError(f"malformed expression {text!r}: {e}") from e


def evaluate(text: str) -> Bicomplex:
    """Parses and evaluates an expression; a division by a zero divisor raises NullConeError."""
    return parse(text).evaluate()

