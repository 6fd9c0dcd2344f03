# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Parser of the entropy expression and inequality language

  expr     := ['+'|'-'] term (('+'|'-') term)*
  term     := [rational ['*']] atom | '0'
  atom     := 'H(' vlist ['|' [vlist]] ')' | 'I(' vlist ';' vlist ['|' [vlist]] ')'
  vlist    := var (',' var)*
  relation := '<=' | '>=' | '='

Without an explicit universe the variables found are sorted naturally.
"""

from fractions import Fraction
from linrank.parsing.tokenizer import Tokenizer, TokenStream, LocationException, end_of_input
from linrank.parsing.tokens import (NUMBER, IDENTIFIER, WHITESPACE, COMMENT, LPAR, RPAR, SEMI_COLON,
                                    BAR, COMMA, PLUS, MINUS, STAR, LESS_EQUAL, GREATER_EQUAL,
                                    EQUAL, OTHER, RELATIONS)
from linrank.universe import VarUniverse, VarSet
from linrank.expression import EntropyExpr, InfoTerm, LinearInequality, expand_info_term


class ExpressionTokenizer(object):
    """
    Tokenizer of the expression language, whitespace and comments are dropped
    """

    def __init__(self):
        self._tokenizer = Tokenizer()

        def ignore_value(_token):
            return None

        def add(kind, regex, func=None):
            self._tokenizer.add(kind, regex, func)

        add(WHITESPACE, r"\s+", ignore_value)
        add(COMMENT, r"\#.*$", ignore_value)
        add(NUMBER, r"\d+(?:/\d+)?")
        add(IDENTIFIER, r"[a-zA-Z][a-zA-Z0-9_]*")
        add(LESS_EQUAL, r"<=")
        add(GREATER_EQUAL, r">=")
        add(EQUAL, r"=")
        add(LPAR, r"\(")
        add(RPAR, r"\)")
        add(SEMI_COLON, r";")
        add(BAR, r"\|")
        add(COMMA, r",")
        add(PLUS, r"\+")
        add(MINUS, r"-")
        add(STAR, r"\*")
        add(OTHER, r".")
        self._tokenizer.finalize()

    def tokenize(self, code, file_name=None, first_line=1):
        tokens = self._tokenizer.tokenize(code, file_name=file_name, first_line=first_line)
        for token in tokens:
            if token.kind is OTHER:
                raise LocationException.error("Unexpected character %r" % token.value, token.location)
        return TokenStream(tokens, end_of_input(code, file_name, first_line))


TOKENIZER = ExpressionTokenizer()


class Atom(object):
    """
    A parsed information term with variable names still unresolved
    """

    def __init__(self, coefficient, kind, args, location):
        self.coefficient = coefficient
        self.kind = kind
        self.args = args
        self.location = location

    def names(self):
        for names in self.args:
            for token in names:
                yield token.value

    def to_term(self, universe):
        varsets = [_resolve(universe, names) for names in self.args]
        if self.kind == InfoTerm.MUTUAL:
            return InfoTerm.mutual(varsets[0], varsets[1], varsets[2])
        return InfoTerm.conditional(varsets[0], varsets[1])


def _resolve(universe, names):
    mask = 0
    for token in names:
        if token.value not in universe:
            raise LocationException.error("Unknown variable %s" % token.value, token.location)
        mask |= 1 << universe.index_of(token.value)
    return VarSet(universe, mask)


def _parse_number(token):
    if "/" in token.value:
        numerator, denominator = token.value.split("/")
        if int(denominator) == 0:
            raise LocationException.error("Division by zero in %s" % token.value, token.location)
        return Fraction(int(numerator), int(denominator))
    return Fraction(int(token.value))


def parse_names(stream, slot, optional=False):
    """
    Variable names separated by commas
    """
    names = []
    if stream.peek_kind() is not IDENTIFIER:
        if optional:
            return names
        token = stream.peek()
        location = stream.eof_location if token is None else token.location
        found = "end of input" if token is None else str(token.kind)
        raise LocationException.error("Expected variable in %s got %s" % (slot, found), location)

    names.append(stream.expect(IDENTIFIER))
    while stream.peek_kind() is COMMA:
        stream.pop()
        names.append(stream.expect(IDENTIFIER))
    return names


def _parse_atom(stream, coefficient):
    name = stream.expect(IDENTIFIER)
    if name.value not in ("H", "I") or stream.peek_kind() is not LPAR:
        raise LocationException.error("Expected H( or I( got %s" % name.value, name.location)
    stream.expect(LPAR)

    if name.value == "I":
        kind = InfoTerm.MUTUAL
        args = [parse_names(stream, "first argument")]
        stream.expect(SEMI_COLON)
        args.append(parse_names(stream, "second argument"))
    else:
        kind = InfoTerm.CONDITIONAL
        args = [parse_names(stream, "argument")]

    condition = []
    if stream.peek_kind() is BAR:
        stream.pop()
        condition = parse_names(stream, "condition", optional=True)
    args.append(condition)
    stream.expect(RPAR)
    return Atom(coefficient, kind, args, name.location)


def _parse_term(stream, sign):
    """
    Returns an Atom or None for the constant zero
    """
    coefficient = Fraction(sign)
    if stream.peek_kind() is NUMBER:
        number = stream.pop()
        value = _parse_number(number)
        if stream.peek_kind() is STAR:
            stream.pop()
        elif stream.peek_kind() is not IDENTIFIER:
            if value != 0:
                raise LocationException.error("Constant term %s is not allowed" % number.value,
                                              number.location)
            return None
        coefficient *= value
    return _parse_atom(stream, coefficient)


def _parse_sum(stream):
    """
    Parse terms until a relation or the end of input
    """
    atoms = []
    sign = 1
    if stream.peek_kind() in (PLUS, MINUS):
        sign = -1 if stream.pop().kind is MINUS else 1

    while True:
        atom = _parse_term(stream, sign)
        if atom is not None:
            atoms.append(atom)

        kind = stream.peek_kind()
        if kind in (PLUS, MINUS):
            sign = -1 if stream.pop().kind is MINUS else 1
        elif kind is None or kind in RELATIONS:
            return atoms
        else:
            token = stream.pop()
            raise LocationException.error("Expected '+', '-' or a relation got %s" % token.kind,
                                          token.location)


def _universe_of(atoms, universe):
    if universe is not None:
        return universe
    names = [name for atom in atoms for name in atom.names()]
    if not names:
        return VarUniverse(["A"])
    return VarUniverse.from_names(names)


def _build(atoms, universe):
    expr = EntropyExpr.zero(universe)
    for atom in atoms:
        expr = expr + expand_info_term(atom.to_term(universe)).scale(atom.coefficient)
    return expr


def parse_expression(code, universe=None, file_name=None, first_line=1):
    """
    Parse an expression such as I(A;B|C)+I(A;B|D)+I(C;D)-I(A;B)
    """
    stream = TOKENIZER.tokenize(code, file_name, first_line)
    atoms = _parse_sum(stream)
    if not stream.eof:
        token = stream.pop()
        raise LocationException.error("Unexpected relation %s in expression" % token.kind, token.location)
    return _build(atoms, _universe_of(atoms, universe))


def parse_inequality(code, universe=None, label="", file_name=None, first_line=1):
    """
    Parse lesser <= greater, greater >= lesser or lhs = rhs

    The result is (greater - lesser) >= 0, an equality keeps lhs - rhs
    """
    stream = TOKENIZER.tokenize(code, file_name, first_line)
    left = _parse_sum(stream)
    if stream.eof:
        raise LocationException.error("Expected any of ['<=', '>=', '='] got end of input",
                                      stream.eof_location)
    relation = stream.pop()
    right = _parse_sum(stream)
    if not stream.eof:
        token = stream.pop()
        raise LocationException.error("Only one relation is allowed, found a second %s" % token.kind,
                                      token.location)

    universe = _universe_of(left + right, universe)
    left_expr = _build(left, universe)
    right_expr = _build(right, universe)
    if relation.kind is LESS_EQUAL:
        return LinearInequality(right_expr - left_expr, label)
    elif relation.kind is GREATER_EQUAL:
        return LinearInequality(left_expr - right_expr, label)
    return LinearInequality(left_expr - right_expr, label, equality=True)


def parse_info_term(code, universe, file_name=None, first_line=1):
    """
    Parse a single information term such as I(A,B;C|D) with coefficient one
    """
    stream = TOKENIZER.tokenize(code, file_name, first_line)
    atom = _parse_atom(stream, Fraction(1))
    if not stream.eof:
        token = stream.pop()
        raise LocationException.error("Expected a single information term, found %s" % token.kind,
                                      token.location)
    return atom.to_term(universe)


def parse_vlist(code, universe, file_name=None, first_line=1):
    """
    Parse a comma separated variable list such as C,D into a VarSet
    """
    stream = TOKENIZER.tokenize(code, file_name, first_line)
    names = parse_names(stream, "variable list")
    if not stream.eof:
        token = stream.pop()
        raise LocationException.error("Expected ',' got %s" % token.kind, token.location)
    return _resolve(universe, names)
