# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Common information declarations, one per line

  Z = CI(A ; B,C)
  W = CI(F ; Z)

Each declaration introduces an auxiliary variable Z with H(Z|X) = 0,
H(Z|Y) = 0 and H(Z) = I(X;Y).
"""

from linrank.parsing.tokenizer import LocationException
from linrank.parsing.tokens import IDENTIFIER, EQUAL, LPAR, RPAR, SEMI_COLON
from linrank.parsing.expression_parser import TOKENIZER, parse_names
from linrank.expression import EntropyExpr, InfoTerm, LinearInequality, expand_info_term


class HypothesisDecl(object):
    """
    new_var = CI(left ; right), left and right are lists of variable names
    """

    def __init__(self, new_var, left, right, location=None):
        self.new_var = new_var
        self.left = tuple(left)
        self.right = tuple(right)
        self.location = location

    def references(self):
        return self.left + self.right

    def equalities(self, universe):
        """
        The three equalities over a universe containing every name involved
        """
        new = universe.varset(self.new_var)
        left = universe.varset(self.left)
        right = universe.varset(self.right)
        text = str(self)
        return [
            LinearInequality(expand_info_term(InfoTerm.conditional(new, left)),
                             "%s: H(%s|%s) = 0" % (text, new, left), equality=True),
            LinearInequality(expand_info_term(InfoTerm.conditional(new, right)),
                             "%s: H(%s|%s) = 0" % (text, new, right), equality=True),
            LinearInequality(EntropyExpr.entropy(new) - expand_info_term(InfoTerm.mutual(left, right)),
                             "%s: H(%s) = I(%s;%s)" % (text, new, left, right), equality=True)]

    def __eq__(self, other):
        return (isinstance(other, HypothesisDecl) and
                (self.new_var, self.left, self.right) == (other.new_var, other.left, other.right))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.new_var, self.left, self.right))

    def __str__(self):
        return "%s = CI(%s ; %s)" % (self.new_var, ",".join(self.left), ",".join(self.right))

    def __repr__(self):
        return "HypothesisDecl(%s)" % str(self)


def _parse_declaration(stream):
    new_var = stream.expect(IDENTIFIER)
    stream.expect(EQUAL)
    keyword = stream.expect(IDENTIFIER)
    if keyword.value != "CI":
        raise LocationException.error("Expected CI got %s" % keyword.value, keyword.location)
    stream.expect(LPAR)
    left = parse_names(stream, "first argument of CI")
    stream.expect(SEMI_COLON)
    right = parse_names(stream, "second argument of CI")
    stream.expect(RPAR)
    if not stream.eof:
        token = stream.pop()
        raise LocationException.error("Expected end of line got %s" % token.kind, token.location)
    return new_var, left, right


def parse_hypotheses(code, ground=None, file_name=None, first_line=1):
    """
    Parse declarations, references must be to ground or earlier declared variables
    """
    parsed = []
    for offset, line in enumerate(code.splitlines()):
        if not line.strip() or line.strip().startswith("#"):
            continue
        stream = TOKENIZER.tokenize(line, file_name, first_line + offset)
        parsed.append(_parse_declaration(stream))

    declared_at = dict((new_var.value, idx) for idx, (new_var, _, _) in reversed(list(enumerate(parsed))))
    seen = set()
    decls = []
    for idx, (new_var, left, right) in enumerate(parsed):
        if new_var.value in seen or (ground is not None and new_var.value in ground):
            raise LocationException.error("Redeclaration of %s" % new_var.value, new_var.location)

        for token in left + right:
            name = token.value
            if name in seen:
                continue
            if declared_at.get(name, -1) >= idx:
                raise LocationException.error("Forward reference to %s" % name, token.location)
            if ground is not None and name not in ground:
                raise LocationException.error("Unknown variable %s" % name, token.location)

        seen.add(new_var.value)
        decls.append(HypothesisDecl(new_var.value,
                                    [token.value for token in left],
                                    [token.value for token in right],
                                    new_var.location))
    return decls


def format_hypotheses(decls):
    return "".join("%s\n" % decl for decl in decls)


def hypothesis_universe(ground, decls):
    """
    The ground universe extended with the auxiliary variables in declaration order
    """
    return ground.extend([decl.new_var for decl in decls])


def hypothesis_equalities(ground, decls):
    """
    The extended universe and all equalities of the declarations
    """
    universe = hypothesis_universe(ground, decls)
    equalities = []
    for decl in decls:
        equalities.extend(decl.equalities(universe))
    return universe, equalities
