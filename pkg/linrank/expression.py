# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Entropy expressions, information terms and linear inequalities

An EntropyExpr is an exact rational linear combination of the joint
entropies H(S) of nonempty variable subsets S.  H of the empty set is zero
and is never stored.
"""

from fractions import Fraction
from linrank.universe import VarSet, Permutation
from linrank.exceptions import UniverseError


class EntropyExpr(object):
    """
    Immutable map from nonempty subset mask to nonzero rational coefficient
    """

    def __init__(self, universe, coeffs=None):
        self._universe = universe
        self._coeffs = {}
        if coeffs is None:
            return

        for mask, value in coeffs.items():
            if mask == 0:
                continue
            universe.check_mask(mask)
            value = Fraction(value)
            if value != 0:
                self._coeffs[mask] = value

    @classmethod
    def zero(cls, universe):
        return cls(universe)

    @classmethod
    def entropy(cls, varset, coefficient=1):
        """
        The expression coefficient * H(varset)
        """
        return cls(varset.universe, {varset.mask: coefficient})

    @property
    def universe(self):
        return self._universe

    @property
    def coeffs(self):
        return dict(self._coeffs)

    def items(self):
        return sorted(self._coeffs.items())

    def coefficient(self, mask):
        return self._coeffs.get(mask, Fraction(0))

    def is_zero(self):
        return not self._coeffs

    def to_dense(self):
        """
        Coefficients as a list in binary subset order
        """
        return [self.coefficient(mask) for mask in self._universe.masks()]

    def _check_universe(self, other):
        if self._universe != other.universe:
            raise UniverseError("Expressions over different universes %s and %s"
                                % (self._universe, other.universe))

    def __add__(self, other):
        self._check_universe(other)
        coeffs = dict(self._coeffs)
        for mask, value in other.coeffs.items():
            coeffs[mask] = coeffs.get(mask, 0) + value
        return EntropyExpr(self._universe, coeffs)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        factor = Fraction(factor)
        return EntropyExpr(self._universe,
                           dict((mask, factor * value) for mask, value in self._coeffs.items()))

    def __mul__(self, factor):
        return self.scale(factor)

    __rmul__ = __mul__

    def lift(self, universe):
        """
        The same expression over a universe extended with more variables
        """
        if not self._universe.is_prefix_of(universe):
            raise UniverseError("%s does not extend %s" % (universe, self._universe))
        return EntropyExpr(universe, self._coeffs)

    def renamed(self, universe):
        """
        The same coefficients over another universe of the same size
        """
        if len(universe) != len(self._universe):
            raise UniverseError("Cannot rename %i variables to %i" % (len(self._universe), len(universe)))
        return EntropyExpr(universe, self._coeffs)

    def permuted(self, permutation):
        permutation.check_size(self._universe)
        return EntropyExpr(self._universe,
                           dict((permutation.apply_mask(mask), value)
                                for mask, value in self._coeffs.items()))

    def __eq__(self, other):
        return (isinstance(other, EntropyExpr) and
                self._universe == other.universe and
                self._coeffs == other.coeffs)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._universe, frozenset(self._coeffs.items())))

    def __str__(self):
        return format_expression(self)

    def __repr__(self):
        return "EntropyExpr(%s)" % format_expression(self)


def format_coefficient(value, first):
    """
    Render a coefficient prefix such as '-', '+2*' or '1/2*'
    """
    sign = "-" if value < 0 else ("" if first else "+")
    magnitude = abs(value)
    if magnitude == 1:
        return sign
    return "%s%s*" % (sign, magnitude)


def format_expression(expr):
    """
    Canonical text of an expression, H-terms in binary subset order
    """
    if expr.is_zero():
        return "0"

    universe = expr.universe
    parts = []
    for mask, value in expr.items():
        parts.append("%sH(%s)" % (format_coefficient(value, not parts), ",".join(universe.names_of(mask))))
    return "".join(parts)


class InfoTerm(object):
    """
    A mutual information I(x;y|z) or conditional entropy H(x|z)
    """
    MUTUAL = "mutual"
    CONDITIONAL = "conditional"

    def __init__(self, kind, x, y=None, z=None):
        assert kind in (self.MUTUAL, self.CONDITIONAL)
        universe = x.universe
        if z is None:
            z = VarSet(universe, 0)

        for varset in (y, z):
            if varset is not None and varset.universe != universe:
                raise UniverseError("Information term mixes universes")

        if x.is_empty():
            raise UniverseError("Empty first argument in information term")

        if kind == self.MUTUAL and (y is None or y.is_empty()):
            raise UniverseError("Empty second argument in mutual information")

        self._kind = kind
        self._x = x
        self._y = y
        self._z = z

    @classmethod
    def mutual(cls, x, y, z=None):
        return cls(cls.MUTUAL, x, y, z)

    @classmethod
    def conditional(cls, x, z=None):
        return cls(cls.CONDITIONAL, x, None, z)

    @property
    def kind(self):
        return self._kind

    @property
    def x(self):
        return self._x

    @property
    def y(self):
        return self._y

    @property
    def z(self):
        return self._z

    @property
    def universe(self):
        return self._x.universe

    def is_mutual(self):
        return self._kind == self.MUTUAL

    def variables(self):
        """
        The union of all variables mentioned
        """
        result = self._x | self._z
        if self._y is not None:
            result = result | self._y
        return result

    def __eq__(self, other):
        return (isinstance(other, InfoTerm) and
                (self._kind, self._x, self._y, self._z) == (other.kind, other.x, other.y, other.z))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._kind, self._x, self._y, self._z))

    def __str__(self):
        if self.is_mutual():
            text = "I(%s;%s" % (self._x, self._y)
        else:
            text = "H(%s" % self._x

        if not self._z.is_empty():
            text += "|%s" % self._z
        return text + ")"

    def __repr__(self):
        return "InfoTerm(%s)" % str(self)


def expand_info_term(term):
    """
    I(x;y|z) = H(x,z) + H(y,z) - H(x,y,z) - H(z) and H(x|z) = H(x,z) - H(z)
    """
    universe = term.universe
    z_mask = term.z.mask
    coeffs = {}

    def add(mask, value):
        if mask != 0:
            coeffs[mask] = coeffs.get(mask, 0) + value

    if term.is_mutual():
        add(term.x.mask | z_mask, 1)
        add(term.y.mask | z_mask, 1)
        add(term.x.mask | term.y.mask | z_mask, -1)
    else:
        add(term.x.mask | z_mask, 1)
    add(z_mask, -1)
    return EntropyExpr(universe, coeffs)


def info_sum(terms):
    """
    Sum of (coefficient, InfoTerm) pairs as an expression
    """
    terms = list(terms)
    result = EntropyExpr.zero(terms[0][1].universe)
    for coefficient, term in terms:
        result = result + expand_info_term(term).scale(coefficient)
    return result


class LinearInequality(object):
    """
    The statement expr >= 0, or expr = 0 when equality is set
    """

    def __init__(self, expr, label="", equality=False):
        self._expr = expr
        self._label = label
        self._equality = equality

    @classmethod
    def from_sides(cls, lesser, greater, label=""):
        """
        lesser <= greater
        """
        return cls(greater - lesser, label)

    @property
    def expr(self):
        return self._expr

    @property
    def universe(self):
        return self._expr.universe

    @property
    def label(self):
        return self._label

    @property
    def equality(self):
        return self._equality

    def with_label(self, label):
        return LinearInequality(self._expr, label, self._equality)

    def as_pair(self):
        """
        An equality as the two inequalities expr >= 0 and -expr >= 0
        """
        if not self._equality:
            return [self]
        return [LinearInequality(self._expr, self._label),
                LinearInequality(-self._expr, self._label)]

    def lift(self, universe):
        return LinearInequality(self._expr.lift(universe), self._label, self._equality)

    def renamed(self, universe):
        return LinearInequality(self._expr.renamed(universe), self._label, self._equality)

    def permuted(self, permutation):
        return LinearInequality(self._expr.permuted(permutation), self._label, self._equality)

    def __eq__(self, other):
        return (isinstance(other, LinearInequality) and
                self._equality == other.equality and
                self._expr == other.expr)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._expr, self._equality))

    def __str__(self):
        return format_inequality(self)

    def __repr__(self):
        return "LinearInequality(%s)" % format_inequality(self)


def format_inequality(inequality):
    relation = "=" if inequality.equality else ">="
    return "%s %s 0" % (format_expression(inequality.expr), relation)


def _expr_of(item):
    return item.expr if isinstance(item, LinearInequality) else item


def evaluate(item, vector):
    """
    Exact value of an expression, or the slack of an inequality, at a rank vector
    """
    expr = _expr_of(item)
    if len(expr.universe) != len(vector.universe):
        raise UniverseError("Expression over %i variables evaluated at a vector over %i"
                            % (len(expr.universe), len(vector.universe)))
    return sum((value * vector.value(mask) for mask, value in expr.items()), Fraction(0))


def substitute(item, mapping, universe):
    """
    Replace every variable t by the set mapping[t] of the target universe

    Each H(S) becomes H of the union of the images, the empty union drops out.
    mapping values are VarSets or iterables of target variable names.
    """
    expr = _expr_of(item)
    source = expr.universe
    images = []
    for name in source.names:
        if name not in mapping:
            raise UniverseError("Substitution does not map variable %s" % name)
        image = mapping[name]
        if isinstance(image, VarSet):
            if image.universe != universe:
                raise UniverseError("Image of %s is not in the target universe" % name)
            images.append(image.mask)
        else:
            images.append(universe.varset(image).mask)

    coeffs = {}
    for mask, value in expr.items():
        target = 0
        for idx, image in enumerate(images):
            if mask & (1 << idx):
                target |= image
        if target != 0:
            coeffs[target] = coeffs.get(target, 0) + value

    result = EntropyExpr(universe, coeffs)
    if isinstance(item, LinearInequality):
        return LinearInequality(result, item.label, item.equality)
    return result


def apply_permutation(item, permutation):
    """
    Re-index an expression, inequality or rank vector by a permutation of the variables
    """
    return item.permuted(permutation)


def linear_identical(first, second):
    """
    True when the two expressions or inequalities have the same coefficient map
    """
    first = _expr_of(first)
    second = _expr_of(second)
    if first.universe != second.universe:
        raise UniverseError("Cannot compare expressions over %s and %s" % (first.universe, second.universe))
    return first == second


def _signature(expr):
    """
    Permutation invariant summary used to skip hopeless comparisons
    """
    return sorted((bin(mask).count("1"), value) for mask, value in expr.items())


def find_permutation(first, second):
    """
    A permutation taking first to second, or None
    """
    first = _expr_of(first)
    second = _expr_of(second)
    if len(first.universe) != len(second.universe):
        raise UniverseError("Cannot permute %i variables into %i" % (len(first.universe), len(second.universe)))

    if _signature(first) != _signature(second):
        return None

    target = second.renamed(first.universe)
    for permutation in Permutation.all(len(first.universe)):
        if first.permuted(permutation) == target:
            return permutation
    return None


def same_orbit(first, second):
    return find_permutation(first, second) is not None


def inequality_orbit(inequality):
    """
    The distinct permuted-variable forms of an inequality in first appearance order
    """
    seen = set()
    result = []
    for permutation in Permutation.all(len(inequality.universe)):
        image = inequality.permuted(permutation)
        if image not in seen:
            seen.add(image)
            result.append(image)
    return result
