# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Line oriented data files: rank vectors, stockpiles, matrices, proof
certificates, counterexample witnesses and representation search traces.
'#' starts a comment.
"""

import re
from fractions import Fraction
from linrank.parsing.tokenizer import SourceSpan, LocationException
from linrank.parsing.expression_parser import parse_inequality
from linrank.universe import VarUniverse
from linrank.rank_vector import RankVector
from linrank.representation import SubspaceRepresentation
from linrank.prover import ProofCertificate, CounterexampleWitness
from linrank.repr_search import SearchTrace, Placement, TraceStep, format_target
from linrank.expression import format_inequality
from linrank.exceptions import RankVectorError, CertificateFormatError, UniverseError

RATIONAL_RE = re.compile(r"^-?\d+(?:/\d+)?$")
INTEGER_RE = re.compile(r"^-?\d+$")


class Line(object):
    """
    A non blank line with its comment removed
    """

    def __init__(self, text, raw, line, file_name):
        self.text = text
        self.raw = raw
        self.line = line
        self.file_name = file_name

    def words(self):
        return self.text.split()

    def rest(self, num_words):
        """
        The text after the first words with those words blanked so columns are kept
        """
        matches = list(re.finditer(r"\S+", self.text))
        if len(matches) <= num_words:
            return ""
        offset = matches[num_words - 1].end() if num_words > 0 else 0
        return " " * offset + self.text[offset:]

    def location(self, word_index=None):
        """
        Span of the whole line or of one of its words
        """
        if word_index is None:
            column = len(self.raw) - len(self.raw.lstrip()) + 1
            return SourceSpan(self.file_name, self.line, column, max(column, len(self.text.rstrip())), self.raw)

        pos = 0
        for idx, match in enumerate(re.finditer(r"\S+", self.text)):
            if idx == word_index:
                return SourceSpan(self.file_name, self.line, match.start() + 1, match.end(), self.raw)
            pos = match.end()
        return SourceSpan(self.file_name, self.line, pos + 1, text=self.raw)

    def error(self, message, word_index=None):
        return LocationException.error(message, self.location(word_index))


def content_lines(code, file_name=None, first_line=1):
    """
    The non blank lines of the code with comments removed
    """
    result = []
    for offset, raw in enumerate(code.splitlines()):
        text = raw.split("#", 1)[0]
        if text.strip():
            result.append(Line(text, raw, first_line + offset, file_name))
    return result


def _rational(line, word_index):
    word = line.words()[word_index]
    if not RATIONAL_RE.match(word):
        raise line.error("Expected a rational number got %r" % word, word_index)
    return Fraction(word)


def _integer(line, word_index):
    word = line.words()[word_index]
    if not INTEGER_RE.match(word):
        raise line.error("Expected an integer got %r" % word, word_index)
    return int(word)


def universe_for_count(count):
    """
    The letter universe with count coordinates
    """
    num = (count + 1).bit_length() - 1
    if num < 1 or (1 << num) - 1 != count:
        raise RankVectorError("%i coordinates is not 2^n - 1 for any n" % count)
    return VarUniverse.letters(num)


def _rank_vector_of(line, universe):
    values = [_rational(line, idx) for idx in range(len(line.words()))]
    if universe is None:
        universe = universe_for_count(len(values))
    return RankVector(universe, values)


def parse_rank_vector(code, universe=None, file_name=None, first_line=1):
    """
    One rank vector in binary subset order, the letter universe is assumed
    when no universe is given
    """
    lines = content_lines(code, file_name, first_line)
    if len(lines) != 1:
        raise RankVectorError("Expected exactly one rank vector line, found %i" % len(lines))
    return _rank_vector_of(lines[0], universe)


def format_rank_vector(vector):
    return " ".join(str(value) for value in vector.coords)


def parse_stockpile(code, universe=None, file_name=None, first_line=1):
    """
    Many rank vectors, one per line, all over the same universe
    """
    result = []
    for line in content_lines(code, file_name, first_line):
        vector = _rank_vector_of(line, universe)
        universe = vector.universe
        result.append(vector)
    return result


def format_stockpile(vectors):
    return "".join(format_rank_vector(vector) + "\n" for vector in vectors)


def parse_matrices(code, universe=None, file_name=None, first_line=1):
    """
    Blocks of 'matrix <variable> <rows> <columns>' followed by the rows

    Without a universe the variables are taken in block order.
    """
    lines = content_lines(code, file_name, first_line)
    matrices = {}
    order = []
    num_cols = None
    idx = 0
    while idx < len(lines):
        header = lines[idx]
        words = header.words()
        if words[0] != "matrix" or len(words) != 4:
            raise header.error("Expected 'matrix <variable> <rows> <columns>'")
        name = words[1]
        if name in matrices:
            raise header.error("Duplicate matrix for %s" % name, 1)
        if universe is not None and name not in universe:
            raise header.error("Unknown variable %s" % name, 1)
        num_rows = _integer(header, 2)
        cols = _integer(header, 3)
        if num_rows < 0 or cols < 0:
            raise header.error("Negative matrix size")
        if num_cols is None:
            num_cols = cols
        elif cols != num_cols:
            raise header.error("Matrix of %s has %i columns, previous matrices have %i"
                               % (name, cols, num_cols), 3)

        rows = []
        for row_line in lines[idx + 1:idx + 1 + num_rows]:
            if row_line.words()[0] == "matrix":
                raise row_line.error("Expected %i rows for %s" % (num_rows, name))
            if len(row_line.words()) != num_cols:
                raise row_line.error("Row of %i entries in a matrix of %i columns"
                                     % (len(row_line.words()), num_cols))
            rows.append([_integer(row_line, col) for col in range(num_cols)])
        if len(rows) != num_rows:
            raise header.error("Expected %i rows for %s, found %i" % (num_rows, name, len(rows)))

        matrices[name] = rows
        order.append(name)
        idx += 1 + num_rows

    if universe is None:
        if not order:
            raise UniverseError("No matrices found")
        universe = VarUniverse(order)
    return SubspaceRepresentation(universe, matrices, 0 if num_cols is None else num_cols)


def format_matrices(representation):
    result = []
    for name in representation.universe.names:
        rows = representation.matrix(name)
        result.append("matrix %s %i %i\n" % (name, len(rows), representation.num_cols))
        for row in rows:
            result.append(" ".join(str(value) for value in row) + "\n")
    return "".join(result)


def _header(universe, target, hypotheses):
    result = ["universe %s\n" % universe,
              "target %s\n" % format_inequality(target)]
    for index, hypothesis in enumerate(hypotheses):
        result.append("hypothesis %i %s\n" % (index, format_inequality(hypothesis)))
    return result


def format_certificate(certificate):
    """
    universe, target and hypothesis lines followed by the multipliers,
    elementals are numbered from zero in their canonical order
    """
    result = _header(certificate.universe, certificate.target, certificate.hypotheses)
    for index, value in sorted(certificate.lambdas.items()):
        result.append("lambda %i %s\n" % (index, value))
    for index, value in sorted(certificate.mus.items()):
        result.append("mu %i %s\n" % (index, value))
    return "".join(result)


def format_witness(witness):
    result = _header(witness.universe, witness.target, witness.hypotheses)
    result.append("ranks %s\n" % format_rank_vector(witness.vector))
    return "".join(result)


class _RecordReader(object):
    """
    Reads the keyword lines shared by certificates and witnesses
    """

    def __init__(self, code, file_name):
        self.universe = None
        self.target = None
        self.hypotheses = []
        self.records = []
        self._file_name = file_name

        for line in content_lines(code, file_name):
            keyword, _, rest = line.text.strip().partition(" ")
            rest = rest.strip()
            if keyword == "universe":
                self._read_universe(line, rest)
            elif keyword == "target":
                self.target = self._inequality(line, rest, "target")
            elif keyword == "hypothesis":
                index, _, text = rest.partition(" ")
                if not INTEGER_RE.match(index) or int(index) != len(self.hypotheses):
                    raise self.error(line, "Expected hypothesis %i" % len(self.hypotheses))
                hypothesis = self._inequality(line, text, "hypothesis %s" % index)
                if not hypothesis.equality:
                    raise self.error(line, "Hypothesis %s is not an equality" % index)
                self.hypotheses.append(hypothesis)
            else:
                self.records.append((keyword, rest, line))

        if self.universe is None or self.target is None:
            raise CertificateFormatError("Missing universe or target line%s" % self._where())

    def _where(self):
        return "" if self._file_name is None else " in %s" % self._file_name

    def error(self, line, message):
        return CertificateFormatError("%s at line %i%s" % (message, line.line, self._where()))

    def _read_universe(self, line, rest):
        if self.universe is not None:
            raise self.error(line, "Duplicate universe line")
        try:
            self.universe = VarUniverse(rest.split())
        except UniverseError as exc:
            raise self.error(line, str(exc))

    def _inequality(self, line, text, what):
        if self.universe is None:
            raise self.error(line, "The universe line must come before the %s" % what)
        try:
            return parse_inequality(text, self.universe)
        except LocationException as exc:
            raise self.error(line, "Malformed %s: %s" % (what, exc.message))

    def rational(self, line, text):
        if not RATIONAL_RE.match(text):
            raise self.error(line, "Expected a rational number got %r" % text)
        return Fraction(text)


def parse_certificate(code, file_name=None):
    reader = _RecordReader(code, file_name)
    lambdas = {}
    mus = {}
    for keyword, rest, line in reader.records:
        if keyword not in ("lambda", "mu"):
            raise reader.error(line, "Unknown record %r" % keyword)
        words = rest.split()
        if len(words) != 2 or not INTEGER_RE.match(words[0]):
            raise reader.error(line, "Expected '%s <index> <rational>'" % keyword)
        multipliers = lambdas if keyword == "lambda" else mus
        multipliers[int(words[0])] = reader.rational(line, words[1])
    return ProofCertificate(reader.universe, reader.target, reader.hypotheses, lambdas, mus)


def parse_witness(code, file_name=None):
    reader = _RecordReader(code, file_name)
    vector = None
    for keyword, rest, line in reader.records:
        if keyword != "ranks" or vector is not None:
            raise reader.error(line, "Unexpected record %r" % keyword)
        try:
            vector = RankVector(reader.universe, [reader.rational(line, word) for word in rest.split()])
        except RankVectorError as exc:
            raise reader.error(line, str(exc))
    if vector is None:
        raise CertificateFormatError("Missing ranks line")
    return CounterexampleWitness(reader.universe, vector, reader.target, reader.hypotheses)


def _row(values):
    return " ".join(str(value) for value in values)


def format_trace(trace):
    """
    The arrays of a representation search, one row per line
    """
    result = ["universe %s\n" % trace.universe,
              "order %s\n" % " ".join(trace.order)]
    for placement in trace.placements:
        result.append("place %s\n" % placement.variable)
        result.append("dims %s\n" % _row(placement.dims))
        result.append("deficit %s\n" % _row(placement.deficits))
        for step in placement.steps:
            result.append("choose %s\n" % format_target(step.target, placement.placed))
            result.append("member %s\n" % _row(step.member))
            if step.rejected is not None:
                result.append("rejected %s\n" % _row(step.rejected))
            result.append("dims %s\n" % _row(step.dims))
            result.append("deficit %s\n" % _row(step.deficits))
    return "".join(result)


class _TraceReader(object):
    """
    Reads the lines of a trace in order
    """

    def __init__(self, lines):
        self._lines = lines
        self._index = 0

    def at_end(self):
        return self._index >= len(self._lines)

    def peek(self):
        return None if self.at_end() else self._lines[self._index].words()[0]

    def current(self):
        return self._lines[self._index]

    def take(self, keyword, num_values=None):
        if self.at_end():
            last = self._lines[-1]
            raise LocationException.error("Expected '%s' after the last line" % keyword,
                                          SourceSpan(last.file_name, last.line + 1, 1))
        line = self._lines[self._index]
        if line.words()[0] != keyword:
            raise line.error("Expected '%s' got %s" % (keyword, line.words()[0]), 0)
        self._index += 1
        if num_values is not None and len(line.words()) - 1 != num_values:
            raise line.error("Expected %i values after %s" % (num_values, keyword))
        return line

    def integers(self, keyword, num_values):
        line = self.take(keyword, num_values)
        return [_integer(line, idx) for idx in range(1, num_values + 1)]


def _sum_mask(line, text, placed):
    mask = 0
    for name in text.split("+"):
        if name not in placed:
            raise line.error("%s is not placed before %s" % (name, line.words()[0]), 1)
        mask |= 1 << placed.index(name)
    return mask


def _target(line, placed):
    words = line.words()
    if len(words) != 2:
        raise line.error("Expected 'choose <target>'")
    text = words[1]
    if text == "fresh":
        return ()
    if text.startswith("("):
        match = re.match(r"^\(([^()]+)\)&\(([^()]+)\)$", text)
        if match is None:
            raise line.error("Expected an intersection such as (A+B)&(C+D)", 1)
        return (_sum_mask(line, match.group(1), placed), _sum_mask(line, match.group(2), placed))
    return (_sum_mask(line, text, placed),)


def parse_trace(code, file_name=None, first_line=1):
    """
    Parse a trace written by format_trace
    """
    lines = content_lines(code, file_name, first_line)
    if not lines:
        raise LocationException.error("Empty trace", SourceSpan(file_name, first_line, 1))
    reader = _TraceReader(lines)

    universe_line = reader.take("universe")
    try:
        universe = VarUniverse(universe_line.words()[1:])
    except UniverseError as exc:
        raise universe_line.error(str(exc))

    order_line = reader.take("order", len(universe))
    order = order_line.words()[1:]
    if sorted(order) != sorted(universe.names):
        raise order_line.error("The order must list every variable once")

    trace = SearchTrace(universe, order)
    for idx, variable in enumerate(order):
        place_line = reader.take("place", 1)
        if place_line.words()[1] != variable:
            raise place_line.error("Expected variable %s" % variable, 1)
        size = 1 << idx
        placement = Placement(variable, order[:idx], reader.integers("dims", size),
                              reader.integers("deficit", size))
        while reader.peek() == "choose":
            target = _target(reader.take("choose"), placement.placed)
            member = reader.integers("member", size)
            rejected = reader.integers("rejected", size) if reader.peek() == "rejected" else None
            placement.steps.append(TraceStep(target, member, reader.integers("dims", size),
                                             reader.integers("deficit", size), rejected))
        trace.placements.append(placement)

    if not reader.at_end():
        raise reader.current().error("Unexpected line after the last placement")
    return trace
