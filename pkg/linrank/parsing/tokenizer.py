# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Regex tokenizer for the small line based languages of linrank

Locations are SourceSpan objects with 1-based lines and inclusive 1-based
columns, parse errors are LocationException carrying such a span.
"""

from bisect import bisect_right
from collections import namedtuple
import re
from linrank.ostools import read_file, file_exists, simplify_path

Token = namedtuple("Token", ["kind", "value", "location"])


class TokenKind(object):
    """
    A kind of token, calling it creates a token of the kind
    """

    def __init__(self, name):
        self.name = name

    def __call__(self, value="", location=None):
        return Token(self, value, location)

    def __repr__(self):
        return self.name


def new_token_kind(name):
    return TokenKind(name)


class SourceSpan(object):
    """
    Where a token or error is, the text of the line is kept for error messages
    """

    def __init__(self, file_name, line, column, end_column=None, text=None):
        end_column = column if end_column is None else end_column
        assert line >= 1 and 1 <= column <= end_column
        self.file_name = file_name
        self.line = line
        self.column = column
        self.end_column = end_column
        self.text = text

    def _key(self):
        return self.file_name, self.line, self.column, self.end_column

    def __eq__(self, other):
        return isinstance(other, SourceSpan) and self._key() == other._key()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return "SourceSpan(%r, %i, %i, %i)" % self._key()


class Tokenizer(object):
    """
    Alternation of token regexes, earlier kinds win, characters no regex matches are skipped
    """

    def __init__(self):
        self._kinds = []
        self._regex = None

    def add(self, kind, regex, func=None):
        """
        Add a kind, func may rewrite the token or drop it by returning None
        """
        self._kinds.append((kind, regex, func))
        return kind

    def finalize(self):
        pattern = "|".join("(?P<t%i>%s)" % (idx, regex) for idx, (_, regex, _) in enumerate(self._kinds))
        self._regex = re.compile(pattern, re.MULTILINE)

    def tokenize(self, code, file_name=None, first_line=1):
        """
        The tokens of the code, first_line is the line number of the first line of code
        """
        lines = code.splitlines()
        line_starts = [0] + [match.end() for match in re.finditer("\n", code)]

        tokens = []
        for match in self._regex.finditer(code):
            kind, _, func = self._kinds[int(match.lastgroup[1:])]
            value = match.group()
            line_idx = bisect_right(line_starts, match.start()) - 1
            column = match.start() - line_starts[line_idx] + 1
            location = SourceSpan(file_name, first_line + line_idx, column, column + max(len(value), 1) - 1,
                                  lines[line_idx] if line_idx < len(lines) else "")
            token = Token(kind, value, location)
            if func is not None:
                token = func(token)
            if token is not None:
                tokens.append(token)
        return tokens


def end_of_input(code, file_name=None, first_line=1):
    """
    The location one column past the last character of the code
    """
    lines = code.splitlines() or [""]
    return SourceSpan(file_name, first_line + len(lines) - 1, len(lines[-1]) + 1, text=lines[-1])


class TokenStream(object):
    """
    Tokens consumed from the front, running out raises at the end of input location
    """

    def __init__(self, tokens, eof_location=None):
        self._tokens = list(tokens)
        self._idx = 0
        self.eof_location = eof_location

    @property
    def eof(self):
        return self._idx >= len(self._tokens)

    def peek(self, offset=0):
        idx = self._idx + offset
        return self._tokens[idx] if idx < len(self._tokens) else None

    def peek_kind(self, offset=0):
        token = self.peek(offset)
        return None if token is None else token.kind

    def skip_while(self, *kinds):
        while self.peek_kind() in kinds:
            self._idx += 1
        return self._idx

    def pop(self):
        if self.eof:
            raise EOFException(self.eof_location)
        self._idx += 1
        return self._tokens[self._idx - 1]

    def expect(self, *kinds):
        """
        Pop a token that must be of one of the kinds
        """
        expected = str(kinds[0]) if len(kinds) == 1 else "any of [%s]" % ", ".join(str(kind) for kind in kinds)
        if self.eof:
            raise LocationException.error("Expected %s got end of input" % expected, self.eof_location)

        token = self.pop()
        if token.kind not in kinds:
            raise LocationException.error("Expected %s got %s" % (expected, token.kind), token.location)
        return token


def _line_text(location):
    if location.text is not None:
        return location.text
    if location.file_name is None or not file_exists(location.file_name):
        return None
    lines = read_file(location.file_name).splitlines()
    return lines[location.line - 1] if location.line <= len(lines) else None


def describe_location(location):
    """
    The line of the location with the span underlined by ~
    """
    if location is None:
        return "Unknown location"

    if location.file_name is None:
        header = "at line %i:\n" % location.line
    else:
        header = "at %s line %i:\n" % (simplify_path(location.file_name), location.line)

    text = _line_text(location)
    if text is None:
        return header + "Unknown contents"

    underline = " " * (location.column - 1) + "~" * (location.end_column - location.column + 1)
    return header + text + "\n" + underline


class EOFException(Exception):

    def __init__(self, location=None):
        Exception.__init__(self, "Unexpected end of input")
        self.location = location


class LocationException(Exception):
    """
    A problem at a source location, logged together with the underlined line
    """

    SEVERITIES = ("debug", "warning", "error")

    @classmethod
    def error(cls, message, location):
        return cls(message, location, "error")

    @classmethod
    def warning(cls, message, location):
        return cls(message, location, "warning")

    def __init__(self, message, location, severity):
        Exception.__init__(self, message)
        assert severity in self.SEVERITIES
        self.severity = severity
        self.message = message
        self.location = location

    def __str__(self):
        if self.location is None:
            return self.message
        return "%s at line %i column %i" % (self.message, self.location.line, self.location.column)

    def log(self, logger):
        getattr(logger, self.severity)("%s\n%s", self.message, describe_location(self.location))
