# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
The catalog file format

  entry (19b) ABCDE stated
  inequality 2I(A;B,C) <= ...
  hypothesis Z = CI(A ; B,C)
  identical (19)
"""

import re
from linrank.parsing.tokenizer import LocationException
from linrank.parsing.data_formats import content_lines
from linrank.parsing.expression_parser import parse_inequality
from linrank.parsing.hypothesis_parser import parse_hypotheses, format_hypotheses
from linrank.expression import format_inequality
from linrank.universe import VarUniverse

VARIABLES_RE = re.compile(r"^[A-Z]+$")
RECIPE_KINDS = ("stated", "inferred")


class CatalogEntry(object):
    """
    A tagged inequality together with the common informations proving it
    """

    def __init__(self, tag, inequality, recipe, stated=True, identical=None, location=None):
        self.tag = tag
        self.inequality = inequality
        self.recipe = list(recipe)
        self.stated = stated
        self.identical = identical
        self.location = location

    @property
    def universe(self):
        return self.inequality.universe

    def truncated(self, keep):
        """
        A copy using only the recipe declarations with the given indices
        """
        return CatalogEntry(self.tag, self.inequality,
                            [decl for index, decl in enumerate(self.recipe) if index in keep],
                            self.stated, self.identical, self.location)

    def __repr__(self):
        return "CatalogEntry(%s)" % self.tag


class _EntryBuilder(object):
    """
    Collects the lines of one entry
    """

    def __init__(self, line, file_name):
        words = line.words()
        if len(words) != 4:
            raise line.error("Expected 'entry <tag> <variables> stated|inferred'")
        self.tag = words[1]
        if not VARIABLES_RE.match(words[2]) or len(set(words[2])) != len(words[2]):
            raise line.error("Expected distinct upper case letters got %s" % words[2], 2)
        if words[3] not in RECIPE_KINDS:
            raise line.error("Expected stated or inferred got %s" % words[3], 3)

        self.universe = VarUniverse(list(words[2]))
        self.stated = words[3] == "stated"
        self.line = line
        self.file_name = file_name
        self.inequality = None
        self.hypothesis_lines = []
        self.identical = None

    def add(self, keyword, line):
        if keyword == "inequality":
            if self.inequality is not None:
                raise line.error("Entry %s has a second inequality" % self.tag)
            self.inequality = parse_inequality(line.rest(1), self.universe, label=self.tag,
                                               file_name=self.file_name, first_line=line.line)
            if self.inequality.equality:
                raise line.error("Entry %s is an equality" % self.tag)
        elif keyword == "hypothesis":
            self.hypothesis_lines.append(line)
        elif keyword == "identical":
            if len(line.words()) != 2:
                raise line.error("Expected 'identical <tag>'")
            self.identical = line.words()[1]
        else:
            raise line.error("Unknown keyword %s" % keyword, 0)

    def _recipe(self):
        if not self.hypothesis_lines:
            return []
        first = self.hypothesis_lines[0].line
        texts = dict((line.line, line.rest(1)) for line in self.hypothesis_lines)
        code = "\n".join(texts.get(number, "") for number in range(first, self.hypothesis_lines[-1].line + 1))
        return parse_hypotheses(code, self.universe, self.file_name, first)

    def build(self):
        if self.inequality is None:
            raise self.line.error("Entry %s has no inequality" % self.tag)
        return CatalogEntry(self.tag, self.inequality, self._recipe(), self.stated, self.identical,
                            self.line.location())


def parse_catalog(code, file_name=None):
    """
    All entries in file order, tags must be unique
    """
    entries = []
    builder = None
    tags = set()
    for line in content_lines(code, file_name):
        keyword = line.words()[0]
        if keyword == "entry":
            if builder is not None:
                entries.append(builder.build())
            builder = _EntryBuilder(line, file_name)
            if builder.tag in tags:
                raise line.error("Duplicate tag %s" % builder.tag, 1)
            tags.add(builder.tag)
        elif builder is None:
            raise line.error("Expected 'entry' before %s" % keyword, 0)
        else:
            builder.add(keyword, line)

    if builder is not None:
        entries.append(builder.build())

    for entry in entries:
        if entry.identical is not None and entry.identical not in tags:
            raise LocationException.error("Entry %s is identical to the unknown entry %s"
                                          % (entry.tag, entry.identical), entry.location)
    return entries


def format_catalog_entry(entry):
    result = ["entry %s %s %s\n" % (entry.tag, "".join(entry.universe.names),
                                    "stated" if entry.stated else "inferred"),
              "inequality %s\n" % format_inequality(entry.inequality)]
    result.extend("hypothesis %s" % line for line in format_hypotheses(entry.recipe).splitlines(True))
    if entry.identical is not None:
        result.append("identical %s\n" % entry.identical)
    return "".join(result)
