# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Tokens of the inequality and hypothesis languages
"""

from linrank.parsing.tokenizer import new_token_kind

NUMBER = new_token_kind("number")
IDENTIFIER = new_token_kind("identifier")
WHITESPACE = new_token_kind("whitespace")
COMMENT = new_token_kind("comment")
LPAR = new_token_kind("'('")
RPAR = new_token_kind("')'")
SEMI_COLON = new_token_kind("';'")
BAR = new_token_kind("'|'")
COMMA = new_token_kind("','")
PLUS = new_token_kind("'+'")
MINUS = new_token_kind("'-'")
STAR = new_token_kind("'*'")
LESS_EQUAL = new_token_kind("'<='")
GREATER_EQUAL = new_token_kind("'>='")
EQUAL = new_token_kind("'='")
OTHER = new_token_kind("other")

RELATIONS = (LESS_EQUAL, GREATER_EQUAL, EQUAL)
