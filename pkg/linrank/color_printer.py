# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Terminal output of reports and command results

Colors are strings of the letters r, g and b, an i makes the foreground
bold and the background underlined, 'gi' is bold green.
"""

import sys

_COLOR_BITS = {"r": 1, "g": 2, "b": 4}
_RESET = "\033[0m"


def _color_code(base, color):
    return base + sum(bit for letter, bit in _COLOR_BITS.items() if letter in color)


def ansi_codes(fg=None, bg=None):
    """
    The SGR parameters selecting the colors, empty without colors
    """
    codes = []
    if fg is not None:
        codes.append(_color_code(30, fg))
    if bg is not None:
        codes.append(_color_code(40, bg))
    if fg is not None and "i" in fg:
        codes.append(1)
    if bg is not None and "i" in bg:
        codes.append(4)
    return codes


class ColorPrinter(object):
    """
    Writes text to stdout or a given stream, colored with ANSI escapes unless disabled
    """

    def __init__(self, use_color=True):
        self._use_color = use_color

    def write(self, text, output_file=None, fg=None, bg=None):
        stream = sys.stdout if output_file is None else output_file
        codes = ansi_codes(fg, bg) if self._use_color else []
        if codes:
            text = "\033[%sm%s%s" % (";".join(str(code) for code in codes), text, _RESET)
        stream.write(text)


NO_COLOR_PRINTER = ColorPrinter(use_color=False)
COLOR_PRINTER = ColorPrinter()
