# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
File system access and artifact naming, kept in one place so that it can be stubbed in tests
"""

import logging
import os
import time
from os.path import isfile, dirname, relpath, splitext, join

LOGGER = logging.getLogger(__name__)


def read_file(file_name, encoding="utf-8"):
    """
    The text of a file, undecodable bytes are dropped with a warning
    """
    with open(file_name, "rb") as fptr:
        data = fptr.read()
    try:
        return data.decode(encoding)
    except UnicodeDecodeError:
        LOGGER.warning("Could not decode %s as %s, ignoring the undecodable bytes", file_name, encoding)
        return data.decode(encoding, errors="ignore")


def write_file(file_name, contents, encoding="utf-8"):
    """
    Write the text creating missing parent directories
    """
    parent = dirname(file_name)
    if parent:
        os.makedirs(parent, exist_ok=True)
    with open(file_name, "wb") as fptr:
        fptr.write(contents.encode(encoding))


def file_exists(file_name):
    return isfile(file_name)


def get_time():
    return time.time()


def simplify_path(path):
    """
    The path relative to the working directory when it lies below it
    """
    try:
        relative = relpath(path)
    except ValueError:
        # Another drive
        return path
    return path if relative.startswith(os.pardir) else relative


def artifact_path(input_name, suffix, output_path=None):
    """
    Return where the artifact with suffix for input_name is written

    Artifacts of file inputs go beside the file, artifacts of inline inputs
    such as catalog:(1) go to the output path.
    """
    if input_name is not None and file_exists(input_name):
        return splitext(input_name)[0] + suffix

    if output_path is None:
        output_path = os.getcwd()

    base = "inline" if input_name is None else _safe_name(input_name)
    return join(output_path, base + suffix)


def _safe_name(name):
    """
    Turn catalog:(19b) into catalog_19b
    """
    words = "".join(char if char.isalnum() else " " for char in name).split()
    return "_".join(words)
