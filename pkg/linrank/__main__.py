# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Allow running the command line interface as python -m linrank
"""

from linrank.ui import main

main()
