# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

from setuptools import setup
from linrank.about import version, doc

setup(
    name='linrank',
    version=version(),
    packages=['linrank',
              'linrank.parsing',
              'linrank.test',
              'linrank.test.lint',
              'linrank.test.unit',
              'linrank.test.acceptance'],
    package_data={'linrank': ['data/catalog.txt', 'data/forests.txt']},
    install_requires=['sympy', 'numpy', 'scipy'],
    python_requires='>=3.6',
    entry_points={'console_scripts': ['linrank = linrank.ui:main']},
    zip_safe=False,
    classifiers=['Development Status :: 4 - Beta',
                 'License :: OSI Approved :: Mozilla Public License 2.0 (MPL 2.0)',
                 'Natural Language :: English',
                 'Intended Audience :: Science/Research',
                 'Programming Language :: Python :: 3',
                 'Operating System :: OS Independent',
                 'Topic :: Scientific/Engineering :: Mathematics'],
    description="linrank proves and explores linear rank inequalities with exact certificates.",
    long_description=doc())
