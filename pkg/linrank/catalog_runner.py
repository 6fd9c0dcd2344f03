# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Prove catalog entries with a pool of worker threads
"""

import threading
import traceback
import logging
import linrank.ostools as ostools
from linrank.catalog import prove_entry, CATALOG_PREFIX
from linrank.catalog_report import PASSED, FAILED, SKIPPED
from linrank.prover import Proved, NotProvable, verify_certificate
from linrank.parsing.data_formats import format_certificate, format_witness
from linrank.exceptions import LinRankError

LOGGER = logging.getLogger(__name__)


class CatalogRunner(object):
    """
    Proves every entry with its own recipe and adds the results to a report
    """

    def __init__(self, report, settings=None, num_threads=1, output_path=None):
        self._lock = threading.Lock()
        self._report = report
        self._settings = settings
        self._num_threads = num_threads
        self._output_path = output_path

    def run(self, entries):
        entries = list(entries)
        self._report.set_expected_tags([entry.tag for entry in entries])
        scheduler = EntryScheduler(entries)

        threads = []
        try:
            for _ in range(min(self._num_threads, len(entries)) - 1):
                new_thread = threading.Thread(target=self._run_thread, args=(scheduler,))
                threads.append(new_thread)
                new_thread.start()

            # One worker runs in the calling thread so that p=1 is not multithreaded
            self._run_thread(scheduler)
        finally:
            for thread in threads:
                thread.join()
            LOGGER.debug("CatalogRunner: Leaving")

    def _run_thread(self, scheduler):
        while True:
            entry = scheduler.next()
            if entry is None:
                return
            self._run_entry(entry)

    def _run_entry(self, entry):
        start_time = ostools.get_time()
        try:
            status, output = self._prove(entry)
        except LinRankError as exc:
            status, output = FAILED, "%s\n" % exc
        except Exception:  # pylint: disable=broad-except
            status, output = FAILED, traceback.format_exc()

        with self._lock:
            result = self._report.add_result(entry.tag, status, ostools.get_time() - start_time, output)
            self._report.print_latest_status(result)

    def _prove(self, entry):
        """
        The status of the entry and the text of its certificate or witness
        """
        LOGGER.debug("Proving %s with %i common information(s)", entry.tag, len(entry.recipe))
        outcome = prove_entry(entry, self._settings)

        if isinstance(outcome, Proved):
            text = format_certificate(outcome.certificate)
            self._write_artifact(entry, ".cert", text)
            if not verify_certificate(outcome.certificate):
                return FAILED, "Certificate does not verify\n" + text
            return PASSED, text

        if isinstance(outcome, NotProvable):
            text = format_witness(outcome.witness)
            self._write_artifact(entry, ".witness", text)
            return FAILED, "Not provable from its common informations\n" + text

        return SKIPPED, "Undecided after %i pivots\n" % outcome.pivots

    def _write_artifact(self, entry, suffix, text):
        if self._output_path is None:
            return
        ostools.write_file(ostools.artifact_path(CATALOG_PREFIX + entry.tag, suffix, self._output_path), text)


class EntryScheduler(object):
    """
    Hands out the entries to the worker threads in order
    """

    def __init__(self, entries):
        self._lock = threading.Lock()
        self._entries = entries
        self._idx = 0

    def next(self):
        """
        The next entry or None when every entry is handed out
        """
        with self._lock:
            if self._idx >= len(self._entries):
                return None
            self._idx += 1
            return self._entries[self._idx - 1]
