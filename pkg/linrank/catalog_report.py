# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Report of a catalog verification run
"""

from xml.etree import ElementTree
import socket
from linrank.color_printer import COLOR_PRINTER


class EntryStatus(object):
    """
    The status of a verified entry
    """
    def __init__(self, name):
        self._name = name

    @property
    def name(self):
        return self._name

    def __eq__(self, other):
        return isinstance(other, type(self)) and self.name == other.name

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._name)

    def __repr__(self):
        return "EntryStatus(%r)" % self._name


PASSED = EntryStatus("passed")
SKIPPED = EntryStatus("skipped")
FAILED = EntryStatus("failed")

STATUS_TEXT = {PASSED: ("pass", 'gi'),
               FAILED: ("fail", 'ri'),
               SKIPPED: ("skip", 'rgi')}


class EntryResult(object):
    """
    Outcome of proving one catalog entry, the output describes the proof or its failure
    """

    def __init__(self, tag, status, time, output=""):
        assert status in (PASSED, FAILED, SKIPPED)
        self.tag = tag
        self.status = status
        self.time = time
        self.output = output

    @property
    def passed(self):
        return self.status == PASSED

    @property
    def skipped(self):
        return self.status == SKIPPED

    @property
    def failed(self):
        return self.status == FAILED

    def print_status(self, printer, padding=0):
        text, color = STATUS_TEXT[self.status]
        printer.write(text, fg=color)
        printer.write(" %s (%.1f seconds)\n" % (self.tag.ljust(padding), self.time))

    def to_xml(self):
        entry = ElementTree.Element("testcase")
        entry.attrib["classname"] = "catalog"
        entry.attrib["name"] = self.tag
        entry.attrib["time"] = "%.1f" % self.time
        if self.failed:
            ElementTree.SubElement(entry, "failure").attrib["message"] = "Failed"
        elif self.skipped:
            ElementTree.SubElement(entry, "skipped").attrib["message"] = "Undecided"
        ElementTree.SubElement(entry, "system-out").text = self.output
        return entry


class CatalogReport(object):
    """
    Collects entry results, the summary follows the catalog order whatever
    order the entries finished in
    """

    def __init__(self, printer=COLOR_PRINTER):
        self._results = {}
        self._expected = []
        self._printer = printer
        self._real_total_time = 0.0

    def set_expected_tags(self, tags):
        self._expected = list(tags)

    def set_real_total_time(self, real_total_time):
        self._real_total_time = real_total_time

    def num_results(self):
        return len(self._results)

    def add_result(self, *args, **kwargs):
        result = EntryResult(*args, **kwargs)
        self._results[result.tag] = result
        if result.tag not in self._expected:
            self._expected.append(result.tag)
        return result

    def result_of(self, tag):
        return self._results[tag]

    def _results_in_order(self):
        return [self._results[tag] for tag in self._expected if tag in self._results]

    def _split(self):
        results = self._results_in_order()
        return ([result for result in results if result.passed],
                [result for result in results if result.failed],
                [result for result in results if result.skipped])

    def print_latest_status(self, result):
        """
        Print one finished entry with the running totals
        """
        passed, failed, skipped = self._split()
        text, color = STATUS_TEXT[result.status]
        self._printer.write(text, fg=color)
        self._printer.write(" (P=%i S=%i F=%i T=%i) %s (%.1f seconds)\n"
                            % (len(passed), len(skipped), len(failed), len(self._expected),
                               result.tag, result.time))

    def all_ok(self):
        return all(result.passed for result in self._results.values())

    def exit_code(self):
        """
        0 when everything was proved, 1 when an entry failed, 2 when an entry was undecided
        """
        _, failed, skipped = self._split()
        if failed:
            return 1
        if skipped:
            return 2
        return 0

    def print_str(self):
        """
        Print the summary table
        """
        passed, failed, skipped = self._split()
        results = self._results_in_order()

        if not results:
            self._printer.write("No entries were verified!", fg="rgi")
            self._printer.write("\n")
            return

        prefix = "==== Summary "
        max_len = max(len(result.tag) for result in results)
        width = max_len + 25
        self._printer.write("%s%s\n" % (prefix, "=" * max(width - len(prefix), 0)))
        for result in results:
            result.print_status(self._printer, padding=max_len)
        self._printer.write("%s\n" % ("=" * width))

        self._printer.write("pass", fg='gi')
        self._printer.write(" %i of %i\n" % (len(passed), len(results)))
        if skipped:
            self._printer.write("skip", fg='rgi')
            self._printer.write(" %i of %i\n" % (len(skipped), len(results)))
        if failed:
            self._printer.write("fail", fg='ri')
            self._printer.write(" %i of %i\n" % (len(failed), len(results)))
        self._printer.write("%s\n" % ("=" * width))

        total_time = sum(result.time for result in results)
        self._printer.write("Total time was %.1f seconds\n" % total_time)
        self._printer.write("Elapsed time was %.1f seconds\n" % self._real_total_time)
        self._printer.write("%s\n" % ("=" * width))

        if failed:
            self._printer.write("Some failed!", fg='ri')
        elif skipped:
            self._printer.write("Some undecided!", fg='rgi')
        else:
            self._printer.write("All proved!", fg='gi')
        self._printer.write("\n")

    def to_junit_xml_str(self):
        _, failed, skipped = self._split()

        root = ElementTree.Element("testsuite")
        root.attrib["name"] = "catalog"
        root.attrib["errors"] = "0"
        root.attrib["failures"] = str(len(failed))
        root.attrib["skipped"] = str(len(skipped))
        root.attrib["tests"] = str(len(self._results))
        root.attrib["hostname"] = socket.gethostname()

        for result in self._results_in_order():
            root.append(result.to_xml())
        return ElementTree.tostring(root, encoding="unicode")
