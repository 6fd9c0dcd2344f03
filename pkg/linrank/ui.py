# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
The linrank command line tool

Inequalities are given as a file, inline or as catalog:(tag) for a built in
catalog entry.  Certificates, witnesses and traces are written as
.cert, .witness and .trace files beside file inputs and to the output path
for other inputs.
"""

import sys
import logging
from fnmatch import fnmatchcase
from os.path import basename
import linrank.ostools as ostools
from linrank.linrank_cli import LinRankCLI, USAGE_ERROR
from linrank.color_printer import COLOR_PRINTER, NO_COLOR_PRINTER
from linrank.parsing.tokenizer import LocationException
from linrank.parsing.expression_parser import parse_inequality
from linrank.parsing.hypothesis_parser import parse_hypotheses
from linrank.parsing.forest_parser import parse_forest_spec
from linrank.parsing.data_formats import (parse_rank_vector, parse_matrices, format_rank_vector,
                                          format_certificate, format_witness, format_trace,
                                          parse_certificate, parse_witness)
from linrank.expression import format_inequality
from linrank.prover import (ProverSettings, Proved, NotProvable, prove,
                            verify_certificate, check_witness)
from linrank.common_information import prove_with_common_informations, prove_k_slack
from linrank.catalog import catalog, catalog_entry, catalog_forest, CATALOG_PREFIX
from linrank.catalog_report import CatalogReport
from linrank.catalog_runner import CatalogRunner
from linrank.polymatroid import validate_polymatroid, tight_set, extremality_check
from linrank.inequality_sets import inequality_set
from linrank.representation import ranks_from_matrices, ranks_mod_p
from linrank.repr_search import SearchSuccess, search_representation, realize_trace, DEFAULT_PRIME
from linrank.families import family
from linrank.forest import forest_inequality
from linrank.exceptions import (LinRankError, UniverseError, RankVectorError, ValidationError,
                                InequalityViolated, RetryBudgetExhausted, CertificateFormatError,
                                FamilyRangeError)

LOGGER = logging.getLogger(__name__)

FORMAT_ERRORS = (CertificateFormatError, RankVectorError, UniverseError, FamilyRangeError)
MAX_REPORTED_ORDERS = 5


class LinRank(object):
    """
    Runs one command of the command line tool

    :example:

    .. code-block:: python

       from linrank.ui import LinRank
       exit_code = LinRank.from_argv(["ranks", "example.mat"]).run()
    """

    @classmethod
    def from_argv(cls, argv=None):
        """
        Create an instance from command line arguments

        :param argv: Use explicit argv instead of actual command line argument
        """
        args = LinRankCLI().parse_args(argv=argv)
        return cls.from_args(args)

    @classmethod
    def from_args(cls, args):
        """
        Create an instance from an args namespace, intended for users adding
        custom command line options
        """
        return cls(args)

    def __init__(self, args, printer=None):
        self._args = args
        self._configure_logging(args.log_level)
        if printer is None:
            printer = NO_COLOR_PRINTER if args.no_color else COLOR_PRINTER
        self._printer = printer
        self._settings = ProverSettings(pivot_limit=args.pivot_limit,
                                        warm_start=not args.no_warm_start)

    @staticmethod
    def _configure_logging(log_level):
        """
        Configure logging based on log_level string
        """
        level = getattr(logging, log_level.upper())
        logging.basicConfig(filename=None, format='%(levelname)7s - %(message)s', level=level)

    def main(self):
        """
        Run the command and exit
        """
        sys.exit(self.run())

    def run(self):
        """
        Run the command and return the exit code
        """
        try:
            return self._main()
        except KeyboardInterrupt:
            return 1
        except LocationException as exc:
            exc.log(LOGGER)
            return USAGE_ERROR
        except FORMAT_ERRORS as exc:
            LOGGER.error(str(exc))
            return USAGE_ERROR
        except (InequalityViolated, ValidationError) as exc:
            LOGGER.error(str(exc))
            return 1
        except RetryBudgetExhausted as exc:
            LOGGER.error(str(exc))
            return 2
        except LinRankError as exc:
            LOGGER.error(str(exc))
            return USAGE_ERROR
        except (IOError, OSError) as exc:
            LOGGER.error(str(exc))
            return USAGE_ERROR

    def _main(self):
        commands = {"prove": self._main_prove,
                    "catalog": self._main_catalog,
                    "check-ray": self._main_check_ray,
                    "represent": self._main_represent,
                    "ranks": self._main_ranks,
                    "family": self._main_family,
                    "forest": self._main_forest,
                    "verify": self._main_verify}
        return commands[self._args.command]()

    def _write(self, text, fg=None):
        self._printer.write(text, fg=fg)

    def _write_artifact(self, input_name, suffix, text):
        file_name = ostools.artifact_path(input_name, suffix, self._args.output_path)
        ostools.write_file(file_name, text)
        self._write("Wrote %s\n" % ostools.simplify_path(file_name))

    @staticmethod
    def _read_inequality(text):
        """
        The inequality, its recipe and the input name used for artifacts
        """
        if text.startswith(CATALOG_PREFIX):
            entry = catalog_entry(text)
            return entry.inequality, entry.recipe, text
        if ostools.file_exists(text):
            return parse_inequality(ostools.read_file(text), label=basename(text), file_name=text), [], text
        return parse_inequality(text), [], None

    def _main_prove(self):
        """
        Prove with the given or catalog hypotheses, or the slack form when k is given
        """
        inequality, decls, input_name = self._read_inequality(self._args.inequality)
        if self._args.hypotheses is not None:
            decls = parse_hypotheses(ostools.read_file(self._args.hypotheses), inequality.universe,
                                     file_name=self._args.hypotheses)

        if self._args.k is not None:
            outcome = prove_k_slack(inequality, decls, self._args.k, settings=self._settings)
        elif decls:
            outcome = prove_with_common_informations(inequality, decls, self._settings)
        else:
            outcome = prove(inequality, (), self._settings)

        self._write("%s: " % format_inequality(inequality))
        if isinstance(outcome, Proved):
            self._write("proved\n", fg='gi')
            self._write_artifact(input_name, ".cert", format_certificate(outcome.certificate))
        elif isinstance(outcome, NotProvable):
            self._write("not provable\n", fg='ri')
            self._write("Counterexample %s\n" % format_rank_vector(outcome.witness.vector))
            self._write_artifact(input_name, ".witness", format_witness(outcome.witness))
        else:
            self._write("undecided after %i pivots\n" % outcome.pivots, fg='rgi')
        return outcome.exit_code

    def _catalog_entries(self):
        entries = [entry for entry in catalog()
                   if any(fnmatchcase(entry.tag, pattern) for pattern in self._args.tag_patterns)]

        dropped = {}
        for tag, index in self._args.drop_hypothesis:
            entry = catalog_entry(tag)
            if not 0 <= index < len(entry.recipe):
                raise LinRankError("Entry %s has no recipe declaration %i" % (entry.tag, index))
            dropped.setdefault(entry.tag, set()).add(index)

        result = []
        for entry in entries:
            if entry.tag in dropped:
                keep = set(range(len(entry.recipe))) - dropped[entry.tag]
                entry = entry.truncated(keep)
                LOGGER.info("Proving %s with %i of its declarations", entry.tag, len(keep))
            result.append(entry)
        return result

    def _main_catalog(self):
        entries = self._catalog_entries()

        if self._args.list:
            for entry in entries:
                self._write("%s %s\n" % (entry.tag, format_inequality(entry.inequality)))
            self._write("Listed %i entries\n" % len(entries))
            return 0

        start_time = ostools.get_time()
        report = CatalogReport(printer=self._printer)
        runner = CatalogRunner(report, self._settings,
                               num_threads=self._args.num_threads,
                               output_path=self._args.output_path)
        runner.run(entries)
        report.set_real_total_time(ostools.get_time() - start_time)

        report.print_str()
        if self._args.xunit_xml is not None:
            ostools.write_file(self._args.xunit_xml, report.to_junit_xml_str())
        return report.exit_code()

    def _read_vector(self):
        file_name = self._args.vector
        return parse_rank_vector(ostools.read_file(file_name), file_name=file_name)

    def _main_check_ray(self):
        """
        Satisfaction, tight set and extremality against a named inequality set
        """
        vector = self._read_vector()
        violation = validate_polymatroid(vector)
        if violation is not None:
            self._write("Not a polymatroid: %s\n" % violation, fg='ri')
            return 1

        inequalities = inequality_set(self._args.ineq_set, vector.universe)
        tight = tight_set(vector, inequalities)
        for index in tight:
            LOGGER.info("Tight: %s", inequalities[index].label or inequalities[index])

        self._write("Satisfies all %i inequalities of %s\n" % (len(inequalities), self._args.ineq_set))
        self._write("Tight inequalities: %i\n" % len(tight))
        if extremality_check(vector, inequalities):
            self._write("Extreme ray\n", fg='gi')
        else:
            self._write("Not an extreme ray\n", fg='rgi')
        return 0

    def _main_represent(self):
        vector = self._read_vector()
        outcome = search_representation(vector, self._args.permutations)

        if not isinstance(outcome, SearchSuccess):
            self._write("No representation found (%s)\n" % outcome.status, fg='ri')
            for order, result in outcome.reasons[:MAX_REPORTED_ORDERS]:
                self._write("  %s: %r\n" % (" ".join(order), result))
            if len(outcome.reasons) > MAX_REPORTED_ORDERS:
                self._write("  and %i more orders\n" % (len(outcome.reasons) - MAX_REPORTED_ORDERS))
            return outcome.exit_code

        text = format_trace(outcome.trace)
        self._write(text)
        self._write("Represented with order %s\n" % " ".join(outcome.trace.order), fg='gi')
        self._write_artifact(self._args.vector, ".trace", text)

        if self._args.seed is not None:
            prime = DEFAULT_PRIME if self._args.prime is None else self._args.prime
            representation = realize_trace(outcome.trace, vector, prime, self._args.seed)
            if ranks_mod_p(representation, prime) != vector:
                self._write("Matrices drawn with seed %i lost general position\n" % self._args.seed, fg='rgi')
                return 2
            self._write("Matrices over GF(%i) drawn with seed %i have the rank vector\n"
                        % (prime, self._args.seed))
        return outcome.exit_code

    def _main_ranks(self):
        file_name = self._args.matrices
        representation = parse_matrices(ostools.read_file(file_name), file_name=file_name)
        if self._args.prime is None:
            vector = ranks_from_matrices(representation)
        else:
            vector = ranks_mod_p(representation, self._args.prime)
        self._write(format_rank_vector(vector) + "\n")
        return 0

    def _main_family(self):
        self._write(format_inequality(family(self._args.kind, self._args.n)) + "\n")
        return 0

    def _main_forest(self):
        name = self._args.spec
        if name.startswith(CATALOG_PREFIX):
            spec = catalog_forest(name[len(CATALOG_PREFIX):])
        else:
            spec = parse_forest_spec(ostools.read_file(name), file_name=name)
        self._write(format_inequality(forest_inequality(spec)) + "\n")
        return 0

    def _main_verify(self):
        """
        Re-check a certificate or, for .witness files, a counterexample
        """
        file_name = self._args.artifact
        code = ostools.read_file(file_name)
        if file_name.endswith(".witness"):
            what = "Witness"
            valid = check_witness(parse_witness(code, file_name))
        else:
            what = "Certificate"
            valid = verify_certificate(parse_certificate(code, file_name))

        if valid:
            self._write("%s is valid\n" % what, fg='gi')
            return 0
        self._write("%s is invalid\n" % what, fg='ri')
        return 1


def main(argv=None):
    """
    Console script entry point
    """
    LinRank.from_argv(argv).main()
