"""
Run the identity checks and report a counterexample on failure.
"""

import argparse
import json
import logging

from django.core.management.base import CommandError

from apps.common.commands import EXIT_VERIFICATION_FAILED, RadixFFTCommand
from apps.verification.identities import check_names
from apps.verification.services import run_suite

logger = logging.getLogger(__name__)


class Command(RadixFFTCommand):
    help = "Check every matrix identity and factorization up to a size bound"

    config_fields = ("max_n", "kinds", "seed")

    def add_arguments(self, parser):
        parser.add_argument("--max-n", type=int, default=64, help="Largest transform size to check")
        parser.add_argument(
            "--kinds",
            type=str,
            default="dit,dif,difw",
            help="Comma-separated plan kinds to cover",
        )
        parser.add_argument("--seed", type=int, default=None, help="Seed for randomised checks")
        parser.add_argument("--workers", type=int, default=None, help="Thread pool size")
        parser.add_argument(
            "--check",
            action="append",
            choices=check_names(),
            dest="checks",
            help="Run only this check (repeatable)",
        )
        parser.add_argument("--json", action="store_true", help="Print the full report as JSON")
        parser.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)

    def handle(self, *args, **options):
        config = self.validate_config(options)
        report = run_suite(
            config["max_n"],
            kinds=config["kinds"],
            seed=config["seed"],
            workers=options["workers"],
            inject_fault=options["inject_fault"],
            names=options["checks"],
        )

        if options["json"]:
            self.stdout.write(json.dumps(report.to_dict(), sort_keys=True, indent=2))
        else:
            for result in report.results:
                status = "PASS" if result.passed else "FAIL"
                self.stdout.write(
                    f"{status} {result.name:<30} cases={result.cases:<6} max_error={result.max_error:.3e}"
                )

        if report.passed:
            self.stderr.write(
                self.style.SUCCESS(f"All {len(report.results)} checks passed up to N={report.max_n}")
            )
            return
        for result in report.failures:
            self.stderr.write(self.style.ERROR(f"counterexample for {result.name}:"))
            self.stderr.write(json.dumps(result.counterexample, sort_keys=True))
        names = ", ".join(result.name for result in report.failures)
        raise CommandError(f"verification failed: {names}", returncode=EXIT_VERIFICATION_FAILED)
