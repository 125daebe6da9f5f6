"""
Transform a complex-vector file.
"""

import logging
import sys

from django.conf import settings
from django.core.management.base import CommandError

from apps.common.commands import EXIT_VERIFICATION_FAILED, RadixFFTCommand
from apps.common.vectorio import read_vector, write_vector
from apps.executor.oracle import dft_oracle
from apps.executor.services import SampleBuffer, execute, relative_linf_error
from apps.planner.services import build_plan

logger = logging.getLogger(__name__)


class Command(RadixFFTCommand):
    help = "Apply the FFT to a complex-vector file ('re im' per line)"

    config_fields = ("kind", "radices", "tolerance")
    stealth_options = ("stdin",)

    def add_arguments(self, parser):
        parser.add_argument("--input", type=str, default="-", help="Input vector file, '-' for stdin")
        parser.add_argument("--output", type=str, default="-", help="Output vector file, '-' for stdout")
        parser.add_argument("--kind", type=str, default="dit", help="Plan kind: dit, dif or difw")
        parser.add_argument(
            "--radices",
            type=str,
            default=None,
            help="Comma-separated radices n_K,...,n_0 (default: prime factors)",
        )
        parser.add_argument(
            "--verify",
            action="store_true",
            help="Compare against the direct DFT and report the max relative error",
        )
        parser.add_argument(
            "--tolerance",
            type=float,
            default=None,
            help="Relative error bound for --verify (default: FFT_REL_TOLERANCE)",
        )

    def handle(self, *args, **options):
        config = self.validate_config(options)
        samples = read_vector(options["input"], stdin=options.get("stdin") or sys.stdin)
        plan = build_plan(samples.size, config["kind"], config.get("radices"))

        original = samples.copy() if options["verify"] else None
        buf = SampleBuffer(samples)
        execute(plan, buf)
        comment = f"fft kind={plan.kind.value} n={plan.n} radices={plan.radices}"
        write_vector(options["output"], buf.data, comment=comment, stdout=self.stdout)

        if not options["verify"]:
            return
        tolerance = config.get("tolerance")
        if tolerance is None:
            tolerance = getattr(settings, "FFT_REL_TOLERANCE", 1e-9)
        error = relative_linf_error(buf.data, dft_oracle(original))
        message = f"max relative error vs direct DFT: {error:.3e} (tolerance {tolerance:.1e})"
        if error > tolerance:
            logger.error(f"FFT verification failed for {plan}: {error:.3e}")
            raise CommandError(message, returncode=EXIT_VERIFICATION_FAILED)
        self.stderr.write(self.style.SUCCESS(message))
