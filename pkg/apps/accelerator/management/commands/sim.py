"""
Simulate the bank accesses of a pure radix-R plan.
"""

import logging

from apps.accelerator.config import AccelConfig, pure_radix_exponent
from apps.accelerator.mappings import get_mapping
from apps.accelerator.serializers import iter_trace_lines, render_summary_line
from apps.accelerator.simulator import simulate
from apps.common.commands import RadixFFTCommand
from apps.common.exceptions import FileAccessError
from apps.planner.services import build_plan

logger = logging.getLogger(__name__)


class Command(RadixFFTCommand):
    help = "Simulate a radix-R memory-based FFT accelerator and emit a JSONL trace"

    config_fields = ("n", "r", "kind", "mapping", "pipeline_depth", "radices")

    def add_arguments(self, parser):
        parser.add_argument("--n", type=int, required=True, help="Transform length N = R^q")
        parser.add_argument("--r", type=int, required=True, help="Butterfly radix R = number of banks")
        parser.add_argument("--kind", type=str, default="dit", help="Plan kind: dit, dif or difw")
        parser.add_argument(
            "--mapping",
            type=str,
            default="digit-sum",
            help="Bank mapping: digit-sum or mod",
        )
        parser.add_argument(
            "--pipeline-depth",
            dest="pipeline_depth",
            type=int,
            default=None,
            help="PU pipeline depth C_p (default: ACCEL_PIPELINE_DEPTH)",
        )
        parser.add_argument(
            "--radices",
            type=str,
            default=None,
            help="Explicit radices n_K,...,n_0 (default: R repeated q times)",
        )
        parser.add_argument(
            "--no-overlap",
            action="store_true",
            help="Reads and writes of one butterfly take separate clocks",
        )
        parser.add_argument("--trace", type=str, default=None, help="Write the trace to this file")
        parser.add_argument("--summary-only", action="store_true", help="Print only the summary line")

    def handle(self, *args, **options):
        config = self.validate_config(options)
        n, radix = config["n"], config["r"]
        radices = config.get("radices") or [radix] * pure_radix_exponent(n, radix)
        plan = build_plan(n, config["kind"], radices)
        cfg = AccelConfig(
            radix=radix,
            pipeline_depth=config["pipeline_depth"],
            overlap=not options["no_overlap"],
        )
        trace, report = simulate(plan, cfg, get_mapping(config["mapping"], radix))
        trace.validate()

        if options["trace"]:
            try:
                with open(options["trace"], "w", encoding="utf-8", newline="\n") as handle:
                    handle.writelines(iter_trace_lines(trace))
            except OSError as exc:
                raise FileAccessError(f"cannot write trace {options['trace']}: {exc}") from exc
        elif not options["summary_only"]:
            for line in iter_trace_lines(trace):
                self.stdout.write(line, ending="")
        self.stdout.write(render_summary_line(report), ending="")

        message = (
            f"{report.cycles} cycles, {report.conflicts} conflicts, "
            f"predicted {report.predicted_cycles}"
        )
        style = self.style.SUCCESS if report.conflict_free else self.style.WARNING
        self.stderr.write(style(message))
