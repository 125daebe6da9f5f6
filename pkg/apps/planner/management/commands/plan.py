"""
Print the plan document for a transform length.
"""

import logging

from apps.common.commands import RadixFFTCommand
from apps.planner.serializers import render_plan_json
from apps.planner.services import build_plan

logger = logging.getLogger(__name__)


class Command(RadixFFTCommand):
    help = "Compile an FFT plan and print it as JSON"

    config_fields = ("n", "kind", "radices")

    def add_arguments(self, parser):
        parser.add_argument("--n", type=int, required=True, help="Transform length N")
        parser.add_argument(
            "--kind",
            type=str,
            default="dit",
            help="Plan kind: dit, dif or difw",
        )
        parser.add_argument(
            "--radices",
            type=str,
            default=None,
            help="Comma-separated radices n_K,...,n_0 (default: prime factors)",
        )

    def handle(self, *args, **options):
        config = self.validate_config(options)
        plan = build_plan(config["n"], config["kind"], config.get("radices"))
        self.stdout.write(render_plan_json(plan), ending="")
