"""
Shared plumbing for the radixfft management commands.
"""

import logging

from django.core.management.base import BaseCommand, CommandError

from apps.common.exceptions import RadixFFTError
from apps.common.serializers import CliConfigSerializer

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PARSE_ERROR = 2
EXIT_PRECONDITION = 3
EXIT_VERIFICATION_FAILED = 4


class RadixFFTCommand(BaseCommand):
    """
    Base class: validates flags through CliConfigSerializer and turns library
    errors into distinct exit codes.
    """

    #: option names forwarded to CliConfigSerializer
    config_fields = ()

    def execute(self, *args, **options):
        try:
            return super().execute(*args, **options)
        except RadixFFTError as exc:
            logger.debug("command failed with %s", type(exc).__name__)
            raise CommandError(str(exc), returncode=EXIT_PRECONDITION) from exc

    def validate_config(self, options):
        data = {
            name: options[name]
            for name in self.config_fields
            if options.get(name) is not None
        }
        serializer = CliConfigSerializer(data=data)
        if not serializer.is_valid():
            messages = "; ".join(
                f"{field}: {' '.join(str(e) for e in errors)}"
                for field, errors in sorted(serializer.errors.items())
            )
            raise CommandError(messages, returncode=EXIT_PARSE_ERROR)
        return serializer.validated_data
