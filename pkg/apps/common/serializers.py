"""
Validation of command-line configuration before dispatch.
"""

from django.conf import settings
from rest_framework import serializers

KIND_CHOICES = ["dit", "dif", "difw"]
MAPPING_CHOICES = ["digit-sum", "mod"]


def _parse_int_list(value: str, field_name: str, minimum: int):
    try:
        items = [int(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise serializers.ValidationError(
            f"{field_name} must be a comma-separated list of integers"
        )
    if not items:
        raise serializers.ValidationError(f"{field_name} must not be empty")
    if any(item < minimum for item in items):
        raise serializers.ValidationError(
            f"every entry of {field_name} must be >= {minimum}"
        )
    return items


class CliConfigSerializer(serializers.Serializer):
    """
    CliConfig: the union of all command flags.

    Commands validate only the flags they accept; values that pass here still
    go through the library's own precondition checks.
    """

    n = serializers.IntegerField(min_value=1, required=False)
    radices = serializers.CharField(required=False, allow_null=True)
    kind = serializers.ChoiceField(choices=KIND_CHOICES, default="dit")
    kinds = serializers.CharField(required=False, default="dit,dif,difw")
    r = serializers.IntegerField(min_value=2, required=False)
    pipeline_depth = serializers.IntegerField(
        min_value=0, default=lambda: getattr(settings, "ACCEL_PIPELINE_DEPTH", 0)
    )
    mapping = serializers.ChoiceField(choices=MAPPING_CHOICES, default="digit-sum")
    seed = serializers.IntegerField(
        default=lambda: getattr(settings, "FFT_DEFAULT_SEED", 20240607)
    )
    tolerance = serializers.FloatField(min_value=0.0, required=False, allow_null=True)
    max_n = serializers.IntegerField(min_value=1, required=False)

    def validate_radices(self, value):
        if value in (None, ""):
            return None
        return _parse_int_list(value, "radices", minimum=1)

    def validate_kinds(self, value):
        kinds = [part.strip() for part in value.split(",") if part.strip()]
        unknown = sorted(set(kinds) - set(KIND_CHOICES))
        if unknown:
            raise serializers.ValidationError(f"unknown kind(s): {', '.join(unknown)}")
        if not kinds:
            raise serializers.ValidationError("kinds must not be empty")
        return kinds
