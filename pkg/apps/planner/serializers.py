"""
Plan documents.

Permutations are written as their forward image lists and twiddles as exact
[numerator, denominator] exponent pairs of omega, never as floats.
"""

import json

from rest_framework import serializers

from apps.planner.plans import FftPlan

PLAN_SCHEMA_VERSION = 1


class PermutationField(serializers.Field):
    def to_representation(self, value):
        return value.tolist()


class TwiddleField(serializers.Field):
    def to_representation(self, value):
        return [list(pair) for pair in value.pairs()]


class StagePlanSerializer(serializers.Serializer):
    stage_index = serializers.IntegerField(read_only=True)
    radix = serializers.IntegerField(read_only=True)
    butterfly_count = serializers.IntegerField(read_only=True)
    twiddle_position = serializers.CharField(read_only=True)
    identity_perm = serializers.SerializerMethodField()
    identity_twiddle = serializers.SerializerMethodField()
    pre_perm = PermutationField(read_only=True)
    post_perm = PermutationField(read_only=True)
    twiddle = TwiddleField(read_only=True)

    def get_identity_perm(self, stage) -> bool:
        return stage.pre_perm.is_identity

    def get_identity_twiddle(self, stage) -> bool:
        return stage.twiddle.is_identity


class FftPlanSerializer(serializers.Serializer):
    """
    Plan document: kind, radices in written order (n_K first), the
    digit-reversal permutation with its side, and the stages in
    application order.
    """

    schema = serializers.SerializerMethodField()
    n = serializers.IntegerField(read_only=True)
    kind = serializers.CharField(read_only=True)
    radices = serializers.SerializerMethodField()
    io_perm_position = serializers.CharField(read_only=True)
    io_perm = PermutationField(read_only=True)
    stages = StagePlanSerializer(many=True, read_only=True)

    def get_schema(self, plan) -> int:
        return PLAN_SCHEMA_VERSION

    def get_radices(self, plan):
        return list(plan.radices.radices)


def render_plan_json(plan: FftPlan) -> str:
    """Byte-stable JSON rendering of a plan."""
    return json.dumps(FftPlanSerializer(plan).data, sort_keys=True, indent=2) + "\n"
