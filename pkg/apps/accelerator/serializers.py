"""
Trace and summary documents, one JSON object per line.

Issue lines carry ``"record": "issue"``; the final line carries
``"record": "summary"``. Every line has ``"schema": 1``.
"""

import json
from typing import Iterator

from rest_framework import serializers

from apps.accelerator.simulator import AccessTrace, SimulationReport

TRACE_SCHEMA_VERSION = 1


class IntTupleField(serializers.Field):
    def to_representation(self, value):
        return list(value)


class AccessRecordSerializer(serializers.Serializer):
    schema = serializers.SerializerMethodField()
    record = serializers.SerializerMethodField()
    clock = serializers.IntegerField(read_only=True)
    stage = serializers.IntegerField(read_only=True)
    butterfly = serializers.IntegerField(read_only=True)
    reads = IntTupleField(read_only=True)
    writes = IntTupleField(read_only=True)
    read_banks = IntTupleField(read_only=True)
    write_banks = IntTupleField(read_only=True)
    read_rows = IntTupleField(read_only=True)
    write_rows = IntTupleField(read_only=True)
    stall = serializers.BooleanField(read_only=True)

    def get_schema(self, record) -> int:
        return TRACE_SCHEMA_VERSION

    def get_record(self, record) -> str:
        return "issue"


class SimulationReportSerializer(serializers.Serializer):
    schema = serializers.SerializerMethodField()
    record = serializers.SerializerMethodField()
    n = serializers.IntegerField(read_only=True)
    radix = serializers.IntegerField(read_only=True)
    stages = serializers.IntegerField(read_only=True)
    kind = serializers.CharField(read_only=True)
    mapping = serializers.CharField(read_only=True)
    pipeline_depth = serializers.IntegerField(read_only=True)
    overlap = serializers.BooleanField(read_only=True)
    issues = serializers.IntegerField(read_only=True)
    conflicts = serializers.IntegerField(read_only=True)
    stall_cycles = serializers.IntegerField(read_only=True)
    cycles = serializers.IntegerField(read_only=True)
    predicted_cycles = serializers.IntegerField(read_only=True)
    conflict_free = serializers.BooleanField(read_only=True)
    first_conflict = AccessRecordSerializer(read_only=True, allow_null=True)

    def get_schema(self, report) -> int:
        return TRACE_SCHEMA_VERSION

    def get_record(self, report) -> str:
        return "summary"


def _line(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"


def iter_trace_lines(trace: AccessTrace) -> Iterator[str]:
    for record in trace:
        yield _line(AccessRecordSerializer(record).data)


def render_summary_line(report: SimulationReport) -> str:
    return _line(SimulationReportSerializer(report).data)
