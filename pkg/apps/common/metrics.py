"""
Centralized metrics definitions for radixfft.
This prevents duplicate metric registration errors.
"""

try:
    from prometheus_client import Counter, Histogram

    # Planner metrics
    RADIXFFT_PLANS_BUILT_TOTAL = Counter(
        "radixfft_plans_built_total",
        "Total FFT plans compiled.",
        ["kind"],
    )

    # Executor metrics
    RADIXFFT_TRANSFORMS_TOTAL = Counter(
        "radixfft_transforms_total",
        "Total transforms executed in place.",
        ["kind"],
    )

    RADIXFFT_TRANSFORM_DURATION_SECONDS = Histogram(
        "radixfft_transform_duration_seconds",
        "Wall time of one in-place transform.",
        ["kind"],
    )

    # Accelerator simulator metrics
    RADIXFFT_SIM_BUTTERFLIES_TOTAL = Counter(
        "radixfft_sim_butterflies_total",
        "Total butterfly issues simulated.",
        ["kind"],
    )

    RADIXFFT_SIM_CONFLICTS_TOTAL = Counter(
        "radixfft_sim_conflicts_total",
        "Total butterfly issues that hit a bank conflict.",
        ["mapping"],
    )

    # Verification metrics
    RADIXFFT_VERIFY_CHECKS_TOTAL = Counter(
        "radixfft_verify_checks_total",
        "Total named identity checks run.",
        ["status"],
    )

except ImportError:
    # Create mock objects if prometheus_client is not available
    class MockMetric:
        def labels(self, *args, **kwargs):
            return self

        def inc(self, *args, **kwargs):
            pass

        def observe(self, *args, **kwargs):
            pass

    RADIXFFT_PLANS_BUILT_TOTAL = MockMetric()
    RADIXFFT_TRANSFORMS_TOTAL = MockMetric()
    RADIXFFT_TRANSFORM_DURATION_SECONDS = MockMetric()
    RADIXFFT_SIM_BUTTERFLIES_TOTAL = MockMetric()
    RADIXFFT_SIM_CONFLICTS_TOTAL = MockMetric()
    RADIXFFT_VERIFY_CHECKS_TOTAL = MockMetric()
