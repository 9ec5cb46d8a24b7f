from prometheus_client import CollectorRegistry, Counter, Gauge, Histogram

# Отдельный реестр: в файл метрик попадают только метрики бенчмарка
BENCH_REGISTRY = CollectorRegistry()

# Метрики бенчмарка архивов
BENCH_RUNS_TOTAL = Counter(
    'archive_bench_runs_total',
    'Total number of benchmark repetitions completed',
    ['backend'],
    registry=BENCH_REGISTRY,
)

BENCH_COMPARISONS_TOTAL = Counter(
    'archive_bench_comparisons_total',
    'Total number of Pareto dominance comparisons performed',
    ['backend'],
    registry=BENCH_REGISTRY,
)

BENCH_RUN_DURATION = Histogram(
    'archive_bench_run_duration_seconds',
    'Wall time of the archive updates in one repetition',
    ['backend'],
    buckets=(0.001, 0.01, 0.1, 0.5, 1.0, 5.0, 10.0, 30.0, 60.0, 300.0),
    registry=BENCH_REGISTRY,
)

ARCHIVE_SIZE = Gauge(
    'archive_bench_final_size',
    'Final archive size of the most recent repetition',
    ['backend'],
    registry=BENCH_REGISTRY,
)

VERIFICATION_FAILURES_TOTAL = Counter(
    'archive_bench_verification_failures_total',
    'Total number of repetitions whose archive differed from the oracle',
    ['backend'],
    registry=BENCH_REGISTRY,
)
