# Métricas de cómputo para Fock-Lab (duraciones y conteo de chequeos)

import time
import logging
from typing import Callable, Dict
from functools import wraps
from dataclasses import dataclass, field
from collections import defaultdict
from threading import Lock

logger = logging.getLogger(__name__)


@dataclass
class MetricCounter:
    """Contador simple para métricas"""

    value: int = 0
    _lock: Lock = field(default_factory=Lock)

    def inc(self, amount: int = 1):
        with self._lock:
            self.value += amount

    def get(self) -> int:
        return self.value


@dataclass
class MetricHistogram:
    """Histograma de duraciones (ms)"""

    values: list = field(default_factory=list)
    _lock: Lock = field(default_factory=Lock)

    def observe(self, value: float):
        with self._lock:
            self.values.append(value)
            if len(self.values) > 1000:
                self.values = self.values[-1000:]

    def get_stats(self) -> Dict:
        if not self.values:
            return {"count": 0, "avg": 0, "min": 0, "max": 0}
        count = len(self.values)
        return {
            "count": count,
            "avg": sum(self.values) / count,
            "min": min(self.values),
            "max": max(self.values),
        }


class MetricsCollector:
    """Colector singleton de métricas del laboratorio"""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance._initialized = False
        return cls._instance

    def __init__(self):
        if self._initialized:
            return
        self.durations = defaultdict(MetricHistogram)  # por operación
        self.checks_total = defaultdict(MetricCounter)  # por suite
        self.checks_failed = defaultdict(MetricCounter)
        self._initialized = True

    def record_duration(self, name: str, duration_ms: float):
        self.durations[name].observe(duration_ms)

    def record_check(self, suite: str, passed: bool):
        self.checks_total[suite].inc()
        if not passed:
            self.checks_failed[suite].inc()

    def get_metrics(self) -> Dict:
        return {
            "durations_ms": {k: v.get_stats() for k, v in self.durations.items()},
            "checks_total": {k: v.get() for k, v in self.checks_total.items()},
            "checks_failed": {k: v.get() for k, v in self.checks_failed.items()},
        }

    def reset(self):
        self.durations.clear()
        self.checks_total.clear()
        self.checks_failed.clear()


metrics = MetricsCollector()


def timed(name: str = None) -> Callable:
    """Decorador: registra la duración y la loguea en INFO"""

    def decorator(func: Callable) -> Callable:
        label = name or func.__name__

        @wraps(func)
        def wrapper(*args, **kwargs):
            start = time.perf_counter()
            try:
                return func(*args, **kwargs)
            finally:
                elapsed = (time.perf_counter() - start) * 1000
                metrics.record_duration(label, elapsed)
                logger.info(f"{label}: {elapsed:.1f} ms")

        return wrapper

    return decorator
