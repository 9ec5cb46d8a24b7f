from enum import Enum
from typing import Optional

import numpy as np
from pydantic import BaseModel, Field, model_validator

from core.config import settings


class Shape(str, Enum):
    CONVEX = "convex"
    NONCONVEX = "nonconvex"
    CLUSTERED = "clustered"


class QualityLevel(str, Enum):
    Q1 = "q1"
    Q2 = "q2"
    Q3 = "q3"
    Q4 = "q4"
    Q5 = "q5"

    @property
    def epsilon(self) -> float:
        return QUALITY_EPSILON[self]


QUALITY_EPSILON = {
    QualityLevel.Q1: 0.5,
    QualityLevel.Q2: 0.25,
    QualityLevel.Q3: 0.1,
    QualityLevel.Q4: 0.05,
    QualityLevel.Q5: 0.01,
}


class GeneratorSpec(BaseModel):
    n: int = Field(ge=1)
    p: int = Field(ge=2)
    v_max: int = Field(default_factory=lambda: settings.DEFAULT_V_MAX, ge=1)
    epsilon: float = Field(default_factory=lambda: settings.DEFAULT_EPSILON, gt=0.0, le=1.0)
    shape: Shape = Shape.CONVEX
    seed: int = Field(default=0, ge=0, lt=2 ** 64)
    clusters: int = Field(default_factory=lambda: settings.DEFAULT_CLUSTERS, ge=1)
    cluster_size: int = Field(default_factory=lambda: settings.DEFAULT_CLUSTER_SIZE, ge=1)

    @model_validator(mode="after")
    def _check_clusters(self):
        if self.shape is Shape.CLUSTERED and self.n != self.clusters * self.cluster_size:
            raise ValueError(
                f"Для кластеризованного набора n должно равняться clusters * cluster_size "
                f"({self.clusters} * {self.cluster_size}), получено n={self.n}"
            )
        return self


class PointStream(BaseModel):
    spec: Optional[GeneratorSpec] = None
    points: list[tuple[float, ...]]

    @model_validator(mode="after")
    def _check_points(self):
        if not self.points:
            return self
        p = len(self.points[0])
        if p < 2:
            raise ValueError("Точки должны иметь не меньше двух критериев")
        if any(len(point) != p for point in self.points):
            raise ValueError("Точки потока имеют разную размерность")
        if not np.isfinite(np.asarray(self.points, dtype=np.float64)).all():
            raise ValueError("Поток содержит NaN или бесконечные значения")
        if self.spec is not None and self.spec.p != p:
            raise ValueError(f"Размерность точек {p} не совпадает со спецификацией p={self.spec.p}")
        return self

    @property
    def dimension(self) -> int:
        if self.points:
            return len(self.points[0])
        return self.spec.p if self.spec is not None else 0

    def __len__(self) -> int:
        return len(self.points)
