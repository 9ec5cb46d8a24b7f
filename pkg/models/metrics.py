from typing import Optional

from pydantic import BaseModel, Field

from models.archive import ArchiveBackend, NDTreeConfig
from models.dataset import GeneratorSpec


class RunMetrics(BaseModel):
    backend: ArchiveBackend
    spec: Optional[GeneratorSpec] = None  # эхо спецификации набора, если известна
    p: int
    n: int
    seed: int
    repetition: int
    total_comparisons: int = 0
    wall_time_ns: int = 0
    final_archive_size: int = 0
    per_insert_comparisons: Optional[list[int]] = None
    time_checkpoints: list[tuple[int, int]] = Field(default_factory=list)  # (обработано точек, нс)
    size_checkpoints: list[tuple[int, int]] = Field(default_factory=list)  # (обработано точек, размер архива)
    ndtree_config: Optional[NDTreeConfig] = None
    verified: Optional[bool] = None
    contended_timing: bool = False

    @property
    def mean_comparisons_per_insert(self) -> float:
        return self.total_comparisons / self.n if self.n else 0.0


class SweepResult(BaseModel):
    max_leaf_size: int
    n_children: int
    repetitions: int
    mean_total_comparisons: float
    mean_wall_time_ns: float
    final_archive_size: int
