from enum import Enum
from typing import Optional

from attrs import define
from pydantic import BaseModel, Field, model_validator

from core.config import settings
from core.dominance import Point
from core.exceptions import ConfigurationError


class ArchiveBackend(str, Enum):
    NDTREE = "ndtree"
    LIST = "list"
    SORTED_LIST = "sortedlist"
    QUAD_TREE = "quadtree"
    MFRONT2 = "mfront2"


@define(slots=True, frozen=True)
class UpdateOutcome:
    """Результат обновления архива: принята ли точка и какие точки она вытеснила."""
    accepted: bool
    evicted: tuple[Point, ...] = ()


REJECTED = UpdateOutcome(accepted=False)


class NDTreeConfig(BaseModel):
    max_leaf_size: int = Field(default_factory=lambda: settings.DEFAULT_MAX_LEAF_SIZE, ge=1)
    n_children: Optional[int] = Field(default=None, ge=2)  # None -> p + 1

    @model_validator(mode="after")
    def _check_split_capacity(self):
        # расщепляемый лист содержит max_leaf_size + 1 точек и должен дать n_children непустых потомков
        if self.n_children is not None and self.n_children > self.max_leaf_size + 1:
            raise ValueError(
                f"n_children={self.n_children} больше max_leaf_size + 1 = {self.max_leaf_size + 1}"
            )
        return self

    def resolve(self, dimension: int) -> "NDTreeConfig":
        n_children = self.n_children if self.n_children is not None else dimension + 1
        if n_children > self.max_leaf_size + 1:
            raise ConfigurationError(
                f"Число потомков {n_children} (p + 1 при p={dimension}) не помещается в лист "
                f"размера {self.max_leaf_size}"
            )
        return NDTreeConfig(max_leaf_size=self.max_leaf_size, n_children=n_children)


class AuditViolation(BaseModel):
    path: str  # индексы потомков от корня, например "root/2/0"
    rule: str
    detail: str
