from pydantic import BaseModel


class FrontAssignment(BaseModel):
    fronts: list[list[tuple[float, ...]]]
    ranks: list[int]  # номер фронта для каждой входной точки, в порядке входа
    comparisons: int = 0

    @property
    def front_count(self) -> int:
        return len(self.fronts)
