from typing import Optional


class ParetoArchiveError(Exception):
    """Базовое исключение библиотеки."""


class DimensionMismatchError(ParetoArchiveError, ValueError):
    """Точки разной размерности сравниваются или попадают в один архив (ошибка вызывающего кода)."""

    def __init__(self, expected: int, actual: int):
        super().__init__(f"Несовпадение размерности: ожидалось {expected}, получено {actual}")
        self.expected = expected
        self.actual = actual


class InvalidPointError(ParetoArchiveError, ValueError):
    pass


class ConfigurationError(ParetoArchiveError):
    """Несовместимые параметры: например, отсортированный список при p != 2."""


class EmptyArchiveError(ParetoArchiveError):
    pass


class EmptyPopulationError(ParetoArchiveError, ValueError):
    pass


class StreamFormatError(ParetoArchiveError, ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        prefix = f"строка {line}: " if line is not None else ""
        super().__init__(prefix + message)
        self.line = line


class ArchiveMismatchError(ParetoArchiveError):
    """Итоговый архив не совпал с эталонным множеством недоминируемых точек."""

    def __init__(self, backend: str, missing: int, extra: int):
        super().__init__(
            f"Архив {backend} расходится с эталоном: не хватает {missing}, лишних {extra}"
        )
        self.backend = backend
        self.missing = missing
        self.extra = extra
