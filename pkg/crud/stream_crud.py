import math
from pathlib import Path
from typing import Optional, Union

from pydantic import ValidationError

from core.exceptions import StreamFormatError
from core.logging_config import logger
from models.dataset import GeneratorSpec, PointStream
from models.fronts import FrontAssignment

SPEC_SUFFIX = ".spec.json"
_EXACT_INT_LIMIT = 2 ** 53

PathLike = Union[str, Path]


def format_value(x: float) -> str:
    """Кратчайшее представление, восстанавливающее то же число; целые без дробной части."""
    if x.is_integer() and abs(x) < _EXACT_INT_LIMIT:
        return str(int(x))
    return repr(float(x))


def _spec_path(path: Path) -> Path:
    return path.with_name(path.name + SPEC_SUFFIX)


def write_stream(stream: PointStream, path: PathLike):
    path = Path(path)
    lines = [f"{stream.dimension} {len(stream)}"]
    lines.extend(" ".join(format_value(x) for x in point) for point in stream.points)
    with path.open("w", encoding="utf-8", newline="\n") as f:
        f.write("\n".join(lines) + "\n")
    if stream.spec is not None:
        _spec_path(path).write_text(stream.spec.model_dump_json(), encoding="utf-8")
    logger.info(f"Записан поток {path}: {len(stream)} точек, p={stream.dimension}")


def _parse_header(line: Optional[str]) -> tuple[int, int]:
    if line is None or not line.strip():
        raise StreamFormatError("пустой файл или пустой заголовок, ожидалось 'p n'", line=1)
    tokens = line.split()
    if len(tokens) != 2:
        raise StreamFormatError(f"заголовок должен содержать два числа 'p n', получено {line!r}", line=1)
    try:
        p, n = int(tokens[0]), int(tokens[1])
    except ValueError:
        raise StreamFormatError(f"заголовок не является парой целых: {line!r}", line=1) from None
    if p < 2 or n < 0:
        raise StreamFormatError(f"недопустимые p={p} или n={n}", line=1)
    return p, n


def _parse_row(line: str, p: int, number: int) -> tuple[float, ...]:
    tokens = line.split(" ")
    if len(tokens) != p:
        raise StreamFormatError(f"ожидалось {p} значений, получено {len(tokens)}", line=number)
    try:
        values = tuple(float(token) for token in tokens)
    except ValueError:
        raise StreamFormatError(f"нечисловое значение в строке {line!r}", line=number) from None
    if not all(math.isfinite(x) for x in values):
        raise StreamFormatError("значения должны быть конечными", line=number)
    return values


def _read_spec(path: Path, p: int, n: int) -> Optional[GeneratorSpec]:
    spec_path = _spec_path(path)
    if not spec_path.exists():
        return None
    try:
        spec = GeneratorSpec.model_validate_json(spec_path.read_text(encoding="utf-8"))
    except ValidationError as e:
        logger.warning(f"Файл спецификации {spec_path} не прочитан: {e}")
        return None
    if spec.p != p or spec.n != n:
        logger.warning(f"Спецификация {spec_path} (p={spec.p}, n={spec.n}) не совпадает с заголовком "
                       f"(p={p}, n={n}), игнорируется")
        return None
    return spec


def read_stream(path: PathLike) -> PointStream:
    path = Path(path)
    with path.open("r", encoding="utf-8", newline="\n") as f:
        lines = f.read().split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    p, n = _parse_header(lines[0] if lines else None)
    rows = lines[1:]
    if len(rows) != n:
        raise StreamFormatError(f"заголовок объявляет {n} строк, найдено {len(rows)}",
                                line=min(len(rows), n) + 2)
    points = [_parse_row(line, p, number) for number, line in enumerate(rows, start=2)]
    return PointStream(spec=_read_spec(path, p, n), points=points)


def write_fronts(assignment: FrontAssignment, path: PathLike):
    """Строки 'index front' по одной на входную точку."""
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="\n") as f:
        for index, front in enumerate(assignment.ranks):
            f.write(f"{index} {front}\n")
    logger.info(f"Записано {len(assignment.ranks)} назначений фронтов в {path}")
