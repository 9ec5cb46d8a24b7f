from typing import Optional, Union

from core.dominance import ComparisonCounter
from core.exceptions import ConfigurationError
from models.archive import ArchiveBackend, NDTreeConfig
from services.archive_base import ParetoArchive
from services.linear_list import LinearListArchive
from services.mfront import MFrontArchive
from services.nd_tree import NDTree
from services.quad_tree import QuadTreeArchive
from services.sorted_list import SortedListArchive

ARCHIVE_CLASSES: dict[ArchiveBackend, type[ParetoArchive]] = {
    ArchiveBackend.NDTREE: NDTree,
    ArchiveBackend.LIST: LinearListArchive,
    ArchiveBackend.SORTED_LIST: SortedListArchive,
    ArchiveBackend.QUAD_TREE: QuadTreeArchive,
    ArchiveBackend.MFRONT2: MFrontArchive,
}


def create_archive(kind: Union[ArchiveBackend, str], dimension: Optional[int] = None,
                   counter: Optional[ComparisonCounter] = None,
                   ndtree_config: Optional[NDTreeConfig] = None) -> ParetoArchive:
    """Создаёт пустой архив выбранной реализации."""
    try:
        backend = ArchiveBackend(kind)
    except ValueError:
        raise ConfigurationError(
            f"Неизвестный архив '{kind}', доступны: {', '.join(b.value for b in ArchiveBackend)}"
        ) from None
    if backend is ArchiveBackend.NDTREE:
        return NDTree(dimension=dimension, counter=counter, config=ndtree_config)
    return ARCHIVE_CLASSES[backend](dimension=dimension, counter=counter)
