import os

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    PROJECT_NAME: str = os.getenv('PROJECT_NAME', 'paretoarchive')
    LOG_LEVEL: str = os.getenv('LOG_LEVEL', 'INFO')
    # Параметры ND-Tree (число потомков по умолчанию = p + 1, вычисляется по первой точке)
    DEFAULT_MAX_LEAF_SIZE: int = int(os.getenv('DEFAULT_MAX_LEAF_SIZE', '20'))
    # Генераторы наборов данных
    DEFAULT_V_MAX: int = int(os.getenv('DEFAULT_V_MAX', '10000'))
    DEFAULT_EPSILON: float = float(os.getenv('DEFAULT_EPSILON', '0.1'))
    DEFAULT_CLUSTERS: int = int(os.getenv('DEFAULT_CLUSTERS', '100'))
    DEFAULT_CLUSTER_SIZE: int = int(os.getenv('DEFAULT_CLUSTER_SIZE', '1000'))
    GENERATOR_BATCH: int = int(os.getenv('GENERATOR_BATCH', '65536'))
    # M-Front-II: поиск опорной точки в k-d дереве
    KD_TREE_DISTANCE_BUDGET: int = int(os.getenv('KD_TREE_DISTANCE_BUDGET', '4'))
    KD_TREE_REBUILD_RATIO: float = float(os.getenv('KD_TREE_REBUILD_RATIO', '0.5'))
    # Бенчмарк
    DEFAULT_REPETITIONS: int = int(os.getenv('DEFAULT_REPETITIONS', '10'))
    TRACE_MAX_POINTS: int = int(os.getenv('TRACE_MAX_POINTS', '10000'))  # трасса сравнений по вставкам
    CHECKPOINT_EVERY: int = int(os.getenv('CHECKPOINT_EVERY', '10000'))
    BENCH_WORKERS: int = int(os.getenv('BENCH_WORKERS', '1'))

    model_config = SettingsConfigDict(env_file=".env", env_file_encoding='utf-8', extra='ignore')


settings = Settings()
