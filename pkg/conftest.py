# Корневой conftest: каталог проекта попадает в sys.path, пакеты core/models/services импортируются из тестов.
