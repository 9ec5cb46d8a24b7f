from cli.commands import cli
from core.logging_config import setup_logging


setup_logging()


if __name__ == "__main__":
    cli()
