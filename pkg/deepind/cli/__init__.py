from deepind.cli.cli import cli

__all__ = [cli]
