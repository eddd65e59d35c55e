"""CLI entry point for lerchzeta."""

from lerchzeta.cli.main import app


def cli_main():
    """Entry point for the lerch CLI."""
    app()


if __name__ == "__main__":
    cli_main()
