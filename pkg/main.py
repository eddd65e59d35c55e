"""lerchzeta - Lerch zeta function evaluator.

This file is kept for backwards compatibility.
The actual entry point is in lerchzeta.cli.entrypoint.
"""

from lerchzeta.cli.entrypoint import cli_main


if __name__ == "__main__":
    cli_main()
