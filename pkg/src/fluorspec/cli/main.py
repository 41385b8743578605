from typing import Optional

import typer
from dotenv import load_dotenv

from fluorspec import __version__
from fluorspec.cli import run as run_command

# Load FLUORSPEC_OUTPUT_DIR and friends from a .env file
load_dotenv()

app = typer.Typer(
    name="fluorspec",
    help="Incoherent resonance-fluorescence spectra by the limit and variance methods",
    add_completion=False,
)


def _version_callback(value: bool):
    if value:
        typer.echo(f"fluorspec {__version__}")
        raise typer.Exit()


@app.callback()
def main(
    version: Optional[bool] = typer.Option(
        None,
        "--version",
        callback=_version_callback,
        is_eager=True,
        help="Print the version and exit",
    ),
):
    """fluorspec command-line interface."""


app.command("run", help="Compute spectra from a run configuration")(run_command.run)

if __name__ == "__main__":
    app()
