"""Command line entry point of the interpolation workbench."""

import logging

import click

from src.cli.bench_commands import bench
from src.cli.common import STRUCTURED, TEXT, WorkbenchGroup
from src.cli.dl_commands import (
    check, check_model, cinterp, cinterp_alco, define, diff, equiv, oracle, subsume, uinterp,
)
from src.cli.lp_commands import lp
from src.config import Config

logging.basicConfig(
    format="%(levelname)s | %(name)s | %(message)s",
    handlers=[logging.StreamHandler()]
)


@click.group(cls=WorkbenchGroup)
@click.version_option(package_name="interpolation-workbench")
@click.option("-v", "--verbose", is_flag=True, help="Log debug messages on stderr.")
@click.option("--output", "mode", type=click.Choice([TEXT, STRUCTURED]), default=TEXT, show_default=True,
              help="Plain text or one JSON record per result.")
@click.pass_context
def cli(ctx: click.Context, verbose: bool, mode: str):
    """Uniform interpolation, Craig interpolation and forgetting."""
    logging.getLogger().setLevel(logging.DEBUG if verbose else Config.LOG_LEVEL)
    ctx.ensure_object(dict)
    ctx.obj["mode"] = mode


for command in (check, subsume, equiv, uinterp, cinterp, cinterp_alco, define, diff, oracle, check_model, bench, lp):
    cli.add_command(command)


def main():
    cli(obj={})


if __name__ == "__main__":
    main()
