#!/usr/bin/env python
"""Groebner bases and (de)homogenization from session files"""

import argparse
import sys

from session.commands import COMMANDS, add_command_options, execute
from utils.config_loader import config, load_settings, settings
from utils.logger import log, setup_logger


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description='Exact Groebner engine with central and noncentral dehomogenization')
    parser.add_argument('--config', type=str, default=None, help='Alternative config YAML')
    sub = parser.add_subparsers(dest='command', required=True)

    run = sub.add_parser('run', help="Run the session's own 'command' line")
    run.add_argument('session', help="Session file, or '-' for stdin")

    for name in COMMANDS:
        command = sub.add_parser(name)
        command.add_argument('session', help="Session file, or '-' for stdin")
        add_command_options(command)
    return parser


def read_session(path: str) -> str:
    if path == '-':
        return sys.stdin.read()
    with open(path, 'r') as f:
        return f.read()


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.config:
        load_settings(args.config)
        setup_logger(settings.monitoring.log_path, settings.monitoring.log_level, settings.monitoring.log_to_file)
    log.debug(f"config {config.config_path} ({config.get('environment', 'dev')})")

    try:
        text = read_session(args.session)
    except OSError as e:
        log.error(f"cannot read {args.session}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return 2

    result = execute(text, options=None if args.command == 'run' else args)
    if result.output:
        sys.stdout.write(result.output)
    if result.error:
        print(result.error, file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
