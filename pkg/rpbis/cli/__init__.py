# flake8: noqa
"""
This Module implements the rpbis command line. Including:
    - bisim, distinguish, check, canon, partition and selftest commands
    - Versioned JSON reports
"""

from rpbis.cli.commands import (cmd_bisim, cmd_canon, cmd_check,
                                cmd_distinguish, cmd_partition, cmd_selftest,
                                load_system)
from rpbis.cli.report import Report

__all__ = [
    'Report',
    'load_system',
    'cmd_bisim',
    'cmd_distinguish',
    'cmd_check',
    'cmd_canon',
    'cmd_partition',
    'cmd_selftest',
]
