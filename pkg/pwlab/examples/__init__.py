"""Desk-scale example runs."""

from pwlab.examples.desk_sweep import DESK_CONFIGS, desk_config, run_desk_sweep

__all__ = ["DESK_CONFIGS", "desk_config", "run_desk_sweep"]
