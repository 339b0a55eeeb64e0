"""Verification suites, the check router and the orchestrator."""
from suites.check_router import CheckRouter, check_router, run_task
from suites.orchestrator import (
    EXIT_FAIL,
    EXIT_FINDING,
    EXIT_OK,
    EXIT_USAGE,
    Orchestrator,
    exit_code,
)

__all__ = [
    "CheckRouter",
    "EXIT_FAIL",
    "EXIT_FINDING",
    "EXIT_OK",
    "EXIT_USAGE",
    "Orchestrator",
    "check_router",
    "exit_code",
    "run_task",
]
