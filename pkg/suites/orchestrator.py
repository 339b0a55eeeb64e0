"""Orchestrator for running verification suites over parameter grids."""
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, Iterator, List

from config import settings
from models.schemas import CheckReport, CheckStatus, SuiteSpec
from suites.base_suite import BaseSuite, Task
from suites.binomial_suites import (
    CertificatesSuite,
    IdentitiesSuite,
    LemmasSuite,
    Theorem1Suite,
    Theorem2Suite,
)
from suites.check_router import run_task
from suites.q_suites import QAnalogSuite, QLemmasSuite, Theorem5Suite
from suites.recurrence_suites import ConjecturesSuite, RecurrenceSuite
from loguru import logger

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_FINDING = 3


def exit_code(counts: Dict[CheckStatus, int]) -> int:
    """0 all pass, 1 any fail or error, 3 findings only."""
    if counts.get(CheckStatus.FAIL) or counts.get(CheckStatus.ERROR):
        return EXIT_FAIL
    if counts.get(CheckStatus.FINDING):
        return EXIT_FINDING
    return EXIT_OK


class Orchestrator:
    """Expands suites into ordered grids and runs them."""

    def __init__(self):
        """Initialize orchestrator."""
        self.suites: Dict[str, BaseSuite] = {
            suite.name: suite
            for suite in (
                Theorem1Suite(),
                Theorem2Suite(),
                IdentitiesSuite(),
                LemmasSuite(),
                CertificatesSuite(),
                QAnalogSuite(),
                QLemmasSuite(),
                Theorem5Suite(),
                RecurrenceSuite(),
                ConjecturesSuite(),
            )
        }

    def selected(self, suite: str) -> List[BaseSuite]:
        if suite == "all":
            return list(self.suites.values())
        return [self.suites[suite]]

    def plan(self, spec: SuiteSpec) -> List[Task]:
        """All tasks of the request, in report order."""
        tasks: List[Task] = []
        for suite in self.selected(spec.suite):
            tasks += suite.tasks(spec.ranges)
        return tasks

    def iter_reports(self, spec: SuiteSpec) -> Iterator[CheckReport]:
        """Reports in plan order, whatever the number of jobs."""
        for suite in self.selected(spec.suite):
            suite.prepare(spec.ranges)
        tasks = self.plan(spec)
        logger.info(f"Orchestrator running suite {spec.suite}: {len(tasks)} checks, jobs={spec.jobs}")
        if spec.jobs == 1:
            for task in tasks:
                yield run_task(task)
            return
        with ProcessPoolExecutor(max_workers=spec.jobs) as executor:
            yield from executor.map(run_task, tasks, chunksize=settings.parallel_chunksize)

    def run_suite(self, spec: SuiteSpec, emit: Callable[[CheckReport], None]) -> int:
        """Stream every report to emit and return the exit code."""
        counts: Counter = Counter()
        for report in self.iter_reports(spec):
            counts[report.status] += 1
            if report.status == CheckStatus.FINDING:
                logger.warning(f"Finding: {report.to_text_line()}")
            emit(report)
        summary = ", ".join(f"{status.value}={counts.get(status, 0)}" for status in CheckStatus)
        logger.info(f"Orchestrator finished suite {spec.suite}: {summary}")
        return exit_code(counts)

