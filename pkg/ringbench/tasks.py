import logging
from typing import Any, Dict, List, Optional

from celery import shared_task
from django.dispatch import Signal, receiver

from ringbench.checks import CheckConfig, TheoremCheck, VerdictReport, run_entry_checks

logger = logging.getLogger(__name__)


@receiver(TheoremCheck.completed)
def on_check_completed(
    sender,
    signal: Signal,
    check: TheoremCheck,
    report: VerdictReport,
    **kwargs,
):
    level = logging.WARNING if report.status.value == 'fail' else logging.INFO
    logger.log(
        level, '%s on %s: %s (%.3fs)',
        check.id, ','.join(h[:12] for h in report.inputs), report.status.value, report.wall_time,
    )


@shared_task
def run_catalog_entry_checks(
    name: str,
    config: Dict[str, Any],
    check_ids: Optional[List[str]] = None,
) -> List[Dict[str, Any]]:
    reports = run_entry_checks(name, CheckConfig.from_dict(config), check_ids)
    return [report.as_dict() for report in reports]
