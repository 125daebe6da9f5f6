"""
Celery tasks for running verification checks in the background.
"""

import logging
from typing import List, Optional

from celery import shared_task

from apps.verification.identities import CheckContext
from apps.verification.services import parse_kinds, run_check, run_suite

logger = logging.getLogger(__name__)


@shared_task(bind=True, max_retries=3)
def run_identity_check_task(self, name: str, max_n: int, seed: int, kinds: Optional[List[str]] = None):
    """
    Run one named check and return its result as a dict.
    """
    try:
        ctx = CheckContext(max_n=max_n, kinds=parse_kinds(kinds), seed=seed)
        result = run_check(name, ctx)
        logger.info(f"Check {name} finished: passed={result.passed}")
        return {"status": "success", "result": result.to_dict()}
    except Exception as e:
        logger.error(f"Error running check {name}: {e}")
        return {"status": "error", "message": str(e)}


@shared_task(bind=True, max_retries=3)
def run_verification_suite_task(self, max_n: int, kinds: Optional[List[str]] = None, seed: Optional[int] = None):
    """
    Run the whole suite; the report is returned in JSON-friendly form.
    """
    try:
        report = run_suite(max_n, kinds=kinds, seed=seed)
        return {"status": "success", "passed": report.passed, "report": report.to_dict()}
    except Exception as e:
        logger.error(f"Error running verification suite up to N={max_n}: {e}")
        return {"status": "error", "message": str(e)}
