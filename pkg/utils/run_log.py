"""
Structured run log for CLI invocations.
Provides functions for appending and reading JSON-lines run events.
"""

import os
import json
import logging
from datetime import datetime, timezone
from typing import Dict, Any, List, Optional

from utils.config import settings, get_run_log_path

# Configure logging
logger = logging.getLogger(__name__)


def log_run_event(event_type: str, details: Dict[str, Any]) -> None:
    """
    Append a run event to the run log.

    Args:
        event_type: Type of event (e.g., "command_started", "command_finished")
        details: Event details, must be JSON serializable
    """
    if not settings.ENABLE_RUN_LOG:
        return

    log_entry = {
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "event_type": event_type,
        **details
    }

    try:
        with open(get_run_log_path(), "a", encoding="utf-8") as f:
            f.write(json.dumps(log_entry, default=str) + "\n")
    except Exception as e:
        logger.error(f"Failed to write to run log: {e}")


def _read_events() -> List[Dict[str, Any]]:
    path = settings.RUN_LOG_PATH
    if not os.path.exists(path):
        return []

    events = []
    with open(path, "r", encoding="utf-8") as f:
        for line in f:
            try:
                events.append(json.loads(line.strip()))
            except json.JSONDecodeError:
                pass
    return events


def get_recent_runs(limit: int = 100) -> List[Dict[str, Any]]:
    """
    Get the most recent finished commands.

    Args:
        limit: Maximum number of events to return

    Returns:
        List of "command_finished" events, most recent first
    """
    return get_run_events("command_finished", limit=limit)


def get_run_events(event_type: Optional[str] = None, limit: int = 100) -> List[Dict[str, Any]]:
    """
    Get run events, optionally filtered by type.

    Args:
        event_type: Filter by event type
        limit: Maximum number of events to return

    Returns:
        List of events, most recent first
    """
    try:
        events = [
            event for event in _read_events()
            if event_type is None or event.get("event_type") == event_type
        ]
        return events[-limit:][::-1]
    except Exception as e:
        logger.error(f"Failed to read run log: {e}")
        return []
