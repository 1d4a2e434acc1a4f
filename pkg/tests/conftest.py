"""Shared fixtures: the stub lexicon and the bundled toy topics."""

from __future__ import annotations

from pathlib import Path

import pytest

from maniquery.corpus import load_topic
from maniquery.wordnet import parse_wordnet

DATA_DIR = Path(__file__).parent / "data"
STUB_WORDNET = DATA_DIR / "wordnet_stub"
TOPICS_DIR = DATA_DIR / "topics"


@pytest.fixture(scope="session")
def stub_graph():
    return parse_wordnet(STUB_WORDNET)


@pytest.fixture(scope="session")
def bridge_topic(stub_graph):
    return load_topic(TOPICS_DIR / "d301-bridge", stub_graph)


@pytest.fixture(scope="session")
def solar_topic(stub_graph):
    return load_topic(TOPICS_DIR / "d302-solar", stub_graph)


def _criterion_sort_key(name: str) -> int:
    try:
        return int(name.split("_")[2])
    except (IndexError, ValueError):
        return 0


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One PASS/FAIL line per acceptance criterion."""
    outcomes: dict[str, bool] = {}
    for reports in terminalreporter.stats.values():
        for report in reports:
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid:
                continue
            name = nodeid.split("::")[-1]
            failed = bool(getattr(report, "failed", False))
            outcomes[name] = outcomes.get(name, False) or failed
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(outcomes, key=_criterion_sort_key):
        status = "FAIL" if outcomes[name] else "PASS"
        label = name.removeprefix("test_").replace("_", " ")
        terminalreporter.write_line(f"{status}  {label}")
