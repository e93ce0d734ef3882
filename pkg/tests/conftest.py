import pytest

from irpriority.assessment import record_assessment

# The worked single-model assessment: all areas assessed with ISO/IEC 27035,
# canonical scores 1,2,2,2,4,2,5 (average 18/7).
WORKED_ENTRIES = [
    {"area": "Risk Management", "model": "ISO/IEC 27035", "level": "Ad-hoc"},
    {"area": "Incident Handling Best Practices", "model": "ISO/IEC 27035", "level": "Reactive"},
    {"area": "Training and Awareness", "model": "ISO/IEC 27035", "level": "Reactive"},
    {"area": "Adequate Staffing", "model": "ISO/IEC 27035", "level": "Reactive"},
    {"area": "Information Security Governance", "model": "ISO/IEC 27035", "level": "Proactive"},
    {"area": "Internal and External Communication", "model": "ISO/IEC 27035", "level": "Reactive"},
    {"area": "Information Security Culture", "model": "ISO/IEC 27035", "level": "Optimised"},
]


@pytest.fixture
def worked_snapshot():
    return record_assessment("HQ", "2024-03-01T09:00:00Z", WORKED_ENTRIES)


@pytest.fixture
def store(tmp_path):
    from irpriority.store import DocumentStore

    return DocumentStore(tmp_path / "store")
