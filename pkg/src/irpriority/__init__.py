"""Incident priority scoring driven by IR capability maturity assessments."""

from .assessment import (
    AreaAssessment,
    AssessmentSnapshot,
    average_capability,
    compare_baseline,
    gap_analysis,
    record_assessment,
)
from .prioritization import (
    BranchMatrix,
    ImpactLevel,
    IncidentProfile,
    PrioritizationMatrix,
    PriorityLevel,
    PriorityRecord,
    ReviewStatus,
    SeverityLevel,
    build_branch_matrix,
    build_matrix,
    default_catalog,
    priority_level,
    priority_score,
    score_bounds,
    what_if,
)
from .registry import (
    CapabilityArea,
    CmmSelection,
    MaturityModel,
    canonical_level_name,
    canonical_score,
    effectiveness,
    list_models,
    select_best_combination,
    select_for_compliance,
)
from .store import DocumentStore

__version__ = "0.1.0"
