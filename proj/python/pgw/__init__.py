"""Python bindings for the pgw finite p-group toolkit."""

import json
from pathlib import Path

from ._pgw import (
    Group,
    InconsistentPresentation,
    IoError,
    ParseError,
    PreconditionError,
    ResourceLimit,
    VerificationFailure,
    canonical_form,
    corpus_dir,
    load_group,
    set_worker_count,
)

__all__ = [
    "Group",
    "InconsistentPresentation",
    "IoError",
    "ParseError",
    "PreconditionError",
    "ResourceLimit",
    "VerificationFailure",
    "analyze",
    "canonical_form",
    "corpus_dir",
    "crosscheck",
    "load",
    "load_group",
    "pipeline",
    "search",
    "set_worker_count",
    "validate",
    "witness",
]


def load(path):
    """Load a group file (.pcg or .perm) from disk."""
    return load_group(Path(path).read_text(encoding="utf-8"))


def validate(text):
    """Both consistency reports for pc presentation text."""
    from ._pgw import _validate_json

    return json.loads(_validate_json(text))


def analyze(group):
    return {
        "invariants": json.loads(group._invariants_json()),
        "hypotheses": json.loads(group._hypotheses_json()),
    }


def witness(group):
    """Witness, beta and verification report, or None for groups without one."""
    return json.loads(group._witness_json())


def search(group, require_fix_frattini=True):
    return json.loads(group._search_json(require_fix_frattini))


def pipeline(group, fallback=False):
    return json.loads(group._pipeline_json(fallback))


def crosscheck(pc_group, perm_group):
    from ._pgw import _crosscheck_json

    return json.loads(_crosscheck_json(pc_group, perm_group))
