"""JSON interchange: structures, fuzzy subsets, reports, census documents."""

from __future__ import annotations

from .fuzzy import FuzzySubset
from .ideals import ClassificationReport
from .structure import GammaStructure, StructureError, validate_structure

STRUCTURE_SCHEMA = {
    "type": "object",
    "required": ["elements", "gammas", "table", "order"],
    "properties": {
        "elements": {"type": "array", "items": {"type": "string"},
                     "minItems": 1, "uniqueItems": True},
        "gammas": {"type": "array", "items": {"type": "string"},
                   "minItems": 1, "uniqueItems": True},
        "table": {"type": "array", "items": {
            "type": "array", "items": {
                "type": "array", "items": {"type": "integer", "minimum": 0}}}},
        "order": {"type": "array", "items": {
            "type": "array", "items": {"type": "integer", "minimum": 0},
            "minItems": 2, "maxItems": 2}},
    },
    "additionalProperties": False,
}

FUZZY_SCHEMA = {
    "type": "object",
    "additionalProperties": {"type": "number", "minimum": 0, "maximum": 1},
}

CLASSIFICATION_SCHEMA = {
    "type": "object",
    "required": ["structure", "classes"],
    "properties": {
        "structure": {"type": "string"},
        "classes": {
            "type": "object",
            "additionalProperties": {
                "type": "object",
                "required": ["holds", "deciders"],
                "properties": {
                    "holds": {"type": "boolean"},
                    "deciders": {"type": "object",
                                 "additionalProperties": {"type": "boolean"}},
                    "witnesses": {"type": "array", "items": {"type": "object"}},
                    "failing_element": {"type": ["string", "null"]},
                },
            },
        },
    },
}

VERDICT_SCHEMA = {
    "type": "object",
    "required": ["theorem", "structure", "outcome"],
    "properties": {
        "theorem": {"type": "string"},
        "structure": {"type": "string"},
        "outcome": {"enum": ["holds", "refuted"]},
        "vacuous": {"type": "boolean"},
        "witness": {"type": ["object", "null"]},
        "battery": {"type": "string"},
    },
}

REPORT_SCHEMA = {
    "type": "object",
    "required": ["tool_version", "structure"],
    "properties": {
        "tool_version": {"type": "string"},
        "structure": {"type": "string"},
        "classification": CLASSIFICATION_SCHEMA,
        "theorems": {"type": "array", "items": VERDICT_SCHEMA},
        "timing_seconds": {"type": "number"},
    },
}

CENSUS_SCHEMA = {
    "type": "object",
    "required": ["n", "m", "up_to_iso", "total", "truncated", "classes"],
    "properties": {
        "n": {"type": "integer"},
        "m": {"type": "integer"},
        "up_to_iso": {"type": "boolean"},
        "total": {"type": "integer"},
        "truncated": {"type": "boolean"},
        "classes": {"type": "object",
                    "additionalProperties": {"type": "integer"}},
    },
}


def structure_to_dict(S: GammaStructure) -> dict:
    return {
        "elements": list(S.elements),
        "gammas": list(S.gammas),
        "table": [[list(row) for row in plane] for plane in S.table],
        "order": [list(p) for p in sorted(S.leq)],
    }


def structure_from_dict(doc: dict, require_compat: bool = True) -> GammaStructure:
    if not isinstance(doc, dict):
        raise StructureError("structure document must be a JSON object")
    for key in ("elements", "gammas", "table", "order"):
        if key not in doc:
            raise StructureError(f"structure document missing {key!r}")
    order = []
    for pair in doc["order"]:
        if (not isinstance(pair, (list, tuple)) or len(pair) != 2
                or not all(isinstance(v, int) for v in pair)):
            raise StructureError(f"bad order pair {pair!r}")
        order.append((pair[0], pair[1]))
    return validate_structure(doc["elements"], doc["gammas"], doc["table"],
                              order, require_compat=require_compat)


def fuzzy_to_dict(f: FuzzySubset) -> dict[str, float]:
    return f.to_dict()


def fuzzy_from_dict(S: GammaStructure, doc: dict) -> FuzzySubset:
    if not isinstance(doc, dict):
        raise StructureError("fuzzy subset document must be a JSON object")
    unknown = set(doc) - set(S.elements)
    if unknown:
        raise StructureError(f"unknown element labels {sorted(unknown)}")
    vals = []
    for lbl in S.elements:
        v = doc.get(lbl, 0.0)
        if not isinstance(v, (int, float)) or isinstance(v, bool):
            raise StructureError(f"membership for {lbl!r} must be a number")
        if not 0.0 <= float(v) <= 1.0:
            raise StructureError(
                f"membership for {lbl!r} outside [0, 1]: {v!r}")
        vals.append(float(v))
    return FuzzySubset(S, tuple(vals))


def classification_to_dict(report: ClassificationReport) -> dict:
    classes = {}
    for name, verdict in report.classes.items():
        classes[name] = {
            "holds": verdict.holds,
            "deciders": dict(verdict.deciders),
            "witnesses": list(verdict.witnesses),
            "failing_element": verdict.failing_element,
        }
    return {"structure": report.structure, "classes": classes}
