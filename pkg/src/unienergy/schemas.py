"""JSON Schemas (draft 2020-12) for the ``--json`` output of each command.

The schemas are plain dictionaries so the package itself does not depend on
a validator; the test suite checks real command output against them.
"""

from __future__ import annotations

_INT_LIST = {"type": "array", "items": {"type": "integer"}}
_NONNEG_INT_LIST = {"type": "array", "items": {"type": "integer", "minimum": 0}}
_RELATION = {
    "enum": [
        "Equal", "DominatesStrictly", "DominatesWeakly",
        "DominatedStrictly", "DominatedWeakly", "Incomparable",
    ]
}
_ENERGY = {
    "type": "object",
    "required": ["value", "method", "err"],
    "properties": {
        "value": {"type": "number", "minimum": 0},
        "method": {"enum": ["EigenSum", "CoulsonIntegral"]},
        "err": {"type": "number", "minimum": 0},
    },
    "additionalProperties": False,
}
_REPORT = {
    "type": "object",
    "required": ["theorem", "scope", "verdict", "checked", "counterexamples", "flagged", "notes"],
    "properties": {
        "theorem": {"type": "string"},
        "scope": _INT_LIST,
        "verdict": {"enum": ["holds", "fails"]},
        "checked": {"type": "integer", "minimum": 0},
        "counterexamples": {"type": "array", "items": {"type": "object"}},
        "flagged": {"type": "array", "items": {"type": "object"}},
        "notes": {"type": "string"},
    },
}
_RECORD = {
    "type": "object",
    "required": ["key", "girth", "d", "t", "b", "energy", "graph"],
    "properties": {
        "key": {"type": "string"},
        "girth": {"type": "integer", "minimum": 3},
        "d": {"type": "integer", "minimum": 0},
        "t": {"type": "integer", "minimum": 1},
        "b": _NONNEG_INT_LIST,
        "energy": {"type": "number", "minimum": 0},
        "graph": {"type": "string"},
    },
}


def _obj(required: list[str], props: dict, **extra) -> dict:
    return {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "type": "object",
        "required": required,
        "properties": props,
        **extra,
    }


SCHEMAS: dict[str, dict] = {
    "charpoly": _obj(["results"], {
        "results": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["graph", "a", "b"],
                "properties": {"graph": {"type": "string"}, "a": _INT_LIST, "b": _NONNEG_INT_LIST},
            },
        }
    }),
    "energy": {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "oneOf": [
            _ENERGY,
            _obj(["results", "agree"], {
                "results": {"type": "array", "items": _ENERGY, "minItems": 2, "maxItems": 2},
                "agree": {"type": "boolean"},
            }, additionalProperties=False),
        ],
    },
    "compare": _obj(["relation", "witness_index", "b1", "b2", "E1", "E2"], {
        "relation": _RELATION,
        "witness_index": {"type": ["integer", "null"]},
        "second_index": {"type": "integer"},
        "b1": _NONNEG_INT_LIST,
        "b2": _NONNEG_INT_LIST,
        "E1": {"type": "number"},
        "E2": {"type": "number"},
    }),
    "family": {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "oneOf": [
            _obj(["name", "n", "graph"], {"name": {"type": "string"}, "n": {"type": "integer"},
                                          "graph": {"type": "string"}}, additionalProperties=False),
            _obj(["name", "n", "a", "b"], {"name": {"type": "string"}, "n": {"type": "integer"},
                                           "a": _INT_LIST, "b": _NONNEG_INT_LIST}, additionalProperties=False),
            _ENERGY,
        ],
    },
    "transform-list": _obj(["anchors"], {
        "anchors": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["index", "kind", "anchors"],
                "properties": {
                    "index": {"type": "integer", "minimum": 0},
                    "kind": {"enum": ["EGT", "OpI", "OpII", "OpIII"]},
                    "anchors": _NONNEG_INT_LIST,
                },
            },
        }
    }),
    "transform-apply": _obj(["kind", "anchors", "graph", "relation"], {
        "kind": {"enum": ["EGT", "OpI", "OpII", "OpIII"]},
        "anchors": _NONNEG_INT_LIST,
        "graph": {"type": "string"},
        "relation": _RELATION,
    }),
    "enumerate": _obj(["n", "count", "records", "reports"], {
        "n": {"type": "integer"},
        "count": {"type": "integer", "minimum": 0},
        "records": {"type": "array", "items": _RECORD},
        "reports": {"type": "array", "items": _REPORT},
    }),
    "verify-paper": _obj(["version", "max_n", "verdict", "sections"], {
        "version": {"type": "string"},
        "max_n": {"type": "integer"},
        "verdict": {"enum": ["holds", "fails"]},
        "sections": {"type": "array", "items": _REPORT, "minItems": 1},
    }),
}
