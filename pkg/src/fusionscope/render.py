"""Text, JSON and DOT renderings of fusion diagrams and results.

JSON documents follow the schemas in ``SCHEMAS``; the same schemas are
shipped as files under ``docs/schemas``.
"""

from __future__ import annotations

import json

from .abelian import TorsionProfile
from .alperin import AlperinFactorization
from .equivalence import EquivalenceVerdict
from .fusion import FusionDiagram
from .group import Subgroup


def subgroup_generators(P: Subgroup) -> list[str]:
    return [P.group.format(g) for g in P.generators]


def subgroup_label(P: Subgroup) -> str:
    gens = subgroup_generators(P)
    return "<" + ", ".join(gens) + ">" if gens else "1"


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


# -- fusion diagrams --------------------------------------------------------


def diagram_to_json(D: FusionDiagram) -> dict:
    reps = {c.representative.members for c in D.classes}
    return {
        "p": D.p,
        "nodes": [
            {
                "id": i,
                "order": P.order,
                "generators": subgroup_generators(P),
                "class": D.node_class[i],
                "representative": P.members in reps,
            }
            for i, P in enumerate(D.nodes)
        ],
        "classes": [
            {
                "order": c.order,
                "size": c.size,
                "automizer": D.labels[pos],
                "essential": c.essential,
                "centric": c.centric,
            }
            for pos, c in enumerate(D.classes)
        ],
        "inclusions": [list(e) for e in D.inclusions],
        "conjugations": [list(e) for e in D.conjugations],
    }


def _quote(text: str) -> str:
    return '"' + text.replace('"', '\\"') + '"'


def diagram_to_dot(D: FusionDiagram, name: str = "fusion") -> str:
    """Levels become ranks; inclusions solid, conjugations dashed."""
    reps = {c.representative.members: pos for pos, c in enumerate(D.classes)}
    lines = [f"graph {_quote(name)} {{", "  rankdir=BT;", "  node [shape=box];"]
    for i, P in enumerate(D.nodes):
        label = subgroup_label(P)
        if P.members in reps:
            label += "\\nAut=" + D.labels[reps[P.members]]
        lines.append(f"  n{i} [label={_quote(label)}];")
    for level in sorted(D.levels):
        ids = "; ".join(f"n{i}" for i in D.levels[level])
        lines.append(f"  {{ rank=same; {ids}; }}")
    for a, b in D.inclusions:
        lines.append(f"  n{a} -- n{b};")
    for a, b in D.conjugations:
        lines.append(f"  n{a} -- n{b} [style=dashed, constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def diagram_to_text(D: FusionDiagram) -> str:
    lines = [f"p = {D.p}; {len(D.nodes)} subgroups in {len(D.classes)} classes"]
    lines.append("class  order  size  automizer  centric  essential  representative")
    for pos, c in enumerate(D.classes):
        lines.append(f"{pos:>5}  {c.order:>5}  {c.size:>4}  {D.labels[pos]:<9}  "
                     f"{str(c.centric).lower():<7}  {str(c.essential).lower():<9}  "
                     f"{subgroup_label(c.representative)}")
    return "\n".join(lines) + "\n"


# -- other documents ---------------------------------------------------------


def verdict_to_json(v: EquivalenceVerdict, p: int | None = None) -> dict:
    witness = None
    if v.witness is not None:
        alpha = v.witness
        src, dst = alpha.source.group, alpha.target.group
        witness = {src.format(g): dst.format(alpha(g)) for g in alpha.source.generators}
    doc = {"equivalent": v.equivalent, "refuted_by": v.refuted_by, "witness": witness}
    if p is not None:
        doc["p"] = p
    if v.detail is not None:
        doc["values"] = list(v.detail)
    return doc


def profile_to_json(prof: TorsionProfile) -> dict:
    return prof.to_json()


def factorization_to_json(fac: AlperinFactorization) -> dict:
    return fac.to_json()


_EDGE = {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 2, "maxItems": 2}

SCHEMAS = {
    "fusion-diagram": {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "title": "fusion diagram",
        "type": "object",
        "required": ["p", "nodes", "classes", "inclusions", "conjugations"],
        "properties": {
            "p": {"type": "integer", "minimum": 2},
            "nodes": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["id", "order", "generators", "class", "representative"],
                    "properties": {
                        "id": {"type": "integer", "minimum": 0},
                        "order": {"type": "integer", "minimum": 1},
                        "generators": {"type": "array", "items": {"type": "string"}},
                        "class": {"type": "integer", "minimum": 0},
                        "representative": {"type": "boolean"},
                    },
                    "additionalProperties": False,
                },
            },
            "classes": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["order", "size", "automizer", "essential", "centric"],
                    "properties": {
                        "order": {"type": "integer", "minimum": 1},
                        "size": {"type": "integer", "minimum": 1},
                        "automizer": {"type": "string"},
                        "essential": {"type": "boolean"},
                        "centric": {"type": "boolean"},
                    },
                    "additionalProperties": False,
                },
            },
            "inclusions": {"type": "array", "items": _EDGE},
            "conjugations": {"type": "array", "items": _EDGE},
        },
        "additionalProperties": False,
    },
    "verdict": {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "title": "p-local equivalence verdict",
        "type": "object",
        "required": ["equivalent", "refuted_by", "witness"],
        "properties": {
            "equivalent": {"type": "boolean"},
            "refuted_by": {
                "enum": [None, "p-part", "sylow-iso", "cc_p", "automizer-S",
                         "essential-profile", "exhausted-search"],
            },
            "witness": {
                "oneOf": [
                    {"type": "null"},
                    {"type": "object", "additionalProperties": {"type": "string"}},
                ],
            },
            "p": {"type": "integer", "minimum": 2},
            "values": {"type": "array", "items": {"type": "integer"}},
        },
        "additionalProperties": False,
    },
    "profile": {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "title": "torsion profile",
        "type": "object",
        "required": ["p", "n"],
        "properties": {
            "p": {"type": "integer", "minimum": 2},
            "n": {
                "type": "object",
                "patternProperties": {"^[1-9][0-9]*$": {"type": "integer", "minimum": 1}},
                "additionalProperties": False,
            },
        },
        "additionalProperties": False,
    },
    "factorization": {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "title": "Alperin factorization",
        "type": "object",
        "required": ["source", "steps"],
        "properties": {
            "source": {"type": "array", "items": {"type": "integer", "minimum": 0}},
            "steps": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["R", "phi"],
                    "properties": {
                        "R": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                        "phi": {"type": "object", "additionalProperties": {"type": "integer"}},
                    },
                    "additionalProperties": False,
                },
            },
        },
        "additionalProperties": False,
    },
}


def _object(props: dict, required=None) -> dict:
    return {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "type": "object",
        "required": list(props) if required is None else required,
        "properties": props,
        "additionalProperties": False,
    }


_INT = {"type": "integer", "minimum": 0}
_PRIME = {"type": "integer", "minimum": 2}
_BOOL = {"type": "boolean"}
_STR = {"type": "string"}
_STRS = {"type": "array", "items": _STR}

SCHEMAS["factorization"]["properties"]["target"] = {"type": "array", "items": _INT}
SCHEMAS.update({
    "info": _object({
        "group": _STR, "order": _INT, "degree": _INT, "generators": _STRS, "type": _STR,
        "abelian": _BOOL, "nilpotent": _BOOL, "center_order": _INT,
        "abelianization": {"type": "array", "items": _INT},
    }),
    "sylow": _object({
        "group": _STR, "p": _PRIME, "order": _INT, "generators": _STRS, "type": _STR,
        "normal": _BOOL, "count": _INT,
    }),
    "pnilpotent": _object({
        "p": _PRIME, "p_nilpotent": _BOOL,
        "criteria": _object({"p_prime_closed": _BOOL, "normal_complement": _BOOL,
                             "equivalent_to_sylow": _BOOL, "p_automizers": _BOOL}),
    }),
    "nilpotent": _object({"nilpotent": _BOOL, "sylow_product_iso": _BOOL, "all_p_nilpotent": _BOOL}),
    "ccp": _object({"p": _PRIME, "cc_p": _INT}),
    "invariants": _object({
        "p": _PRIME, "p_part": _INT, "sylow_type": _STR, "cc_p": _INT, "automizer_S": _STR,
        "essential_classes": {"type": "array",
                              "items": _object({"order": _INT, "size": _INT, "automizer": _STR})},
        "h1": _INT, "stable_h1": _INT,
    }),
    "torsion": _object({"profiles": {"type": "array", "items": {"$ref": "#/$defs/profile"}}}),
    "stableh1": _object({
        "p": _PRIME, "stable_h1": _INT, "hom_S_Fp": _INT, "h1_mod_p": _INT,
        "basis": {"type": "array", "items": {"type": "array", "items": _INT}},
    }),
    "alperin": _object({
        "p": _PRIME, "count": _INT,
        "factorizations": {"type": "array", "items": {"$ref": "#/$defs/factorization"}},
    }),
})
SCHEMAS["torsion"]["$defs"] = {"profile": {k: v for k, v in SCHEMAS["profile"].items() if k != "$schema"}}
SCHEMAS["alperin"]["$defs"] = {"factorization": {k: v for k, v in SCHEMAS["factorization"].items() if k != "$schema"}}


def schema_for(verb: str, has_p: bool = True, single: bool = False) -> dict:
    """The schema of the JSON document a CLI verb emits."""
    if verb in ("fusion", "essential"):
        return SCHEMAS["fusion-diagram"]
    if verb == "equiv":
        return SCHEMAS["verdict"]
    if verb == "torsion":
        return SCHEMAS["profile"] if has_p else SCHEMAS["torsion"]
    if verb == "alperin" and single:
        return SCHEMAS["factorization"]
    return SCHEMAS[verb]


def write_schemas(directory) -> list:
    """Dump every schema as ``<name>.schema.json`` into ``directory``."""
    from pathlib import Path

    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, schema in sorted(SCHEMAS.items()):
        path = directory / f"{name}.schema.json"
        path.write_text(json.dumps(schema, indent=2, sort_keys=True) + "\n")
        written.append(path)
    return written
