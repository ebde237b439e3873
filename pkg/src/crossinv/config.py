"""JSON instance files: schema validation, semantic checks, construction."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import jsonschema

from .algebra import (FiniteGroup, FiniteRing, RingAutomorphism, RingInvolution, SignHom, TableRing, cyclic,
                      dihedral, direct_product, is_automorphism, make_poly_quotient, make_zmod)
from .twist import TwistData, twist_from_extension, w1_involution, w_from_w1

SUITES = ("twist", "ring", "weak-action", "involution-compat", "strictify", "hocolim", "bridge", "induction")
DEFAULT_MAX_RANK = 2
DEFAULT_SEED = 0

_int_list = {"type": "array", "items": {"type": "integer"}}
_table = {"type": "array", "items": _int_list}

_ring = {
    "type": "object",
    "required": ["kind"],
    "properties": {
        "kind": {"enum": ["zmod", "poly", "table"]},
        "n": {"type": "integer", "minimum": 1},
        "p": {"type": "integer", "minimum": 2},
        "modulus": _int_list,
        "add": _table,
        "mul": _table,
        "zero": {"type": "integer"},
        "one": {"type": "integer"},
        "labels": {"type": "array", "items": {"type": "string"}},
        "name": {"type": "string"},
    },
    "additionalProperties": False,
}

_group = {
    "type": "object",
    "required": ["kind"],
    "properties": {
        "kind": {"enum": ["cyclic", "dihedral", "product", "table"]},
        "n": {"type": "integer", "minimum": 1},
        "factors": {"type": "array", "items": {"$ref": "#/$defs/group"}, "minItems": 2, "maxItems": 2},
        "table": _table,
        "names": {"type": "array", "items": {"type": "string"}},
        "name": {"type": "string"},
    },
    "additionalProperties": False,
}

SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$defs": {"ring": _ring, "group": _group},
    "type": "object",
    "properties": {
        "name": {"type": "string"},
        "description": {"type": "string"},
        "ring": {"$ref": "#/$defs/ring"},
        "group": {"$ref": "#/$defs/group"},
        "c": _table,
        "tau": _table,
        "involution": {"oneOf": [{"const": "identity"}, _int_list]},
        "w": _int_list,
        "v": {"type": "array", "items": {"enum": [1, -1]}},
        "extension": {
            "type": "object",
            "required": ["kernel", "group", "quotient", "incl", "proj", "section", "coeff"],
            "properties": {
                "kernel": {"$ref": "#/$defs/group"},
                "group": {"$ref": "#/$defs/group"},
                "quotient": {"$ref": "#/$defs/group"},
                "incl": _int_list,
                "proj": _int_list,
                "section": _int_list,
                "coeff": {"$ref": "#/$defs/ring"},
                "w1": _int_list,
            },
            "additionalProperties": False,
        },
        "options": {
            "type": "object",
            "properties": {
                "max_rank": {"type": "integer", "minimum": 0, "maximum": 3},
                "seed": {"type": "integer", "minimum": 0},
                "suites": {"type": "array", "items": {"enum": list(SUITES)}, "uniqueItems": True},
                "min_samples": {"type": "integer", "minimum": 1},
            },
            "additionalProperties": False,
        },
    },
    "oneOf": [{"required": ["ring", "group"], "not": {"required": ["extension"]}},
              {"required": ["extension"], "not": {"anyOf": [{"required": ["ring"]}, {"required": ["group"]},
                                                           {"required": ["c"]}, {"required": ["tau"]}]}}],
    "additionalProperties": False,
}


@dataclass
class Issue:
    pointer: str
    message: str

    def to_dict(self) -> dict:
        return {"pointer": self.pointer, "message": self.message}


class ConfigError(ValueError):
    """Raised with a list of issues; ``kind`` is "parse", "schema" or "semantic"."""

    def __init__(self, kind: str, issues: list[Issue]):
        self.kind = kind
        self.issues = issues
        super().__init__("; ".join(f"{i.pointer or '/'}: {i.message}" for i in issues))

    def to_dict(self) -> dict:
        return {"error": self.kind, "issues": [i.to_dict() for i in self.issues]}


@dataclass
class InstanceConfig:
    name: str
    twist: TwistData
    max_rank: int = DEFAULT_MAX_RANK
    seed: int = DEFAULT_SEED
    suites: tuple = SUITES
    min_samples: int = 500
    w1: tuple | None = None
    raw: dict = field(default_factory=dict, repr=False)


def _pointer(path) -> str:
    return "".join(f"/{p}" for p in path)


class _Builder:
    def __init__(self):
        self.issues: list[Issue] = []

    def fail(self, pointer: str, message: str):
        self.issues.append(Issue(pointer, message))

    def ring(self, spec: dict, ptr: str) -> FiniteRing | None:
        kind = spec["kind"]
        try:
            if kind == "zmod":
                if "n" not in spec:
                    return self.fail(ptr + "/n", "zmod ring needs n")
                return make_zmod(spec["n"])
            if kind == "poly":
                if "p" not in spec or "modulus" not in spec:
                    return self.fail(ptr, "poly ring needs p and modulus")
                return make_poly_quotient(spec["p"], spec["modulus"])
            for key in ("add", "mul", "zero", "one"):
                if key not in spec:
                    return self.fail(f"{ptr}/{key}", "table ring needs add, mul, zero and one")
            return TableRing(spec.get("name", "R"), spec["add"], spec["mul"], spec["zero"], spec["one"],
                             labels=spec.get("labels"))
        except ValueError as exc:
            return self.fail(ptr, str(exc))

    def group(self, spec: dict, ptr: str) -> FiniteGroup | None:
        kind = spec["kind"]
        try:
            if kind in ("cyclic", "dihedral"):
                if "n" not in spec:
                    return self.fail(ptr + "/n", f"{kind} group needs n")
                return cyclic(spec["n"]) if kind == "cyclic" else dihedral(spec["n"])
            if kind == "product":
                if "factors" not in spec:
                    return self.fail(ptr + "/factors", "product group needs two factors")
                a = self.group(spec["factors"][0], ptr + "/factors/0")
                b = self.group(spec["factors"][1], ptr + "/factors/1")
                return direct_product(a, b) if a and b else None
            if "table" not in spec:
                return self.fail(ptr + "/table", "table group needs a table")
            return FiniteGroup(spec["table"], 0, spec.get("names"), name=spec.get("name", "G"))
        except ValueError as exc:
            return self.fail(ptr, str(exc))

    def elements(self, values, size: int, ptr: str) -> bool:
        ok = True
        for i, x in enumerate(values):
            if not 0 <= x < size:
                self.fail(f"{ptr}/{i}", f"ring index {x} out of range 0..{size - 1}")
                ok = False
        return ok

    def length(self, values, n: int, ptr: str, what: str) -> bool:
        if len(values) != n:
            self.fail(ptr, f"{what} needs {n} entries, got {len(values)}")
            return False
        return True


def parse_text(text: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError("parse", [Issue("", f"line {exc.lineno}, column {exc.colno}: {exc.msg}")]) from None


def build_config(data: Any) -> InstanceConfig:
    validator = jsonschema.Draft202012Validator(SCHEMA)
    errors = sorted(validator.iter_errors(data), key=lambda e: (list(e.absolute_path), e.message))
    if errors:
        raise ConfigError("schema", [Issue(_pointer(e.absolute_path), e.message) for e in errors])

    b = _Builder()
    opts = data.get("options", {})
    w1 = None
    if "extension" in data:
        ext = data["extension"]
        H = b.group(ext["kernel"], "/extension/kernel")
        G = b.group(ext["group"], "/extension/group")
        Q = b.group(ext["quotient"], "/extension/quotient")
        coeff = b.ring(ext["coeff"], "/extension/coeff")
        if b.issues:
            raise ConfigError("semantic", b.issues)
        try:
            t = twist_from_extension(H, G, Q, ext["incl"], ext["proj"], ext["section"], coeff)
        except ValueError as exc:
            raise ConfigError("semantic", [Issue("/extension", str(exc))]) from None
        if "w1" in ext:
            w1 = tuple(ext["w1"])
            if not (b.length(w1, G.order, "/extension/w1", "w1") and b.elements(w1, coeff.size, "/extension/w1")):
                raise ConfigError("semantic", b.issues)
            try:
                t = t.with_involution(w1_involution(t, w1), w_from_w1(t, w1))
            except ValueError as exc:
                raise ConfigError("semantic", [Issue("/extension/w1", str(exc))]) from None
        if "involution" in data or "w" in data:
            b.fail("/involution", "extension instances derive the involution from /extension/w1")
    else:
        R = b.ring(data["ring"], "/ring")
        G = b.group(data["group"], "/group")
        if b.issues:
            raise ConfigError("semantic", b.issues)
        n = G.order
        c = [RingAutomorphism.identity(R)] * n
        if "c" in data and b.length(data["c"], n, "/c", "c"):
            for g, images in enumerate(data["c"]):
                ptr = f"/c/{g}"
                if b.length(images, R.size, ptr, "automorphism table") and b.elements(images, R.size, ptr):
                    if is_automorphism(R, images):
                        c[g] = RingAutomorphism(R, images)
                    else:
                        b.fail(ptr, "not a ring automorphism")
        tau = [[R.one] * n for _ in range(n)]
        if "tau" in data and b.length(data["tau"], n, "/tau", "tau"):
            for g, row in enumerate(data["tau"]):
                if b.length(row, n, f"/tau/{g}", "tau row") and b.elements(row, R.size, f"/tau/{g}"):
                    tau[g] = list(row)
        bar = None
        if "involution" in data:
            inv = data["involution"]
            if inv == "identity":
                bar = RingInvolution.identity(R)
            elif b.length(inv, R.size, "/involution", "involution table") and b.elements(inv, R.size, "/involution"):
                try:
                    bar = RingInvolution(R, inv)
                except ValueError as exc:
                    b.fail("/involution", str(exc))
        w = None
        if "w" in data:
            if "involution" not in data:
                b.fail("/w", "w given without an involution")
            elif b.length(data["w"], n, "/w", "w") and b.elements(data["w"], R.size, "/w"):
                w = tuple(data["w"])
        elif bar is not None:
            w = (R.one,) * n
        v = None
        if "v" in data and b.length(data["v"], n, "/v", "v"):
            try:
                v = SignHom(G, data["v"])
            except ValueError as exc:
                b.fail("/v", str(exc))
        if b.issues:
            raise ConfigError("semantic", b.issues)
        t = TwistData(G, R, tuple(c), tau, bar, w, v)
    if b.issues:
        raise ConfigError("semantic", b.issues)
    return InstanceConfig(
        name=data.get("name", "instance"),
        twist=t,
        max_rank=opts.get("max_rank", DEFAULT_MAX_RANK),
        seed=opts.get("seed", DEFAULT_SEED),
        suites=tuple(opts.get("suites", SUITES)),
        min_samples=opts.get("min_samples", 500),
        w1=w1,
        raw=data,
    )


def load_config(path: str | Path) -> InstanceConfig:
    text = Path(path).read_text(encoding="utf-8")
    return build_config(parse_text(text))
