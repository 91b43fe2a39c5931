"""JSON document formats for mass functions, context vectors, decay specs.

Mass document:
    { "frame": ["a", "h", "r"],
      "masses": [ {"set": ["a"], "mass": 0.5}, {"set": "*", "mass": 0.5} ] }
"set": [] is the empty set, "set": "*" the full frame; omitted subsets
carry mass 0. Unknown top-level keys are ignored so annotated outputs
re-load as written.

Context document:
    { "contexts": [ {"set": ["h", "r"], "alpha": 0.4} ] }

Decay document (one of half_life_s / lambda / fraction per entry):
    { "decay": [ {"set": ["w1"], "half_life_s": 1.0},
                 {"set": ["w2"], "lambda": 0.1733},
                 {"set": ["w3"], "fraction": {"n": 16, "t_s": 4.0}} ] }
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .discount import ContextVector
from .errors import CredalError, DocumentError
from .frame import Frame, Subset, build_frame
from .mass import MassFunction, make_mass
from .temporal import DecaySpec, lambda_from_fraction_life, lambda_from_half_life


def _require(obj: Any, kind: type, where: str, source: str) -> Any:
    names = {dict: "an object", list: "an array", str: "a string"}
    if not isinstance(obj, kind) or isinstance(obj, bool):
        raise DocumentError(f"expected {names.get(kind, kind.__name__)}", where, source)
    return obj


def _number(obj: Any, where: str, source: str) -> float:
    if isinstance(obj, bool) or not isinstance(obj, (int, float)):
        raise DocumentError("expected a number", where, source)
    return float(obj)


def _parse_set(frame: Frame, obj: Any, where: str, source: str) -> Subset:
    if obj == "*":
        return frame.full
    if not isinstance(obj, list):
        raise DocumentError('expected an array of labels or "*"', where, source)
    bits = 0
    for i, label in enumerate(obj):
        _require(label, str, f"{where}[{i}]", source)
        try:
            bits |= 1 << frame.bit_of(label)
        except CredalError as exc:
            raise DocumentError(str(exc), f"{where}[{i}]", source) from exc
    return frame.subset_from_bits(bits)


def load_json(path: str | Path) -> Any:
    source = str(path)
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(str(exc), source=source) from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(
            exc.msg, f"line {exc.lineno} column {exc.colno}", source
        ) from exc


def parse_mass_document(obj: Any, source: str = "") -> MassFunction:
    _require(obj, dict, "", source)
    if "frame" not in obj:
        raise DocumentError("missing field", "frame", source)
    labels = _require(obj["frame"], list, "frame", source)
    for i, label in enumerate(labels):
        _require(label, str, f"frame[{i}]", source)
    try:
        frame = build_frame(labels)
    except CredalError as exc:
        raise DocumentError(str(exc), "frame", source) from exc
    if "masses" not in obj:
        raise DocumentError("missing field", "masses", source)
    entries = _require(obj["masses"], list, "masses", source)
    acc: dict[int, float] = {}
    for i, entry in enumerate(entries):
        where = f"masses[{i}]"
        _require(entry, dict, where, source)
        if "set" not in entry:
            raise DocumentError("missing field", f"{where}.set", source)
        if "mass" not in entry:
            raise DocumentError("missing field", f"{where}.mass", source)
        subset = _parse_set(frame, entry["set"], f"{where}.set", source)
        value = _number(entry["mass"], f"{where}.mass", source)
        if not 0.0 <= value <= 1.0:
            raise DocumentError(
                f"mass {value!r} outside [0, 1]", f"{where}.mass", source
            )
        acc[subset.bits] = acc.get(subset.bits, 0.0) + value
    try:
        return make_mass(
            frame, {frame.subset_from_bits(b): v for b, v in acc.items()}
        )
    except CredalError as exc:
        raise DocumentError(str(exc), "masses", source) from exc


def parse_context_document(obj: Any, frame: Frame, source: str = "") -> ContextVector:
    _require(obj, dict, "", source)
    if "contexts" not in obj:
        raise DocumentError("missing field", "contexts", source)
    entries = _require(obj["contexts"], list, "contexts", source)
    pairs: list[tuple[Subset, float]] = []
    for i, entry in enumerate(entries):
        where = f"contexts[{i}]"
        _require(entry, dict, where, source)
        if "set" not in entry:
            raise DocumentError("missing field", f"{where}.set", source)
        if "alpha" not in entry:
            raise DocumentError("missing field", f"{where}.alpha", source)
        subset = _parse_set(frame, entry["set"], f"{where}.set", source)
        alpha = _number(entry["alpha"], f"{where}.alpha", source)
        pairs.append((subset, alpha))
    try:
        return ContextVector.from_pairs(frame, pairs)
    except CredalError as exc:
        raise DocumentError(str(exc), "contexts", source) from exc


def parse_decay_document(obj: Any, frame: Frame, source: str = "") -> DecaySpec:
    _require(obj, dict, "", source)
    if "decay" not in obj:
        raise DocumentError("missing field", "decay", source)
    entries = _require(obj["decay"], list, "decay", source)
    pairs: list[tuple[Subset, float]] = []
    for i, entry in enumerate(entries):
        where = f"decay[{i}]"
        _require(entry, dict, where, source)
        if "set" not in entry:
            raise DocumentError("missing field", f"{where}.set", source)
        subset = _parse_set(frame, entry["set"], f"{where}.set", source)
        keys = [k for k in ("half_life_s", "lambda", "fraction") if k in entry]
        if len(keys) != 1:
            raise DocumentError(
                'need exactly one of "half_life_s", "lambda", "fraction"',
                where,
                source,
            )
        key = keys[0]
        try:
            if key == "half_life_s":
                rate = lambda_from_half_life(
                    _number(entry[key], f"{where}.half_life_s", source)
                )
            elif key == "lambda":
                rate = _number(entry[key], f"{where}.lambda", source)
            else:
                frac = _require(entry[key], dict, f"{where}.fraction", source)
                for field in ("n", "t_s"):
                    if field not in frac:
                        raise DocumentError(
                            "missing field", f"{where}.fraction.{field}", source
                        )
                rate = lambda_from_fraction_life(
                    _number(frac["n"], f"{where}.fraction.n", source),
                    _number(frac["t_s"], f"{where}.fraction.t_s", source),
                )
        except DocumentError:
            raise
        except CredalError as exc:
            raise DocumentError(str(exc), f"{where}.{key}", source) from exc
        pairs.append((subset, rate))
    try:
        return DecaySpec.from_pairs(frame, pairs)
    except CredalError as exc:
        raise DocumentError(str(exc), "decay", source) from exc


def load_mass_document(path: str | Path) -> MassFunction:
    return parse_mass_document(load_json(path), str(path))


def load_context_document(path: str | Path, frame: Frame) -> ContextVector:
    return parse_context_document(load_json(path), frame, str(path))


def load_decay_document(path: str | Path, frame: Frame) -> DecaySpec:
    return parse_decay_document(load_json(path), frame, str(path))


def mass_to_document(m: MassFunction) -> dict:
    """Serializable form of a mass function; re-loads to an equal value."""
    return {
        "frame": list(m.frame.labels),
        "masses": [
            {"set": list(subset.labels), "mass": value} for subset, value in m.focal()
        ],
    }
