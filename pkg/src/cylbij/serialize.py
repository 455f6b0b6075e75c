"""JSON forms of partitions, profiles, CPPs, ALCDs and (gamma, ALCD) pairs."""

from __future__ import annotations

import json

from .diagram import ALCD, CylCoord
from .partitions import CPP, Partition, Profile, partition, parse_profile


class InputError(ValueError):
    """Malformed or invariant-violating input; the message names the field."""


def parse_partition_text(text: str, field: str = "partition") -> Partition:
    """Accept ``[5,3,3,2]``, ``5,3,3,2`` or ``[]``."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    try:
        parts = [int(p) for p in body.split(",") if p.strip()]
        return partition(parts)
    except ValueError as exc:
        raise InputError(f"{field}: {exc}") from None


def _partition(value, field: str) -> Partition:
    if not isinstance(value, list) or not all(isinstance(p, int) for p in value):
        raise InputError(f"{field}: expected a list of integers")
    try:
        return partition(value)
    except ValueError as exc:
        raise InputError(f"{field}: {exc}") from None


def _profile(value, field: str = "profile") -> Profile:
    if not isinstance(value, str):
        raise InputError(f"{field}: expected a 0/1 string")
    try:
        return parse_profile(value)
    except ValueError as exc:
        raise InputError(f"{field}: {exc}") from None


def _labels(pi: Profile, value, field: str) -> ALCD:
    if not isinstance(value, list):
        raise InputError(f"{field}: expected a list of [i,j,k,label] entries")
    items = []
    for n, entry in enumerate(value):
        if not (isinstance(entry, list) and len(entry) == 4 and all(isinstance(v, int) for v in entry)):
            raise InputError(f"{field}[{n}]: expected [i,j,k,label] integers")
        items.append((CylCoord(*entry[:3]), entry[3]))
    try:
        return ALCD(pi, tuple(items))
    except ValueError as exc:
        raise InputError(f"{field}: {exc}") from None


def cpp_from_json(obj) -> CPP:
    if not isinstance(obj, dict) or "slices" not in obj:
        raise InputError("cpp: expected an object with 'profile' and 'slices'")
    pi = _profile(obj.get("profile"))
    slices = obj["slices"]
    if not isinstance(slices, list):
        raise InputError("slices: expected a list of partitions")
    parts = tuple(_partition(s, f"slices[{n}]") for n, s in enumerate(slices))
    try:
        return CPP(pi, parts)
    except ValueError as exc:
        raise InputError(f"slices: {exc}") from None


def cpp_to_json(c: CPP) -> dict:
    return {"profile": c.profile.bits, "slices": [list(s) for s in c.slices]}


def alcd_from_json(obj) -> ALCD:
    if not isinstance(obj, dict) or "labels" not in obj:
        raise InputError("alcd: expected an object with 'profile' and 'labels'")
    return _labels(_profile(obj.get("profile")), obj["labels"], "labels")


def alcd_labels_json(d: ALCD) -> list[list[int]]:
    return [[c.i, c.j, c.k, lab] for c, lab in d.labels]


def alcd_to_json(d: ALCD) -> dict:
    return {"profile": d.profile.bits, "labels": alcd_labels_json(d)}


def pair_from_json(obj) -> tuple[Partition, ALCD]:
    """``{"profile": ..., "gamma": [...], "alcd": [[i,j,k,label], ...]}``.

    ``alcd`` may also be a full ALCD object carrying the same profile.
    """
    if not isinstance(obj, dict) or "gamma" not in obj:
        raise InputError("pair: expected an object with 'profile', 'gamma' and 'alcd'")
    gamma = _partition(obj["gamma"], "gamma")
    raw = obj.get("alcd", [])
    if isinstance(raw, dict):
        d = alcd_from_json(raw)
        if "profile" in obj and obj["profile"] != d.profile.bits:
            raise InputError("alcd.profile: differs from the pair's profile")
    else:
        d = _labels(_profile(obj.get("profile")), raw, "alcd")
    return gamma, d


def pair_to_json(gamma: Partition, d: ALCD) -> dict:
    return {"profile": d.profile.bits, "gamma": list(gamma), "alcd": alcd_labels_json(d)}


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def loads(text: str, source: str = "input"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
