"""JSON loaders and canonical report serialization.

Every input file is a JSON object. A simplicial set is either the output
of ``SimplicialSet.to_json`` or ``{"model": "RP2"}``. Groups are either
``{"elements": [...], "table": [[...]]}`` or ``{"name": "C2"}``. A G-space
adds ``"action": {element: {name: name}}`` next to ``"space"``. A map has
``"source"``, ``"target"`` and ``"images": {name: [degeneracy word, name]}``
or ``"constant": true``.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction

from .equivariant import FiniteGroup, GSimplicialSet, named_group
from .errors import EquicobarError, InputError
from .fields import parse_field
from .galois import FieldExtension, SemilinearGSet
from .simplicial import SimplicialMap, SimplicialSet, constant_map, standard_model


def read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except FileNotFoundError:
        raise InputError(f"{path}: file not found") from None
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: malformed JSON ({exc.msg})") from None
    if not isinstance(data, dict):
        raise InputError(f"{path}: top level must be a JSON object")
    return data


def field_from(text):
    try:
        return parse_field(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def space_from(data, D=None):
    if isinstance(data, str):
        data = {"model": data}
    try:
        if "model" in data:
            return standard_model(data["model"], D if D is not None else data.get("dimension_bound"))
        X = SimplicialSet.from_json(data)
    except KeyError as exc:
        raise InputError(str(exc).strip("'\"")) from None
    except (TypeError, AttributeError) as exc:
        raise InputError(f"malformed simplicial set: {exc}") from None
    return X.with_bound(D) if D is not None and D != X.dim_bound else X


def group_from(data):
    if isinstance(data, str):
        data = {"name": data}
    if "table" not in data:
        try:
            return named_group(data["name"])
        except KeyError as exc:
            raise InputError(f"group needs a name or a table: {exc}") from None
    return FiniteGroup.from_json(data)


def gspace_from(data, G=None, D=None):
    if G is None:
        if "group" not in data:
            raise InputError("G-space needs a group")
        G = group_from(data["group"])
    X = space_from(data.get("space", data), D)
    act = data.get("action")
    if act is None:
        action = [{x: x for x in X.names()} for _ in range(G.order)]
    else:
        idx = {e: i for i, e in enumerate(G.elements)}
        action = [None] * G.order
        for g, perm in act.items():
            if g not in idx:
                raise InputError(f"action names unknown group element {g!r}")
            action[idx[g]] = perm
        for i in range(G.order):
            if action[i] is None:
                if i != G.e:
                    raise InputError(f"missing action for {G.elements[i]}")
                action[i] = {x: x for x in X.names()}
    return GSimplicialSet(G, X, action)


def map_from(data, source=None, target=None):
    source = source or space_from(data["source"])
    target = target or space_from(data["target"])
    if data.get("constant"):
        return constant_map(source, target)
    try:
        f = SimplicialMap.from_json(data, source, target)
    except KeyError as exc:
        raise InputError(f"map JSON is missing {exc}") from None
    missing = [x for x in source.names() if x not in f.images]
    if missing:
        raise InputError(f"map has no image for {missing[0]!r}")
    return f


def gmap_from(data, G):
    A = gspace_from(data["source"], G)
    B = gspace_from(data["target"], G)
    return map_from(data, A.X, B.X), A, B


def extension_from(data):
    return FieldExtension.from_json(data)


def galois_set_from(data):
    return SemilinearGSet.from_json(data)


def caps_from_env(env=None):
    """Caps override from ``EQUICOBAR_CAPS``: a JSON object or ``key=value`` pairs."""
    text = (env if env is not None else os.environ).get("EQUICOBAR_CAPS", "").strip()
    if not text:
        return {}
    if text.startswith("{"):
        try:
            caps = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"EQUICOBAR_CAPS: malformed JSON ({exc.msg})") from None
    else:
        caps = {}
        for part in text.split(","):
            key, _, value = part.partition("=")
            caps[key.strip()] = value.strip()
    out = {}
    for key, value in caps.items():
        try:
            out[key] = int(value)
        except (TypeError, ValueError):
            raise InputError(f"EQUICOBAR_CAPS: cap {key!r} must be an integer") from None
        if out[key] <= 0:
            raise InputError(f"EQUICOBAR_CAPS: cap {key!r} must be positive")
    return out


def _default(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if isinstance(obj, tuple):
        return list(obj)
    if isinstance(obj, EquicobarError):
        return str(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(report):
    """Canonical JSON: sorted keys, fixed indentation, trailing newline."""
    return json.dumps({"schema": 1, **report}, sort_keys=True, indent=2, default=_default, ensure_ascii=False) + "\n"
