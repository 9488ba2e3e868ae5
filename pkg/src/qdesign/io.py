"""JSON documents for states, ensembles, POVMs and design sets.

Layout::

    {"dim": 2, "kind": "state-set",
     "elements": [{"weight": 0.25, "vector": {"re": [...], "im": [...]}}, ...],
     "labels": [[b, x], ...]}            # "mub-set" only

Elements carry either ``"vector"`` (expanded to a projector where an
operator is needed) or ``"matrix": {"re": [[...]], "im": [[...]]}``.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Union

import numpy as np

from .core import Ensemble, Povm, projector
from .designs import (
    MixedStateSet,
    WeightedStateSet,
    as_ensemble,
    as_povm,
    weyl_heisenberg_orbit,
)

PathLike = Union[str, Path]

SET_KINDS = {"state-set", "mub-set", "sic-set"}


def _complex_to_json(a: np.ndarray) -> dict:
    a = np.asarray(a, dtype=complex)
    return {"re": a.real.tolist(), "im": a.imag.tolist()}


def _complex_from_json(obj) -> np.ndarray:
    if isinstance(obj, dict):
        re = np.asarray(obj["re"], dtype=float)
        im = np.asarray(obj.get("im", np.zeros_like(re)), dtype=float)
        return re + 1j * im
    return np.asarray(obj, dtype=complex)


def _element_operator(el: dict) -> np.ndarray:
    if "matrix" in el:
        return _complex_from_json(el["matrix"])
    if "vector" in el:
        return projector(_complex_from_json(el["vector"]))
    raise ValueError("element needs a 'matrix' or a 'vector'")


def ensemble_to_doc(ensemble: Ensemble) -> dict:
    return {
        "dim": ensemble.dim,
        "kind": "ensemble",
        "elements": [{"weight": float(p), "matrix": _complex_to_json(r)}
                     for p, r in zip(ensemble.weights, ensemble.states)],
    }


def povm_to_doc(povm: Povm) -> dict:
    return {
        "dim": povm.dim,
        "kind": "povm",
        "elements": [{"matrix": _complex_to_json(e)} for e in povm.effects],
    }


def state_set_to_doc(states: WeightedStateSet, kind: str | None = None) -> dict:
    if kind is None:
        kind = "mub-set" if states.labels is not None else "state-set"
    doc = {
        "dim": states.dim,
        "kind": kind,
        "elements": [{"weight": float(p), "vector": _complex_to_json(v)}
                     for p, v in zip(states.weights, states.vectors)],
    }
    if states.labels is not None:
        doc["labels"] = states.labels.tolist()
    return doc


def mixed_set_to_doc(states: MixedStateSet) -> dict:
    doc = {
        "dim": states.dim,
        "kind": f"gen-{states.kind}-set" if states.kind else "mixed-set",
        "elements": [{"weight": float(p), "matrix": _complex_to_json(r)}
                     for p, r in zip(states.weights, states.states)],
    }
    if states.parameter is not None:
        doc["parameter"] = states.parameter
    if states.labels is not None:
        doc["labels"] = states.labels.tolist()
    return doc


def fiducial_to_doc(vector) -> dict:
    v = np.asarray(vector, dtype=complex).ravel()
    return {"dim": v.size, "kind": "sic-fiducial", "elements": [{"vector": _complex_to_json(v)}]}


def to_doc(obj) -> dict:
    if isinstance(obj, Ensemble):
        return ensemble_to_doc(obj)
    if isinstance(obj, Povm):
        return povm_to_doc(obj)
    if isinstance(obj, WeightedStateSet):
        return state_set_to_doc(obj)
    if isinstance(obj, MixedStateSet):
        return mixed_set_to_doc(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def from_doc(doc: dict):
    """Build the object a document describes (set, ensemble or POVM)."""
    kind = doc.get("kind")
    dim = int(doc["dim"])
    elements = doc["elements"]
    if kind == "sic-fiducial":
        if len(elements) != 1 or "vector" not in elements[0]:
            raise ValueError("a sic-fiducial document holds exactly one vector")
        fid = _complex_from_json(elements[0]["vector"]).ravel()
        if fid.size != dim:
            raise ValueError(f"fiducial length {fid.size} != dim {dim}")
        return weyl_heisenberg_orbit(fid / np.linalg.norm(fid))
    if kind == "povm" or (kind is None and not any("weight" in e for e in elements)):
        ops = np.array([_element_operator(e) for e in elements])
        _check_dim(ops, dim)
        return Povm(ops)
    weights = np.array([float(e["weight"]) for e in elements])
    labels = doc.get("labels")
    if kind in SET_KINDS or (kind is None and all("vector" in e for e in elements)):
        vecs = np.array([_complex_from_json(e["vector"]).ravel() for e in elements])
        if vecs.shape[1] != dim:
            raise ValueError(f"vector length {vecs.shape[1]} != dim {dim}")
        vecs = vecs / np.linalg.norm(vecs, axis=1, keepdims=True)
        if kind == "mub-set" and labels is None:
            raise ValueError("mub-set documents need 'labels'")
        return WeightedStateSet(weights, vecs, labels)
    ops = np.array([_element_operator(e) for e in elements])
    _check_dim(ops, dim)
    if kind in ("gen-sic-set", "gen-mub-set", "mixed-set"):
        set_kind = {"gen-sic-set": "sic", "gen-mub-set": "mub"}.get(kind)
        return MixedStateSet(weights, ops, set_kind, doc.get("parameter"), labels)
    return Ensemble(weights, ops)


def _check_dim(ops: np.ndarray, dim: int):
    if ops.shape[1:] != (dim, dim):
        raise ValueError(f"operators have shape {ops.shape[1:]}, expected ({dim}, {dim})")


def save(obj, path: PathLike) -> Path:
    path = Path(path)
    doc = obj if isinstance(obj, dict) else to_doc(obj)
    path.write_text(json.dumps(doc, indent=1) + "\n")
    return path


def load(path: PathLike):
    return from_doc(json.loads(Path(path).read_text()))


def load_ensemble(path: PathLike) -> Ensemble:
    obj = load(path)
    if isinstance(obj, Povm):
        raise ValueError(f"{path} holds a POVM, not an ensemble")
    return obj if isinstance(obj, Ensemble) else as_ensemble(obj)


def load_povm(path: PathLike) -> Povm:
    obj = load(path)
    if isinstance(obj, Ensemble):
        raise ValueError(f"{path} holds an ensemble, not a POVM")
    return obj if isinstance(obj, Povm) else as_povm(obj)


def file_sha256(path: PathLike) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()
