"""Round-trip tests for the JSON set/ensemble/POVM documents."""

import json

import numpy as np
import pytest

from qdesign import io as qio
from qdesign.core import Ensemble, Povm
from qdesign.designs import (
    MixedStateSet,
    WeightedStateSet,
    builtin_mub,
    builtin_sic,
    depolarize,
    qubit_sic_fiducial,
    validate_sic,
)


class TestRoundTrip:
    def test_state_set(self, tmp_path):
        states = builtin_sic(3)
        back = qio.load(qio.save(states, tmp_path / "sic.json"))
        assert isinstance(back, WeightedStateSet)
        assert back.vectors == pytest.approx(states.vectors, abs=1e-15)
        assert back.labels is None

    def test_mub_labels_survive(self, tmp_path):
        states = builtin_mub(4)
        back = qio.load(qio.save(states, tmp_path / "mub.json"))
        assert np.array_equal(back.labels, states.labels)

    def test_mixed_set(self, tmp_path):
        mixed = depolarize(builtin_mub(2), 0.5)
        back = qio.load(qio.save(mixed, tmp_path / "gen.json"))
        assert isinstance(back, MixedStateSet)
        assert back.kind == "mub"
        assert back.parameter == pytest.approx(mixed.parameter)
        assert back.states == pytest.approx(mixed.states)

    def test_ensemble_and_povm(self, tmp_path):
        ens = Ensemble.from_vectors([0.25, 0.75], np.eye(2))
        povm = Povm.from_basis(np.array([[1, 1], [1, -1]]) / np.sqrt(2))
        assert qio.load(qio.save(ens, tmp_path / "e.json")).weights == pytest.approx(ens.weights)
        assert qio.load(qio.save(povm, tmp_path / "p.json")).effects == pytest.approx(povm.effects)


class TestDocuments:
    def test_fiducial_expands_to_orbit(self):
        doc = qio.fiducial_to_doc(qubit_sic_fiducial())
        states = qio.from_doc(doc)
        assert len(states) == 4
        assert validate_sic(states).passed

    def test_fiducial_normalized_on_load(self):
        doc = qio.fiducial_to_doc(3 * qubit_sic_fiducial())
        assert validate_sic(qio.from_doc(doc)).passed

    def test_mub_set_needs_labels(self):
        doc = qio.to_doc(builtin_mub(2))
        del doc["labels"]
        with pytest.raises(ValueError):
            qio.from_doc(doc)

    def test_dimension_mismatch(self):
        doc = qio.to_doc(builtin_sic(2))
        doc["dim"] = 3
        with pytest.raises(ValueError):
            qio.from_doc(doc)

    def test_set_loads_as_povm_and_ensemble(self, tmp_path):
        path = qio.save(builtin_sic(2), tmp_path / "s.json")
        assert len(qio.load_povm(path)) == 4
        assert len(qio.load_ensemble(path)) == 4

    def test_kind_mismatch(self, tmp_path):
        path = qio.save(Povm.from_basis(np.eye(2)), tmp_path / "p.json")
        with pytest.raises(ValueError):
            qio.load_ensemble(path)

    def test_real_only_entries(self):
        doc = {"dim": 2, "kind": "state-set",
               "elements": [{"weight": 0.5, "vector": [1, 0]}, {"weight": 0.5, "vector": [0, 1]}]}
        states = qio.from_doc(doc)
        assert states.vectors == pytest.approx(np.eye(2))

    def test_json_is_plain(self, tmp_path):
        path = qio.save(builtin_mub(3), tmp_path / "m.json")
        doc = json.loads(path.read_text())
        assert doc["kind"] == "mub-set"
        assert len(doc["elements"]) == 12
        assert len(qio.file_sha256(path)) == 64
