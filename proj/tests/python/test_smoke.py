# Copyright 2026 The salientpref Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import math

import numpy as np
import pytest

import salientpref as sp


def test_probabilities_and_selection():
    u = sp.FeatureMatrix(np.array([[1.0, 0.0], [0.0, 1.0]]), ["a", "b"])
    assert u.dim == 2 and u.num_items == 2
    assert u.item_ids == ["a", "b"]
    sel = sp.Selection({"kind": "top_t", "t": 1}, u)
    assert sel.select(0, 1) == [0]
    assert sel.all_singletons and not sel.is_full
    w = np.array([1.0, 0.0])
    p = sp.prob_beats(u, w, sel, 0, 1)
    assert p == pytest.approx(1.0 / (1.0 + math.exp(-1.0)), rel=1e-15)
    assert p + sp.prob_beats(u, w, sel, 1, 0) == pytest.approx(1.0, abs=1e-15)
    assert sp.Selection(json.dumps({"kind": "full"}), u).is_full


def test_errors_map_to_python_exceptions():
    u = sp.FeatureMatrix(np.eye(2))
    sel = sp.Selection({"kind": "full"}, u)
    with pytest.raises(sp.InvalidPairError):
        sp.prob_beats(u, np.zeros(2), sel, 1, 1)
    with pytest.raises(sp.ParseError):
        sp.Selection({"kind": "nope"}, u)
    with pytest.raises(sp.Error):
        sp.theorem1(u, sel, delta=2.0)


def test_fit_recovers_weights():
    u, w_star = sp.sample_instance(3, 20, 5)
    sel = sp.Selection({"kind": "full"}, u)
    data = sp.sample_comparisons(u, w_star, sel, 20000, 9)
    assert len(data) == 20000
    result = sp.fit(u, sel, data)
    assert result["converged"]
    assert np.linalg.norm(result["w_hat"] - w_star) < 0.3
    grad = sp.nll_gradient(u, result["w_hat"], sel, data)
    assert np.linalg.norm(grad) <= 1e-6
    hess = sp.nll_hessian(u, result["w_hat"], sel, data)
    assert np.all(np.linalg.eigvalsh(hess) > 0)


def test_sampling_is_deterministic():
    u1, w1 = sp.sample_instance(4, 10, 3)
    u2, w2 = sp.sample_instance(4, 10, 3)
    assert np.array_equal(u1.matrix, u2.matrix) and np.array_equal(w1, w2)
    sel = sp.Selection({"kind": "random_exactly_k", "k": 2, "seed": 1}, u1)
    a = sp.sample_comparisons(u1, w1, sel, 500, 4).samples
    b = sp.sample_comparisons(u1, w1, sel, 500, 4).samples
    assert a == b


def test_kendall_and_ranking():
    assert sp.kendall_distance([0, 1, 2, 3], [3, 2, 1, 0]) == 6
    assert sp.kendall_correlation([0, 1, 2], [0, 1, 2]) == 1.0
    u = sp.FeatureMatrix(np.array([[0.0, 2.0, 1.0]]))
    assert sp.rank_from_weights(u, np.array([1.0])) == [1, 2, 0]


def test_transitivity():
    report = sp.transitivity_report({(0, 1): 1.0, (1, 2): 0.67, (0, 2): 0.70})
    assert report["strong_violations"] == 1
    assert report["moderate_violations"] == 0
    assert report["weak_violations"] == 0


def test_theory_reports():
    u = sp.FeatureMatrix(np.eye(3))
    sel = sp.Selection({"kind": "full"}, u)
    t = sp.theorem1(u, sel)
    assert not t["identifiable"]
    assert t["m2"] == "inf"

    u, w_star = sp.sample_instance(2, 10, 4)
    sel = sp.Selection({"kind": "full"}, u)
    t = sp.theorem1(u, sel, w_star)
    assert t["identifiable"] and t["lambda"] > 0
    c1 = sp.corollary1(u, w_star)
    assert c1["lambda_closed"] > 0
    c3 = sp.corollary3(u, sel, w_star, k=1)
    assert c3["k"] == 1
    check = sp.empirical_guarantee_check(
        u, w_star, sel, int(math.ceil(t["required_m"])), trials=3, seed=1)
    assert check["pass_rate"] == 1.0


def test_file_round_trip(tmp_path):
    u, w_star = sp.sample_instance(2, 5, 1)
    sel = sp.Selection({"kind": "full"}, u)
    data = sp.sample_comparisons(u, w_star, sel, 100, 2)
    sp.save_features(str(tmp_path / "f.csv"), u)
    sp.save_comparisons(str(tmp_path / "c.csv"), u, data)
    u2 = sp.load_features(str(tmp_path / "f.csv"))
    assert np.array_equal(u2.matrix, u.matrix)
    data2 = sp.load_comparisons(str(tmp_path / "c.csv"), u2)
    assert sorted(data2.samples) == sorted(data.samples)
