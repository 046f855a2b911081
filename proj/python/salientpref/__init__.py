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

"""Salient feature preference model.

Items carry feature vectors; each comparison looks only at a pair-dependent
subset of the features. The extension module does the numerical work.
"""

from salientpref._core import (
    ComparisonDataset,
    DimensionError,
    Error,
    FeatureMatrix,
    InvalidPairError,
    NumericalError,
    ParseError,
    PreconditionError,
    Selection,
    UndefinedMetricError,
    __version__,
    corollary1,
    corollary2,
    corollary3,
    empirical_guarantee_check,
    fit,
    kendall_correlation,
    kendall_distance,
    load_comparisons,
    load_features,
    model_transitivity_report,
    nll,
    nll_gradient,
    nll_hessian,
    pairwise_accuracy,
    prob_beats,
    rank_from_weights,
    sample_comparisons,
    sample_instance,
    save_comparisons,
    save_features,
    theorem1,
    transitivity_report,
)

__all__ = [name for name in dir() if not name.startswith("_")]
