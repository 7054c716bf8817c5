# Copyright 2026 The dagcount Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Exact counting of acyclic digraphs and positive-spectrum (0,1)-matrices."""

from ._core import (
    asymptotic_estimate,
    canonical_key,
    char_poly,
    count_labeled_dags,
    count_positive_spectrum_matrices,
    count_real_roots,
    count_unlabeled_dags,
    edge_distribution,
    gf_identity_check,
    girth,
    is_acyclic,
    is_nilpotent,
    is_unit_spectrum,
    robinson_sequence,
    spectrum_profile,
    verify,
)

__all__ = [
    "asymptotic_estimate",
    "canonical_key",
    "char_poly",
    "count_labeled_dags",
    "count_positive_spectrum_matrices",
    "count_real_roots",
    "count_unlabeled_dags",
    "edge_distribution",
    "gf_identity_check",
    "girth",
    "is_acyclic",
    "is_nilpotent",
    "is_unit_spectrum",
    "robinson_sequence",
    "spectrum_profile",
    "verify",
]
