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

"""Smoke tests for the Python bindings."""

from fractions import Fraction

import pytest

import dagcount


def test_robinson_sequence():
    assert dagcount.robinson_sequence(5) == [1, 1, 3, 25, 543, 29281]
    # Exact beyond 64 bits.
    assert dagcount.robinson_sequence(20)[20] > 2**64


def test_counts_agree():
    for n in range(1, 6):
        labeled = dagcount.robinson_sequence(n)[n]
        assert dagcount.count_labeled_dags(n) == labeled
        report = dagcount.count_positive_spectrum_matrices(n)
        assert report["matched"] == labeled
        assert report["examined"] == 2 ** (n * n - n)
    assert dagcount.count_positive_spectrum_matrices(3, mode="full")["matched"] == 25
    assert [dagcount.count_unlabeled_dags(n) for n in range(1, 5)] == [1, 2, 6, 31]


def test_edge_distribution():
    assert dagcount.edge_distribution(3) == {0: 1, 1: 6, 2: 12, 3: 6}


def test_char_poly_and_spectrum():
    identity = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert dagcount.char_poly(identity) == [-1, 3, -3, 1]
    assert dagcount.is_unit_spectrum(identity)
    assert dagcount.spectrum_profile([[0, 1], [1, 0]]) == (2, 1, 2)
    assert dagcount.is_nilpotent([[0, 1], [0, 0]])
    assert not dagcount.is_nilpotent([[0, 1], [1, 0]])
    # Entries larger than 64 bits go through exactly.
    big = 2**70
    assert dagcount.char_poly([[big]]) == [-big, 1]
    assert dagcount.count_real_roots([-2, 0, 1]) == 2


def test_digraphs():
    assert dagcount.is_acyclic(3, [(0, 1), (1, 2)])
    assert not dagcount.is_acyclic(2, [(0, 1), (1, 0)])
    assert dagcount.girth(3, [(0, 1), (1, 2), (2, 0)]) == 3
    assert dagcount.girth(2, [(0, 1)]) is None
    assert dagcount.canonical_key(3, [(0, 1)]) == dagcount.canonical_key(3, [(2, 0)])


def test_generating_function_and_asymptotics():
    assert dagcount.gf_identity_check(12)
    num, den = dagcount.asymptotic_estimate(1)
    assert Fraction(num, den) == Fraction(1000000, 705312)


def test_verify():
    report = dagcount.verify("theorem", 3)
    assert report["passed"]
    assert dagcount.verify("corollary-vi", 2)["passed"]
    with pytest.raises(ValueError):
        dagcount.verify("lemma", 3)
    with pytest.raises(IndexError):
        dagcount.count_labeled_dags(9)
