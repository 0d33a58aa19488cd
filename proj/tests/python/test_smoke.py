"""Smoke tests for the blockshift extension module."""

import pytest

import blockshift as bs


def test_beta_number_round_trip():
    assert bs.beta_number([3, 2, 2, 1]) == [2, 0, -1, -3]
    assert bs.partition_from_beta([2, 0, -1, -3]) == [3, 2, 2, 1]
    assert bs.beta_number([]) == []


def test_core_parameter_bijection():
    assert bs.is_e_core([3, 2, 2, 1], 5)
    assert bs.params_of_core([3, 2, 2, 1], 5) == [1, -1, 1, -1, 0]
    assert bs.core_from_params([2, -1, -1, 0]) == [5, 2, 2]
    assert bs.n0_of_core([2, -1, -1, 0]) == 3
    assert bs.core_from_params([1, 2, -3]) == [5, 3, 3, 2, 2, 1, 1]
    assert bs.n0_of_core([1, 2, -3]) == 7
    with pytest.raises(ValueError):
        bs.core_from_params([1, 0, 0])


def test_residue_vector_counts_nodes():
    counts = bs.residue_vector([5, 2, 2], 4)
    assert sum(counts) == 9
    assert counts[0] == 3
    assert bs.ni_of_core([2, -1, -1, 0], 1) == counts[1]


def test_alpha_of_the_worked_example():
    assert bs.alpha_kappa([[5, 2, 1], [1, 1]], [0, 2], 4) == [3, 2, 3, 2]
    assert bs.alpha_kappa([[3, 1, 1], [3, 1, 1]], [0, 2], 4) == [3, 2, 3, 2]


def test_shift_and_orbits():
    assert bs.shift_multipartition([[5, 2, 1], [1, 1]], 1, 2, 2) == [[1, 1], [5, 2, 1]]
    assert bs.shift_alpha([1, 0, 0, 0], 1, 2, 2) == [0, 0, 1, 0]
    assert bs.orbit_size_alpha([3, 2, 3, 2], 1, 2, 2) == 1
    assert bs.orbit_size_multipartition([[5, 2, 1], [1, 1]], 1, 2, 2) == 2


def test_gale_ryser_vectors():
    eps = bs.gale_ryser_vectors([1, 2, 2, 1, 2, 3, 0, 1], 4)
    assert eps[0] == [1, 0, 1, 0, 0, 1, 0, 0]
    assert all(sum(row) == 3 for row in eps)


def test_rectify_block_sums():
    eps0 = bs.gale_ryser_vectors([1, 2, 2, 1, 2, 3, 0, 1], 4)
    eps1 = bs.gale_ryser_vectors([0, 2, 1, 3, 1, 3, 2, 0], 4)
    matrices = [[eps0[j], eps1[j]] for j in range(4)]
    rectified, log = bs.rectify_block_sums(matrices, 4, [3, 3])
    assert len(log) == 2
    for matrix in rectified:
        for block in range(2):
            assert sum(sum(row[block * 4:(block + 1) * 4]) for row in matrix) == 3


def test_find_stuttering_worked_example():
    mu = bs.find_stuttering([[5, 2, 1], [1, 1]], [0, 2], 1, 2, 2)
    assert bs.alpha_kappa(mu, [0, 2], 4) == [3, 2, 3, 2]
    assert bs.shift_multipartition(mu, 1, 2, 2) == mu
    with pytest.raises(ValueError):
        bs.find_stuttering([[1], []], [0, 2], 1, 2, 2)


def test_find_minimal_orbit_and_oracle():
    lam = [[1], [], [1], []]
    kappa = [0, 1, 2, 3]
    mu = bs.find_minimal_orbit(lam, kappa, 1, 1, 4)
    assert bs.orbit_size_multipartition(mu, 1, 1, 4) == 2
    report = bs.verify_main_theorem(4, [0, 2], 1, 2, 2)
    assert report["pass"]
    minmax = bs.verify_minmax(4, 1, 2, 2)
    assert minmax["pass"] and minmax["min_orbit"] == 1 and minmax["max_orbit"] == 2
