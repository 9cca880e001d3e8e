import math

import pandas as pd
import pytest

from blocks.symbolic import SymmetryLabel
from exceptions import DomainError
from spectra.analysis import (
    error_report,
    gap_ratio,
    gap_ratio_report,
    ground_energy_scan,
    ionization_energy,
    ionization_landscape,
    ionization_scan,
    isoelectronic_scan,
    percent_error,
    virial_report)
from spectra.spectrum import AtomSpectrum, atom_spectrum


@pytest.fixture(scope="module")
def lithium():
    return atom_spectrum(3, n_jobs=1)


def test_percent_error():
    assert percent_error(-7.4139, -7.4779) == pytest.approx(0.8559, abs=1e-4)
    assert percent_error(-2.0, -2.0) == 0.0


@pytest.mark.parametrize("N, expected", [(1, 0.5), (2, 0.8477), (3, 0.1912)])
def test_ionization_energy_of_light_atoms(N, expected):
    assert ionization_energy(N) == pytest.approx(expected, abs=5e-4)


def test_ionization_energy_at_fixed_charge():
    """
    Given Z = 3
    When the He-like system is ionized
    Then I = -9/2 + (3 - 5/16)^2.
    """
    assert ionization_energy(2, 3.0) == pytest.approx(-4.5 + (3.0 - 5.0 / 16.0) ** 2)


def test_ionization_landscape_finds_interior_extrema():
    """
    Given a zig-zag sequence
    When its extrema are located
    Then the endpoints are ignored and the global extrema come from the whole series.
    """
    # Given
    values = pd.Series([0.5, 0.85, 0.19, 0.32, 0.23, 0.31, 0.40, 0.27],
                       index=["H", "He", "Li", "Be", "B", "C", "N", "O"])

    # When
    landscape = ionization_landscape(values)

    # Then
    assert landscape["maxima"] == ["He", "Be", "N"]
    assert landscape["minima"] == ["Li", "B"]
    assert landscape["global_min"] == "Li"
    assert landscape["global_max"] == "He"


def test_gap_ratio(lithium):
    assert gap_ratio(3, lithium) == pytest.approx(
        lithium.levels[1].gap / abs(lithium.ground.energy_ci))
    assert gap_ratio(3, lithium) == pytest.approx(0.0635 / 7.4139, abs=2e-4)


def test_gap_ratio_needs_two_levels(lithium):
    single = AtomSpectrum(3, 3.0, lithium.levels[:1])
    with pytest.raises(DomainError):
        gap_ratio(3, single)


def test_gap_ratio_report(lithium):
    """
    Given the Li spectrum and the single-level He spectrum
    When the gap ratios are reported
    Then Li carries its computed and experimental ratios and He is skipped.
    """
    # Given
    helium = atom_spectrum(2, n_jobs=1)

    # When
    frame = gap_ratio_report({"He": helium, "Li": lithium})

    # Then
    assert list(frame["atom"]) == ["Li"]
    assert frame["first_excited"][0] == "2Po"
    assert frame["ratio_CI"][0] == pytest.approx(0.00857, abs=5e-5)
    assert frame["ratio_exp"][0] == 0.0093


def test_isoelectronic_scan_single_term():
    """
    Given the He-like sequence at Z = 2, 3
    When the ¹S energy is scanned
    Then E = -(Z - 5/16)^2 in column E_1S.
    """
    # When
    frame = isoelectronic_scan(2, [2, 3], [SymmetryLabel.parse("1S")], n_jobs=1)

    # Then
    assert list(frame.columns) == ["Z", "E_1S"]
    assert list(frame["Z"]) == [2.0, 3.0]
    assert frame["E_1S"][1] == pytest.approx(-(3.0 - 5.0 / 16.0) ** 2)


def test_isoelectronic_scan_difference_curve():
    # When
    frame = isoelectronic_scan(
        3, [3, 4], [SymmetryLabel.parse("2S"), SymmetryLabel.parse("2Po")], n_jobs=1)

    # Then
    assert list(frame.columns) == ["Z", "E_2S", "E_2Po", "dE"]
    assert (frame["dE"] < 0).all()
    assert frame["dE"][0] == pytest.approx(-0.0635, abs=1e-3)


def test_isoelectronic_scan_rejects_bad_terms():
    with pytest.raises(DomainError):
        isoelectronic_scan(2, [2], [SymmetryLabel.parse("2S")])
    with pytest.raises(DomainError):
        isoelectronic_scan(10, [10], [SymmetryLabel.parse("3P")])
    with pytest.raises(DomainError):
        isoelectronic_scan(3, [3], [SymmetryLabel.parse("2S")] * 3)


def test_ground_energy_scan():
    frame = ground_energy_scan([1, 2, 3], n_jobs=1)
    assert list(frame["atom"]) == ["H", "He", "Li"]
    assert list(frame["term"]) == ["2S", "1S", "2S"]
    assert frame["E_CI"][0] == pytest.approx(-0.5)


def test_ionization_scan():
    """
    Given H, He and Li
    When the neutral ionization energies are scanned
    Then I matches the single-point values and I_exp is filled where tabulated.
    """
    # When
    frame = ionization_scan([1, 2, 3], n_jobs=1)

    # Then
    assert list(frame.columns) == ["N", "atom", "Z", "I", "I_exp", "I_published", "published_ok"]
    assert frame["I"][1] == pytest.approx(0.8477, abs=1e-4)
    assert frame["I_exp"][1] == 0.9036
    assert frame["I_published"][1] == 0.8477
    assert frame["published_ok"][1]
    assert math.isnan(frame["I_published"][0]) and frame["published_ok"][0] is None
    assert frame["I"][2] == pytest.approx(ionization_energy(3))


def test_ionization_scan_at_fixed_charge():
    frame = ionization_scan([2], Z=3.0, n_jobs=1)
    assert frame["Z"][0] == 3.0
    assert frame["I"][0] == pytest.approx(ionization_energy(2, 3.0))
    assert frame["I_exp"][0] is None


def test_virial_report():
    """
    Given H, He and Li
    When the virial ratios are reported
    Then the optimized states satisfy V/T = -2 and the PT ratios match the closed forms.
    """
    # When
    frame = virial_report([1, 2, 3], n_jobs=1)

    # Then
    assert list(frame["atom"]) == ["H", "He", "Li"]
    for ratio in frame["ratio_CI"]:
        assert ratio == pytest.approx(-2.0, abs=1e-4)
    assert frame["ratio_PT"][0] == pytest.approx(-2.0)
    assert frame["ratio_PT"][1] == pytest.approx(-6.75 / 4.0)
    assert frame["ratio_PT"][2] == pytest.approx(-1.6969, abs=1e-4)
    assert frame["published_PT"][2] == -1.6969
    assert frame["published_ok"][2]
    assert frame["published_ok"][0] is None


def test_error_report_for_lithium(lithium):
    """
    Given the Li spectrum only
    When the error report is built
    Then the CI and PT percentage errors match the published ones and the
    fluorine comparison stays without computed values.
    """
    # When
    report = error_report({"Li": lithium})

    # Then
    ground = report["ground_state"].set_index("atom").loc["Li"]
    assert ground["error_CI"] == pytest.approx(ground["published_CI"], abs=0.05)
    assert ground["error_PT"] == pytest.approx(ground["published_PT"], abs=0.05)
    gaps = report["gaps"]
    assert list(gaps["term"]) == ["2Po"]
    assert gaps["dE_exp"][0] == 0.0679
    assert report["gap_ratios"]["ratio_exp"][0] == 0.0093
    assert report["fluorine"]["computed_error_percent"].isna().all()
    assert not math.isnan(report["fluorine"]["error_percent"][0])
