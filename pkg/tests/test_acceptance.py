"""The reproduction table, run end to end: one test per numbered criterion.

Each test executes the corresponding check from minktrig.reproduce at its
stated tolerance and prints a PASS/FAIL line outside pytest's capture so
the status is visible in piped logs.
"""
import pytest

from minktrig import run_criterion


@pytest.fixture
def check(capfd):
    def _run(index: int) -> None:
        result = run_criterion(index)
        status = "PASS" if result.passed else "FAIL"
        with capfd.disabled():
            print(f"criterion {result.index:02d} {result.name}: {status} "
                  f"({result.detail})", flush=True)
        assert result.passed, f"criterion {index}: {result.detail}"

    return _run


def test_criterion_01_euclid_sine_closed_form(check):
    check(1)


def test_criterion_02_formula_vs_direct(check):
    check(2)


def test_criterion_03_sine_range_and_degeneracy(check):
    check(3)


def test_criterion_04_radon_symmetry_dichotomy(check):
    check(4)


def test_criterion_05_c_r_of_regular_4n_gons(check):
    check(5)


def test_criterion_06_c_e_extremes(check):
    check(6)


def test_criterion_07_conjugate_range_bounds(check):
    check(7)


def test_criterion_08_law_of_sines(check):
    check(8)


def test_criterion_09_angular_bisectors(check):
    check(9)


def test_criterion_10_equivalence_suites(check):
    check(10)


def test_criterion_11_benitez_alpha(check):
    check(11)


def test_criterion_12_isosceles_orthogonality_gap(check):
    check(12)


def test_run_criterion_validates_index():
    with pytest.raises(ValueError):
        run_criterion(0)
    with pytest.raises(ValueError):
        run_criterion(13)
