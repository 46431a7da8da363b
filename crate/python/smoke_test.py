"""Smoke test for the cutjoin_py extension module.

Build and install first, e.g.

    pip install maturin
    maturin build --release -m crates/python/Cargo.toml -o dist
    pip install dist/cutjoin_py-*.whl
"""

from fractions import Fraction

import cutjoin_py as cj


def main():
    p = cj.Partition([2, 1])
    assert p.parts == [2, 1] and p.size == 3 and len(p) == 2
    assert str(p) == "(2,1)"
    assert p.conjugate() == p
    assert p.dim() == 2 and p.kappa() == 0 and p.hooks() == [3, 1, 1]
    assert cj.Partition.parse("3,1") == cj.Partition([3, 1])
    assert [str(q) for q in cj.partitions(4)] == ["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]

    labels, rows = cj.character_table(3)
    assert labels == ["(3)", "(2,1)", "(1,1,1)"]
    assert rows == [[1, 1, 1], [-1, 0, 2], [1, -1, 1]]
    assert cj.character("2,1", [1, 1, 1]) == 2
    assert cj.central_character([3], [2, 1]) == 3

    assert cj.hurwitz_number(0, 0, [2]) == Fraction(1, 2)
    assert cj.hurwitz_number(1, 1, [1]) == 1
    assert cj.hurwitz_coefficient(0, [2]) == "(1/2)*sinh(λ)"
    assert cj.hurwitz_coefficient(0, [2], raw=True) == {1: Fraction(1, 4), -1: Fraction(-1, 4)}
    try:
        cj.hurwitz_number(0, 1, [2])
    except ValueError:
        pass
    else:
        raise AssertionError("negative branch count accepted")

    series = dict(cj.marinovafa_series(1))
    assert series == {"(1)": "1/(2 sin(λ/2))"}

    for name in ["vhook", "mv-golden", "phi-golden", "cp-lemma"]:
        report = cj.verify(name, quick=True)
        assert report.all_passed(), str(report)
    assert len(cj.verify("phi-golden").notes) == 6
    assert "prop-f" in cj.suite_names()

    print("smoke test passed")


if __name__ == "__main__":
    main()
