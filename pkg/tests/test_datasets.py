import numpy as np
from numpy.testing import assert_array_equal
import pytest

from lpcopula.datasets import ingest, load_dataset, parse_categories


def _write(tmp_path, text):
    p = tmp_path / "d.csv"
    p.write_text(text)
    return p


def test_numeric_columns_verbatim(tmp_path):
    ds = ingest(_write(tmp_path, "a,b\n1.5,2\n-3,4e2\n"))
    assert ds.names == ["a", "b"] and ds.n == 2
    assert_array_equal(ds["a"], [1.5, -3])
    assert_array_equal(ds["b"], [2, 400])


def test_declared_category_order(tmp_path):
    p = _write(tmp_path, "eye,n\nblue,1\ndark,2\nlight,3\nmedium,4\n")
    ds = ingest(p, categories=parse_categories(["eye=blue,light,medium,dark"]))
    assert_array_equal(ds["eye"], [0, 3, 1, 2])


def test_na_cell_names_row_and_column(tmp_path):
    p = _write(tmp_path, "a,b\n1,2\nNA,3\n")
    with pytest.raises(ValueError, match=r"row 3, column 'a'"):
        ingest(p)


def test_undeclared_text_column(tmp_path):
    with pytest.raises(ValueError, match="cannot parse 'red'"):
        ingest(_write(tmp_path, "a\nred\n"))


def test_undeclared_category_level(tmp_path):
    p = _write(tmp_path, "a\nred\ngreen\n")
    with pytest.raises(ValueError, match="undeclared category 'green'"):
        ingest(p, categories={"a": ["red"]})


def test_missing_column(tmp_path):
    with pytest.raises(ValueError, match="missing column 'z'"):
        ingest(_write(tmp_path, "a,b\n1,2\n"), columns=["a", "z"])


@pytest.mark.parametrize("text", ["a\ninf\n", "a\n\n1\n", "a,b\n1\n"])
def test_strict_cells(tmp_path, text):
    with pytest.raises(ValueError, match="row"):
        ingest(_write(tmp_path, text))


def test_column_subset_skips_others(tmp_path):
    ds = ingest(_write(tmp_path, "a,b\n1,x\n2,y\n"), columns=["a"])
    assert ds.names == ["a"]


def test_bad_category_declaration():
    with pytest.raises(ValueError, match="COL=a,b,c"):
        parse_categories(["eye"])


@pytest.mark.parametrize("name, n", [("yates", 42), ("wais", 15), ("geyser", 272),
                                     ("fisher_caithness", 5387)])
def test_bundled(name, n):
    ds = load_dataset(name)
    assert ds.n == n
    for c in ds.names:
        assert np.isfinite(ds[c]).all()


def test_yates_table():
    ds = load_dataset("yates")
    pairs = list(zip(ds["feeding"], ds["teeth"]))
    assert [pairs.count(c) for c in [(0, 0), (0, 1), (1, 0), (1, 1)]] == [4, 16, 1, 21]


def test_unknown_bundled():
    with pytest.raises(ValueError, match="unknown bundled"):
        load_dataset("nope")
