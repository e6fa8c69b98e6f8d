from fractions import Fraction

import pytest

from regdepth.exceptions import InputError
from regdepth.dataset import Dataset

CUBE = """# the unit cube
x,y,z
0,0,0
1,0,0
0,1,0
1,1,0
0,0,1
1,0,1
0,1,1
1,1,1
"""

def test_read_exact_values():
    ds = Dataset.from_text("x,y\n0.5,1/3\n-2, 1e-1\n")
    assert ds.points == [(Fraction(1, 2), Fraction(1, 3)), (Fraction(-2), Fraction(1, 10))]
    assert ds.d == 2 and ds.k is None and ds.regression_k() == 1

def test_comments_and_pragma():
    ds = Dataset.from_text("# k=1\n" + CUBE)
    assert len(ds) == 8 and ds.d == 3
    assert ds.regression_k() == 1
    assert Dataset.from_text(CUBE).regression_k() == 2

def test_canonical_text_round_trip(tmp_path):
    ds = Dataset([(Fraction(1, 2), 3), (-1, Fraction(7, 3))], k=1)
    path = tmp_path / "points.csv"
    ds.to_csv(str(path))
    back = Dataset.from_csv(str(path))
    assert back.points == ds.points and back.k == 1
    assert back.digest() == ds.digest()
    assert ds.to_text() == "# k=1\nx,y\n1/2,3\n-1,7/3\n"

def test_digest_ignores_formatting():
    a = Dataset.from_text("x,y\n0.5,2\n")
    b = Dataset.from_text("# note\nx, y\n1/2, 2.0\n")
    assert a.digest() == b.digest()

def test_empty_dataset():
    ds = Dataset.from_text("x,y\n")
    assert len(ds) == 0 and ds.d == 2

@pytest.mark.parametrize("text", ["", "a,b\n1,2\n", "x,y,z,w\n1,2,3,4\n", "x,y\n1,\n",
                                  "x,y\n1,abc\n", "# k=x\nx,y\n1,2\n", "# k=2\nx,y\n1,2\n"])
def test_bad_files(text):
    with pytest.raises(InputError):
        Dataset.from_text(text)

def test_missing_file(tmp_path):
    with pytest.raises(InputError):
        Dataset.from_csv(str(tmp_path / "nope.csv"))
