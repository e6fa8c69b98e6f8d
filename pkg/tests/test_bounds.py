from fractions import Fraction
from math import asin, pi

import pytest

from regdepth.bounds import (TABLE, PROVEN_EXACT, CONJECTURED, pi_interval,
                             asin_interval, p2_lower_interval)

def test_pi_enclosure():
    lo, hi = pi_interval()
    assert float(lo) == pytest.approx(pi) and float(hi) == pytest.approx(pi)
    assert hi - lo < Fraction(1, 10**20)

def test_asin_enclosure():
    lo, hi = asin_interval(Fraction(1, 3))
    assert float(lo) <= asin(1/3) <= float(hi)

def test_p2_lower_enclosure():
    lo, hi = p2_lower_interval()
    assert lo < hi
    assert format(float(lo), '.3f') == '4.622'
    entry = [e for e in TABLE.lookup('P', 2) if e['relation'] == '>='][0]
    assert entry['expression'] == 'pi/(2*asin(1/3))'
    assert entry['enclosure_decimal'][0].startswith('4.622')

def test_r31_is_proven_exact():
    exact = [e for e in TABLE.lookup('R', 3, 1) if e['status'] == PROVEN_EXACT]
    assert [e['value'] for e in exact] == [5]
    assert TABLE.deep_flat_constant(3, 1) == 5

@pytest.mark.parametrize("d,k,value", [(2, 1, 3), (3, 1, 5), (3, 2, 4), (2, 0, 3), (3, 0, 4)])
def test_deep_flat_constants(d, k, value):
    assert TABLE.deep_flat_constant(d, k) == value

def test_conjecture_is_not_used_as_a_bound():
    conj = [e for e in TABLE.lookup('R', 4, 2) if e['status'] == CONJECTURED]
    assert conj[0]['value'] == 7
    assert TABLE.best_upper('R', 4, 2) == 18

def test_tverberg_constants():
    assert TABLE.best_upper('T', 2, 1) == 3
    assert TABLE.best_upper('T', 3, 2) == 6
    assert TABLE.best_upper('T', 3, 0) == 4

def test_for_dimension():
    rows = TABLE.for_dimension(1, 0)
    assert rows[0]['value'] == 2 and rows[0]['status'] == PROVEN_EXACT
    assert all(e['quantity'] in ('P', 'R', 'T') for e in TABLE.for_dimension(3, 1))
    assert TABLE.lookup('R', 3, 3) == []
