"""Known values and bounds of the depth constants.

P(d): size constant of nontransversal families in d dimensions
R(d,k): deep k-flats exist with depth at least n/R(d,k)
T(d,k): flat Tverberg partitions into ceil(n/T(d,k)) parts exist

Entries are stored symbolically, exactly as they are known; lookup()
instantiates them for a concrete (d, k)."""

from fractions import Fraction

PROVEN_EXACT = 'proven-exact'
PROVEN_UPPER = 'proven-upper'
PROVEN_LOWER = 'proven-lower'
CONJECTURED = 'conjectured'

STATUSES = (PROVEN_EXACT, PROVEN_UPPER, PROVEN_LOWER, CONJECTURED)

def _arctan_interval(x, terms=40):
    """Enclosure of arctan(x) for 0 < x < 1 from the alternating series."""

    x = Fraction(x)
    s = Fraction(0)
    bounds = []
    for n in range(terms):
        s += (-1)**n * x**(2*n + 1) / (2*n + 1)
        bounds.append(s)
    return min(bounds[-2:]), max(bounds[-2:])

def pi_interval(terms=40):
    """Enclosure of pi via 16*atan(1/5) - 4*atan(1/239)."""

    a_lo, a_hi = _arctan_interval(Fraction(1, 5), terms)
    b_lo, b_hi = _arctan_interval(Fraction(1, 239), terms)
    return 16*a_lo - 4*b_hi, 16*a_hi - 4*b_lo

def asin_interval(x, terms=40):
    """Enclosure of asin(x) for 0 < x < 1; the term ratio of the series
    is below x**2, which bounds the tail."""

    x = Fraction(x)
    s = Fraction(0)
    coef = Fraction(1)
    term = x
    for n in range(terms):
        term = coef * x**(2*n + 1) / (2*n + 1)
        s += term
        coef = coef * Fraction((2*n + 1), (2*n + 2))
    nxt = coef * x**(2*terms + 1) / (2*terms + 1)
    return s, s + nxt / (1 - x*x)

def p2_lower_interval(terms=40):
    """Rational enclosure of pi / (2 asin(1/3))."""

    p_lo, p_hi = pi_interval(terms)
    s_lo, s_hi = asin_interval(Fraction(1, 3), terms)
    return p_lo / (2*s_hi), p_hi / (2*s_lo)

class BoundEntry(object):
    """One known statement about a constant.

    d and k are ints or the symbols 'd', 'k', 'd-1'. value is a function
    of (d, k) returning an int, or None when the value is only an
    expression with a rational enclosure."""

    def __init__(self, quantity, d, k, relation, status, expression, value=None, enclosure=None):
        self.quantity = quantity
        self.d = d
        self.k = k
        self.relation = relation
        self.status = status
        self.expression = expression
        self.value = value
        self.enclosure = enclosure

    def matches(self, d, k):
        if isinstance(self.d, int) and self.d != d:
            return False
        if self.k is None:
            return True
        if self.k == 'd-1':
            return k == d - 1
        if isinstance(self.k, int):
            return self.k == k
        return True

    def instantiate(self, d, k):
        out = {'quantity': self.quantity,
               'd': d,
               'k': k,
               'relation': self.relation,
               'status': self.status,
               'expression': self.expression}
        out['value'] = None if self.value is None else self.value(d, k)
        if self.enclosure is not None:
            lo, hi = self.enclosure
            out['enclosure'] = [str(lo), str(hi)]
            out['enclosure_decimal'] = [format(float(lo), '.6f'), format(float(hi), '.6f')]
        return out

    def label(self):
        if self.k is None:
            return '{0}({1})'.format(self.quantity, self.d)
        return '{0}({1},{2})'.format(self.quantity, self.d, self.k)

def _p_upper(k):
    return {1: 2, 2: 6}.get(k)

class BoundsTable(object):

    def __init__(self):
        self.entries = [
            BoundEntry('P', 1, None, '=', PROVEN_EXACT, '2', lambda d, k: 2),
            BoundEntry('P', 2, None, '<=', PROVEN_UPPER, '6', lambda d, k: 6),
            BoundEntry('P', 2, None, '>=', PROVEN_LOWER, 'pi/(2*asin(1/3))',
                       enclosure=p2_lower_interval()),
            BoundEntry('R', 'd', 0, '=', PROVEN_EXACT, 'd+1', lambda d, k: d + 1),
            BoundEntry('R', 'd', 'd-1', '=', PROVEN_EXACT, 'd+1', lambda d, k: d + 1),
            BoundEntry('R', 'd', 'k', '<=', PROVEN_UPPER, '(d-k+1)*P(k)',
                       lambda d, k: None if _p_upper(k) is None else (d - k + 1)*_p_upper(k)),
            BoundEntry('R', 'd', 1, '<=', PROVEN_UPPER, '2d-1', lambda d, k: 2*d - 1),
            BoundEntry('R', 3, 1, '=', PROVEN_EXACT, '5', lambda d, k: 5),
            BoundEntry('R', 'd', 'k', '=', CONJECTURED, '(k+1)(d-k)+1', lambda d, k: (k + 1)*(d - k) + 1),
            BoundEntry('T', 'd', 0, '=', PROVEN_EXACT, 'd+1', lambda d, k: d + 1),
            BoundEntry('T', 2, 1, '=', PROVEN_EXACT, '3', lambda d, k: 3),
            BoundEntry('T', 'd', 'd-1', '<=', PROVEN_UPPER, 'd(d+1)', lambda d, k: d*(d + 1)),
            BoundEntry('T', 3, 2, '<=', PROVEN_UPPER, '6', lambda d, k: 6),
        ]

    def lookup(self, quantity, d, k=None):
        """Instantiated entries that apply to quantity(d, k)."""

        out = []
        for e in self.entries:
            if e.quantity != quantity:
                continue
            if quantity == 'P':
                if e.d == d:
                    out.append(e.instantiate(d, None))
                continue
            if k is None or not 0 <= k <= d - 1:
                continue
            if e.matches(d, k):
                inst = e.instantiate(d, k)
                if inst['value'] is None and e.enclosure is None:
                    continue
                out.append(inst)
        return out

    def for_dimension(self, d, k=None):
        """All entries for P(d) and, when k is given, R(d,k) and T(d,k)."""

        out = self.lookup('P', d)
        if k is not None:
            out += self.lookup('R', d, k)
            out += self.lookup('T', d, k)
        return out

    def best_upper(self, quantity, d, k):
        """Smallest proven upper value (an exact value counts as one)."""

        values = [e['value'] for e in self.lookup(quantity, d, k)
                  if e['status'] in (PROVEN_EXACT, PROVEN_UPPER) and e['value'] is not None]
        if not values:
            return None
        return min(values)

    def deep_flat_constant(self, d, k):
        return self.best_upper('R', d, k)

TABLE = BoundsTable()
