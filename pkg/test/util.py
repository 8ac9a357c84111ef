from aohs import PrimeField, PolynomialRing, MultiplicityProfile, LineChart, pull_to_chart
from aohs.chart import ambient_variables, ambient_jacobian_rank
from aohs.util import make_rng

FIELD = PrimeField(1009)


class ChartInstance(object):
    """Generators in chart coordinates (x_1, .., x_{N-1}, z) such that the line {x = 0} meets them with at least
    the multiplicities of the profile at the marked points"""
    def __init__(self, generators, profile, points):
        self.generators = generators
        self.profile = profile
        self.points = tuple(points)

    @property
    def n(self):
        return self.generators[0].ring.nvars

    @property
    def c(self):
        return len(self.generators)

    def pulled(self, star=None):
        chart = LineChart(self.n, star=star)
        return [pull_to_chart(g, chart) for g in self.generators]

    def origin(self, star=False):
        chart = LineChart(self.n, star=FIELD.one if star else None)
        return {name: FIELD.zero for name in chart.chart_variables}


def random_profile(rng, max_k=4, max_r=None):
    parts = list()
    remaining = max_k
    max_r = max_k if max_r is None else max_r
    while remaining > 0 and len(parts) < max_r:
        part = int(rng.integers(1, remaining + 1))
        parts.append(part)
        remaining -= part
        if rng.random() < 0.4:
            break
    return MultiplicityProfile(parts)


def _distinct_points(rng, count):
    points = list()
    while len(points) < count:
        a = FIELD.random_element(rng)
        if a not in points:
            points.append(a)
    return points


def _random_line_coefficient(ring, rng, sparse):
    """A random polynomial of degree <= 2 in z, zero with probability sparse"""
    if rng.random() < sparse:
        return ring.zero
    z = ring.gen("z")
    return sum(((z ** e).scale(FIELD.random_element(rng)) for e in range(3)), ring.zero)


def _chart_system(rng, n, c, support, orders, sparse):
    ring = PolynomialRing(FIELD, ambient_variables(n))
    z = ring.gen("z")
    x = [ring.gen(name) for name in ambient_variables(n)[:-1]]
    d = ring.one
    for a, e in zip(support, orders):
        d = d * (z - ring.constant(a)) ** e
    normalized = list()
    for s in range(c):
        g = d if s == 0 else ring.zero
        for xi in x:
            g = g + xi * _random_line_coefficient(ring, rng, sparse)
        for i in range(len(x)):
            for j in range(i, len(x)):
                if rng.random() < 0.3:
                    g = g + (x[i] * x[j]).scale(FIELD.random_element(rng))
        normalized.append(g)
    # constant recombination, the ideal is unchanged
    while True:
        matrix = [[FIELD.random_element(rng) for _ in range(c)] for _ in range(c)]
        if c == 1 and matrix[0][0]:
            break
        if c == 2 and matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]:
            break
    mixed = list()
    for row in matrix:
        mixed.append(sum((g.scale(m) for g, m in zip(normalized, row)), ring.zero))
    return mixed


def random_instance(seed, max_k=4, coincident=False, sparse=0.3):
    """A pseudorandom instance in P^N, N in {2, 3, 4}, with c in {1, 2} generators, a profile with k <= max_k
    and distinct marked points (one coincident pair if coincident is True). The generators form a local
    complete intersection at the marked points."""
    rng = make_rng(seed, 100)
    while True:
        n = int(rng.integers(2, 5))
        c = int(rng.integers(1, min(2, n - 1) + 1))
        if coincident:
            profile = random_profile(rng, max_k=max_k)
            if profile.r < 2:
                continue
            support = _distinct_points(rng, profile.r - 1)
            s, t = sorted(int(i) for i in rng.choice(profile.r, size=2, replace=False))
            points, merged_parts, cursor = list(), list(), 0
            for j in range(profile.r):
                if j == t:
                    points.append(points[s])
                    merged_parts[s] += profile[j]
                else:
                    points.append(support[cursor])
                    merged_parts.append(profile[j])
                    cursor += 1
        else:
            profile = random_profile(rng, max_k=max_k)
            support = _distinct_points(rng, profile.r)
            points, merged_parts = list(support), list(profile)
        orders = [k + int(rng.integers(0, 2)) for k in merged_parts]
        generators = _chart_system(rng, n, c, support, orders, sparse)
        if all(ambient_jacobian_rank(generators, a) == c for a in support):
            return ChartInstance(generators, profile, points)


def chart_generators(texts, n, field=FIELD):
    ring = PolynomialRing(field, ambient_variables(n))
    return [ring.parse(text) for text in texts]
