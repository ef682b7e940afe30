# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
"""
Orbit exploration by breadth-first search over generator applications.

Every result carries a `truncated` flag. A search that stops at its cap says
nothing about points it did not reach.
"""
from collections import deque, namedtuple

from groups.base import Word

OrbitResult = namedtuple('OrbitResult', ['points', 'layers', 'truncated'])
ProbeResult = namedtuple('ProbeResult', ['found', 'word', 'explored', 'truncated', 'depth'])
GapResult = namedtuple('GapResult', ['upper_bound', 'witness', 'explored', 'truncated'])


def orbit_bfs(space, x0, generators=None, cap=1000):
    """Points reachable from x0, in BFS order, stopping after `cap` points."""
    if generators is None:
        generators = [g for _, g in space.group.generators()]
    layers = {x0: 0}
    points = [x0]
    queue = deque([x0])
    truncated = False
    while queue and not truncated:
        x = queue.popleft()
        for g in generators:
            y = space.act(g, x)
            if y in layers:
                continue
            if len(points) >= cap:
                truncated = True
                break
            layers[y] = layers[x] + 1
            points.append(y)
            queue.append(y)
    return OrbitResult(points, layers, truncated)


def _symmetric_letters(group):
    gens = group.base_generators()
    letters = []
    for i, g in enumerate(gens):
        letters.append(((i, 1), g))
        letters.append(((i, -1), group.inv(g)))
    return letters


def strong_transitivity_probe(space, source, target, depth=8, cap=100000):
    """Search for a word w with w.source = target, breadth first.

    The returned word is read left to right as a group product, so it acts on
    points right to left. Not found within the limits is inconclusive.
    """
    source = space.check_point(source)
    target = space.check_point(target)
    if source == target:
        return ProbeResult(True, Word(()), 1, False, 0)
    letters = _symmetric_letters(space.group)
    parent = {source: None}
    queue = deque([(source, 0)])
    truncated = False
    while queue:
        x, d = queue.popleft()
        if d == depth:
            truncated = True
            continue
        for letter, g in letters:
            y = space.act(g, x)
            if y in parent:
                continue
            parent[y] = (x, letter)
            if y == target:
                path = []
                while parent[y] is not None:
                    y, step = parent[y]
                    path.append(step)
                # last applied generator is the leftmost factor
                return ProbeResult(True, Word(path), len(parent), False, d + 1)
            if len(parent) >= cap:
                return ProbeResult(False, None, len(parent), True, d + 1)
            queue.append((y, d + 1))
    return ProbeResult(False, None, len(parent), truncated, depth)


def orbit_gap(space, metric, x, y, cap=1000):
    """Upper bound on inf_g d(x, g.y) from the explored part of the orbit of y."""
    orbit = orbit_bfs(space, y, cap=cap)
    best, witness = None, None
    for p in orbit.points:
        d = metric(x, p)
        if best is None or d < best:
            best, witness = d, p
    return GapResult(best, witness, len(orbit.points), orbit.truncated)


def orbit_rows(space, orbit):
    """CSV rows (layer, point) in BFS order."""
    return [[orbit.layers[p], space.format_point(p)] for p in orbit.points]
