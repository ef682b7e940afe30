# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
from exact.weights import as_weight
from util.errors import DomainError, ParseError
from .measure import FinMeasure, dirac, uniform, mixture
from .io import read_measure

WALKS = ('lazy', 'simple')
RECIPES = ('walk', 'atoms', 'file', 'kv')


def simple_walk(group):
    """Uniform on the symmetric generating set."""
    return uniform([g for _, g in group.generators()])


def lazy_walk(group, laziness='1/2'):
    """laziness * delta_e + (1 - laziness) * simple walk."""
    laziness = as_weight(laziness)
    if not 0 <= laziness < 1:
        raise DomainError("laziness must lie in [0, 1), got {}".format(laziness))
    return mixture([laziness, 1 - laziness], [dirac(group.identity()), simple_walk(group)])


def atoms_measure(group, specs):
    """Measure from 'element weight' strings, e.g. ['a 1/4', 'A 1/4', 'e 1/2']."""
    atoms = []
    for spec in specs:
        parts = spec.rsplit(None, 1)
        if len(parts) != 2:
            raise ParseError("atom spec must be 'element weight', got {!r}".format(spec))
        atoms.append((group.parse_element(parts[0]), as_weight(parts[1])))
    return FinMeasure(atoms)


def build_measure(config, group):
    """Step measure from the MEASURE node; returns (mu, extra info for the run record)."""
    cfg = config.MEASURE
    recipe = cfg.recipe
    if recipe == 'walk':
        if cfg.walk == 'lazy':
            return lazy_walk(group, cfg.laziness), {'walk': 'lazy', 'laziness': cfg.laziness}
        if cfg.walk == 'simple':
            return simple_walk(group), {'walk': 'simple'}
        raise ValueError(f'MEASURE walk {cfg.walk} not supported')
    if recipe == 'atoms':
        return atoms_measure(group, cfg.atoms), {'atoms': len(cfg.atoms)}
    if recipe == 'file':
        mu, header = read_measure(cfg.file, group.parse_element)
        return mu, {'file': cfg.file, 'header': header}
    if recipe == 'kv':
        from kv import build_kv_measure
        return build_kv_measure(config, group)
    raise ValueError(f'MEASURE recipe {recipe} not supported')
