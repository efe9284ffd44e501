"""
Catalog of graph oracles and graph transforms

Spec mini-language (canonical printer round-trips through the parser):

    spec      := atom | transform
    atom      := FAMILY [ ":" param ( "," param )* ]
    transform := TRANSFORM "(" item ( "," item )* ")"
    item      := spec | param
    param     := KEY "=" INT

    FAMILY    := grid | tree | lamplighter | bs | grandfather
    TRANSFORM := power | union | subdiv | product

An atom absorbs a following "key=int" only while the key is one of its own
parameters and not yet set, so "power(tree:d=3,r=2)" gives r to power and
"product(grid:d=2,d=3)" gives the second d to product.

Vertex encodings per family:
    grid          "(x1,...,xd)"              e.g. "(0,-2)"
    tree          reduced word over 0-9a-z,  "e" for the identity
    lamplighter   "[lit lamps]@position"     e.g. "[-1,2]@3", "[]@0"
    bs            "(x,k)" with x ∈ ℤ[1/m]    e.g. "(3/4,-2)"
    grandfather   "(k,c)" with c dyadic in [0, 2^k)
    power         base encodings
    union         "<operand index>|<encoding>"
    subdiv        "o<encoding>" originals, 'm["<u>","<v>"]' midpoints (u < v)
    product       "<encoding>&<tree word>"
"""

import json
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

import config
from errors import InvalidSpecError, ResourceError, SpecParseError
from graph_core import CayleyOracle, GraphOracle
from logger_config import setup_logger

logger = setup_logger('Generators')

TREE_ALPHABET = '0123456789abcdefghijklmnopqrstuvwxyz'
TREE_IDENTITY = 'e'


class Family(Enum):
    GRID = 'grid'
    TREE = 'tree'
    LAMPLIGHTER = 'lamplighter'
    BS = 'bs'
    GRANDFATHER = 'grandfather'
    POWER = 'power'
    DISJOINT_UNION = 'union'
    BIREGULAR_SUBDIVISION = 'subdiv'
    PRODUCT_WITH_TREE = 'product'

    @property
    def is_transform(self):
        return self in TRANSFORMS


TRANSFORMS = {Family.POWER, Family.DISJOINT_UNION, Family.BIREGULAR_SUBDIVISION, Family.PRODUCT_WITH_TREE}

# allowed parameter names per family
FAMILY_PARAMS = {
    Family.GRID: {'d'},
    Family.TREE: {'d'},
    Family.LAMPLIGHTER: set(),
    Family.BS: {'m'},
    Family.GRANDFATHER: set(),
    Family.POWER: {'r'},
    Family.DISJOINT_UNION: set(),
    Family.BIREGULAR_SUBDIVISION: set(),
    Family.PRODUCT_WITH_TREE: {'d'},
}


@dataclass(frozen=True)
class GraphSpec:
    family: Family
    params: Tuple[Tuple[str, int], ...] = ()
    operands: Tuple['GraphSpec', ...] = ()

    def param(self, name):
        return dict(self.params)[name]

    def __str__(self):
        rendered = [f"{k}={v}" for k, v in self.params]
        if self.family.is_transform:
            items = [str(op) for op in self.operands] + rendered
            return f"{self.family.value}({','.join(items)})"
        if not rendered:
            return self.family.value
        return f"{self.family.value}:{','.join(rendered)}"


def make_spec(family, operands=(), **params):
    spec = GraphSpec(Family(family), tuple(sorted(params.items())), tuple(operands))
    validate_spec(spec)
    return spec


def validate_spec(spec):
    """Per-family parameter and arity constraints (raises InvalidSpecError)"""
    fam = spec.family
    params = dict(spec.params)
    unknown = set(params) - FAMILY_PARAMS[fam]
    if unknown:
        raise InvalidSpecError(f"{fam.value} does not take parameter(s) {sorted(unknown)}")
    missing = FAMILY_PARAMS[fam] - set(params)
    if missing:
        raise InvalidSpecError(f"{fam.value} requires parameter(s) {sorted(missing)}")

    if fam == Family.GRID and params['d'] < 1:
        raise InvalidSpecError("grid needs d >= 1")
    if fam == Family.TREE and not 2 <= params['d'] <= len(TREE_ALPHABET):
        raise InvalidSpecError(f"tree needs 2 <= d <= {len(TREE_ALPHABET)}")
    if fam == Family.BS and params['m'] < 2:
        raise InvalidSpecError("bs needs m >= 2")
    if fam == Family.POWER and params['r'] < 1:
        raise InvalidSpecError("power needs r >= 1")
    if fam == Family.PRODUCT_WITH_TREE and not 2 <= params['d'] <= len(TREE_ALPHABET):
        raise InvalidSpecError(f"product needs a tree degree 2 <= d <= {len(TREE_ALPHABET)}")

    arity = len(spec.operands)
    if fam == Family.DISJOINT_UNION and arity < 2:
        raise InvalidSpecError(f"union needs at least 2 operands, got {arity}")
    if fam in (Family.POWER, Family.BIREGULAR_SUBDIVISION, Family.PRODUCT_WITH_TREE) and arity != 1:
        raise InvalidSpecError(f"{fam.value} needs exactly 1 operand, got {arity}")
    if not fam.is_transform and arity:
        raise InvalidSpecError(f"{fam.value} takes no operands")
    for op in spec.operands:
        validate_spec(op)


# ============================================================================
# PARSER
# ============================================================================

_TOKEN = re.compile(r'\s*(?:(?P<int>-?\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[:=,()]))')


def _tokenize(text):
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise SpecParseError(f"unexpected character {text[pos]!r} at {pos} in '{text}'")
        if m.group('int') is not None:
            tokens.append(('int', int(m.group('int'))))
        elif m.group('name') is not None:
            tokens.append(('name', m.group('name')))
        else:
            tokens.append(('punct', m.group('punct')))
        pos = m.end()
    return tokens


class _SpecParser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self, offset=0):
        i = self.pos + offset
        return self.tokens[i] if i < len(self.tokens) else (None, None)

    def take(self, kind, value=None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            raise SpecParseError(f"expected {want!r} in '{self.text}', found {tok[1]!r}")
        self.pos += 1
        return tok[1]

    def at_param(self):
        return self.peek()[0] == 'name' and self.peek(1) == ('punct', '=')

    def param(self):
        key = self.take('name')
        self.take('punct', '=')
        return key, self.take('int')

    def spec(self):
        name = self.take('name')
        try:
            family = Family(name)
        except ValueError:
            raise SpecParseError(f"unknown graph family '{name}' in '{self.text}'")

        params = {}
        operands = []
        if family.is_transform:
            self.take('punct', '(')
            while True:
                if self.at_param():
                    key, value = self.param()
                    if key in params:
                        raise SpecParseError(f"duplicate parameter '{key}' in '{self.text}'")
                    params[key] = value
                else:
                    operands.append(self.spec())
                if self.peek() == ('punct', ','):
                    self.pos += 1
                    continue
                self.take('punct', ')')
                break
        elif self.peek() == ('punct', ':'):
            self.pos += 1
            key, value = self.param()
            params[key] = value
            while (self.peek() == ('punct', ',') and self.peek(1)[0] == 'name'
                   and self.peek(2) == ('punct', '=')
                   and self.peek(1)[1] in FAMILY_PARAMS[family]
                   and self.peek(1)[1] not in params):
                self.pos += 1
                key, value = self.param()
                params[key] = value

        return GraphSpec(family, tuple(sorted(params.items())), tuple(operands))


def parse_spec(text) -> GraphSpec:
    """
    Parse a spec string

    Raises:
        SpecParseError: malformed text or unknown family
        InvalidSpecError: well-formed but violating family constraints
    """
    if isinstance(text, GraphSpec):
        return text
    parser = _SpecParser(text)
    spec = parser.spec()
    if parser.pos != len(parser.tokens):
        raise SpecParseError(f"trailing input after '{spec}' in '{text}'")
    validate_spec(spec)
    return spec


# ============================================================================
# BASE FAMILIES
# ============================================================================

def _split_top(text, sep=','):
    """Split on separators not nested inside brackets"""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch in '([':
            depth += 1
        elif ch in ')]':
            depth -= 1
        elif ch == sep and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return parts


def _format_fraction(x):
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _parse_fraction(text):
    if not re.fullmatch(r'-?\d+(/\d+)?', text):
        raise ValueError(f"not a rational: {text!r}")
    return Fraction(text)


class GridOracle(CayleyOracle):
    """ℤ^d with the standard generators ±e_i"""

    def __init__(self, d):
        super().__init__(num_orbits=1, degree_bound=2 * d)
        self.d = d

    def parse(self, v):
        if not (v.startswith('(') and v.endswith(')')):
            raise ValueError("grid vertices look like (x1,...,xd)")
        parts = v[1:-1].split(',')
        if len(parts) != self.d:
            raise ValueError(f"expected {self.d} coordinates")
        return tuple(int(p) for p in parts)

    def format(self, coords):
        return '(' + ','.join(str(c) for c in coords) + ')'

    def _raw_neighbors(self, v):
        x = self.parse(v)
        out = []
        for i in range(self.d):
            for step in (-1, 1):
                y = list(x)
                y[i] += step
                out.append(self.format(y))
        return out

    @property
    def identity(self):
        return self.format((0,) * self.d)

    @property
    def generators(self):
        return self.neighbors(self.identity)

    def multiply(self, g, h):
        return self.format(tuple(a + b for a, b in zip(self.parse(g), self.parse(h))))

    def box(self, k):
        """Side-k box [0, k)^d containing the origin"""
        cells = [()]
        for _ in range(self.d):
            cells = [c + (i,) for c in cells for i in range(k)]
        return [self.format(c) for c in cells]


class TreeOracle(CayleyOracle):
    """d-regular tree as the Cayley graph of the free product of d copies of ℤ/2"""

    def __init__(self, d):
        super().__init__(num_orbits=1, degree_bound=d)
        self.d = d
        self.letters = TREE_ALPHABET[:d]

    def parse(self, v):
        if v == TREE_IDENTITY:
            return ''
        if not v or any(ch not in self.letters for ch in v):
            raise ValueError(f"letters must come from '{self.letters}'")
        if any(a == b for a, b in zip(v, v[1:])):
            raise ValueError("word is not reduced")
        return v

    def format(self, word):
        return word or TREE_IDENTITY

    def _raw_neighbors(self, v):
        word = self.parse(v)
        return [self.format(self._reduce_append(word, a)) for a in self.letters]

    @staticmethod
    def _reduce_append(word, a):
        return word[:-1] if word and word[-1] == a else word + a

    @property
    def identity(self):
        return TREE_IDENTITY

    @property
    def generators(self):
        return tuple(self.letters)

    def multiply(self, g, h):
        word = self.parse(g)
        for a in self.parse(h):
            word = self._reduce_append(word, a)
        return self.format(word)


class LamplighterOracle(CayleyOracle):
    """ℤ/2 ≀ ℤ with generators {flip lamp, step left, step right}"""

    def __init__(self):
        super().__init__(num_orbits=1, degree_bound=3)

    def parse(self, v):
        lamps, sep, pos = v.rpartition('@')
        if not sep or not (lamps.startswith('[') and lamps.endswith(']')):
            raise ValueError("lamplighter vertices look like [l1,...]@p")
        body = lamps[1:-1]
        lit = tuple(int(x) for x in body.split(',')) if body else ()
        if any(a >= b for a, b in zip(lit, lit[1:])):
            raise ValueError("lamp positions must be strictly increasing")
        return frozenset(lit), int(pos)

    def format(self, coords):
        lit, pos = coords
        return '[' + ','.join(str(x) for x in sorted(lit)) + f']@{pos}'

    def _raw_neighbors(self, v):
        lit, pos = self.parse(v)
        return [
            self.format((lit ^ {pos}, pos)),
            self.format((lit, pos - 1)),
            self.format((lit, pos + 1)),
        ]

    @property
    def identity(self):
        return '[]@0'

    @property
    def generators(self):
        return ('[0]@0', '[]@-1', '[]@1')

    def multiply(self, g, h):
        f, p = self.parse(g)
        k, q = self.parse(h)
        return self.format((f ^ frozenset(x + p for x in k), p + q))


class BaumslagSolitarOracle(CayleyOracle):
    """BS(1, m) = ℤ[1/m] ⋊ ℤ, (x, k)(y, l) = (x + m^k y, k + l), generators a = (1, 0), t = (0, 1)"""

    def __init__(self, m):
        super().__init__(num_orbits=1, degree_bound=4)
        self.m = m

    def _check_m_adic(self, x):
        q = x.denominator
        while q > 1:
            g = _gcd(q, self.m)
            if g == 1:
                raise ValueError(f"{x} is not in ℤ[1/{self.m}]")
            q //= g
        return x

    def parse(self, v):
        if not (v.startswith('(') and v.endswith(')')):
            raise ValueError("bs vertices look like (x,k)")
        parts = _split_top(v[1:-1])
        if len(parts) != 2:
            raise ValueError("expected (x,k)")
        return self._check_m_adic(_parse_fraction(parts[0])), int(parts[1])

    def format(self, coords):
        x, k = coords
        return f"({_format_fraction(Fraction(x))},{k})"

    def _raw_neighbors(self, v):
        x, k = self.parse(v)
        step = Fraction(self.m) ** k
        return [
            self.format((x - step, k)),
            self.format((x + step, k)),
            self.format((x, k - 1)),
            self.format((x, k + 1)),
        ]

    @property
    def identity(self):
        return '(0,0)'

    @property
    def generators(self):
        return ('(-1,0)', '(1,0)', '(0,-1)', '(0,1)')

    def multiply(self, g, h):
        x, k = self.parse(g)
        y, l = self.parse(h)
        return self.format((x + Fraction(self.m) ** k * y, k + l))


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


class GrandfatherOracle(GraphOracle):
    """
    3-regular tree with a fixed end, plus an edge from every vertex to its grandparent

    Vertex (k, c): level k ∈ ℤ, c a dyadic rational in [0, 2^k). The parent is
    (k-1, c mod 2^(k-1)); the children are (k+1, c) and (k+1, c + 2^k). The end
    sits at k → -∞, and edge kinds up1/down1/up2/down2 record it.
    """

    oriented = True

    def __init__(self):
        super().__init__(num_orbits=1, degree_bound=8)

    def parse(self, v):
        if not (v.startswith('(') and v.endswith(')')):
            raise ValueError("grandfather vertices look like (k,c)")
        parts = v[1:-1].split(',')
        if len(parts) != 2:
            raise ValueError("expected (k,c)")
        k = int(parts[0])
        c = _parse_fraction(parts[1])
        q = c.denominator
        if q & (q - 1):
            raise ValueError(f"{c} is not dyadic")
        if not 0 <= c < Fraction(2) ** k:
            raise ValueError(f"address {c} outside [0, 2^{k})")
        return k, c

    def format(self, coords):
        k, c = coords
        return f"({k},{_format_fraction(Fraction(c))})"

    @staticmethod
    def _parent(k, c):
        return k - 1, c % (Fraction(2) ** (k - 1))

    @staticmethod
    def _children(k, c):
        return [(k + 1, c), (k + 1, c + Fraction(2) ** k)]

    def _relatives(self, v):
        k, c = self.parse(v)
        parent = self._parent(k, c)
        children = self._children(k, c)
        return {
            'up1': [parent],
            'up2': [self._parent(*parent)],
            'down1': children,
            'down2': [g for ch in children for g in self._children(*ch)],
        }

    def _raw_neighbors(self, v):
        return [self.format(w) for group in self._relatives(v).values() for w in group]

    def edge_kind(self, u, v):
        for kind, group in self._relatives(u).items():
            if v in (self.format(w) for w in group):
                return kind
        return ''

    def parent(self, v):
        return self.format(self._parent(*self.parse(v)))

    def children(self, v):
        return [self.format(w) for w in self._children(*self.parse(v))]

    @property
    def orbit_representatives(self):
        return ('(0,0)',)


# ============================================================================
# TRANSFORMS
# ============================================================================

class PowerOracle(GraphOracle):
    """Same vertices, u ~ v iff 1 <= d_base(u, v) <= r"""

    def __init__(self, base, r, cap=None):
        bound = None
        if base.degree_bound is not None:
            D = base.degree_bound
            bound = sum(D * (D - 1) ** (i - 1) for i in range(1, r + 1))
        super().__init__(num_orbits=base.num_orbits, degree_bound=bound)
        self.base = base
        self.r = r
        self.cap = cap

    def parse(self, v):
        return self.base.parse(v)

    def format(self, coords):
        return self.base.format(coords)

    def _raw_neighbors(self, v):
        cap = config.get_vertex_cap() if self.cap is None else self.cap
        seen = {v}
        frontier = [v]
        for _ in range(self.r):
            nxt = []
            for x in frontier:
                for w in self.base.neighbors(x):
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            if len(seen) > cap:
                raise ResourceError(f"radius-{self.r} ball around {v} exceeds the vertex cap {cap:,}")
            frontier = nxt
        seen.discard(v)
        return seen

    def orbit_label(self, v):
        return self.base.orbit_label(v)

    @property
    def orbit_representatives(self):
        return self.base.orbit_representatives


class DisjointUnionOracle(GraphOracle):
    """Operand-tagged vertices, no cross edges, orbit labels offset per operand"""

    def __init__(self, operands):
        bounds = [op.degree_bound for op in operands]
        super().__init__(
            num_orbits=sum(op.num_orbits for op in operands),
            degree_bound=None if None in bounds else max(bounds),
        )
        self.operands = list(operands)
        self.offsets = []
        total = 0
        for op in self.operands:
            self.offsets.append(total)
            total += op.num_orbits
        self.oriented = any(op.oriented for op in self.operands)

    def parse(self, v):
        tag, sep, inner = v.partition('|')
        if not sep or not tag.isdigit() or str(int(tag)) != tag:
            raise ValueError("union vertices look like <index>|<vertex>")
        i = int(tag)
        if i >= len(self.operands):
            raise ValueError(f"operand index {i} out of range")
        self.operands[i].validate(inner)
        return i, inner

    def format(self, coords):
        i, inner = coords
        return f"{i}|{inner}"

    def _raw_neighbors(self, v):
        i, inner = self.parse(v)
        return [self.format((i, w)) for w in self.operands[i].neighbors(inner)]

    def orbit_label(self, v):
        i, inner = self.parse(v)
        return self.offsets[i] + self.operands[i].orbit_label(inner)

    @property
    def orbit_representatives(self):
        return tuple(self.format((i, rep)) for i, op in enumerate(self.operands)
                     for rep in op.orbit_representatives)

    def edge_kind(self, u, v):
        i, a = self.parse(u)
        j, b = self.parse(v)
        return self.operands[i].edge_kind(a, b) if i == j else ''

    def component(self, v):
        return self.parse(v)[0]


class SubdivisionOracle(GraphOracle):
    """Every edge replaced by a path of length 2 through a midpoint; orbits: originals 0, midpoints 1"""

    def __init__(self, base):
        if not base.is_transitive:
            raise InvalidSpecError("subdiv needs a transitive operand")
        bound = None if base.degree_bound is None else max(base.degree_bound, 2)
        super().__init__(num_orbits=2, degree_bound=bound)
        self.base = base

    @staticmethod
    def original(v):
        return 'o' + v

    @staticmethod
    def midpoint(u, v):
        a, b = sorted((u, v))
        return 'm' + json.dumps([a, b], separators=(',', ':'))

    def parse(self, v):
        if v.startswith('o'):
            inner = v[1:]
            self.base.validate(inner)
            return ('o', inner)
        if v.startswith('m'):
            pair = json.loads(v[1:])
            if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(x, str) for x in pair)):
                raise ValueError("midpoints look like m[\"u\",\"v\"]")
            a, b = pair
            if not a < b:
                raise ValueError("midpoint endpoints must be sorted")
            if b not in self.base.neighbors(a):
                raise ValueError(f"{a} and {b} are not adjacent")
            return ('m', a, b)
        raise ValueError("subdivision vertices start with 'o' or 'm'")

    def format(self, coords):
        if coords[0] == 'o':
            return self.original(coords[1])
        return self.midpoint(coords[1], coords[2])

    def _raw_neighbors(self, v):
        coords = self.parse(v)
        if coords[0] == 'o':
            return [self.midpoint(coords[1], w) for w in self.base.neighbors(coords[1])]
        return [self.original(coords[1]), self.original(coords[2])]

    def orbit_label(self, v):
        return 0 if v.startswith('o') else 1

    @property
    def orbit_representatives(self):
        rep = self.base.orbit_representatives[0]
        return (self.original(rep), self.midpoint(rep, self.base.neighbors(rep)[0]))


class ProductWithTreeOracle(GraphOracle):
    """Cartesian product Γ □ T_d; encodings '<vertex>&<tree word>'"""

    def __init__(self, base, d):
        self.tree = TreeOracle(d)
        bound = None if base.degree_bound is None else base.degree_bound + d
        super().__init__(num_orbits=base.num_orbits, degree_bound=bound)
        self.base = base
        self.oriented = base.oriented

    def parse(self, v):
        inner, sep, word = v.rpartition('&')
        if not sep:
            raise ValueError("product vertices look like <vertex>&<tree word>")
        self.base.validate(inner)
        self.tree.validate(word)
        return inner, word

    def format(self, coords):
        return f"{coords[0]}&{coords[1]}"

    def _raw_neighbors(self, v):
        inner, word = self.parse(v)
        out = [self.format((w, word)) for w in self.base.neighbors(inner)]
        out += [self.format((inner, t)) for t in self.tree.neighbors(word)]
        return out

    def orbit_label(self, v):
        return self.base.orbit_label(self.parse(v)[0])

    @property
    def orbit_representatives(self):
        return tuple(self.format((rep, TREE_IDENTITY)) for rep in self.base.orbit_representatives)

    def edge_kind(self, u, v):
        a, s = self.parse(u)
        b, t = self.parse(v)
        return self.base.edge_kind(a, b) if s == t else 'tree'


# ============================================================================
# CONSTRUCTION
# ============================================================================

def make_oracle(spec) -> GraphOracle:
    """
    Build the oracle for a spec (GraphSpec or spec string)

    Raises:
        SpecParseError / InvalidSpecError with a human-readable reason
    """
    spec = parse_spec(spec)
    fam = spec.family
    params = dict(spec.params)

    if fam == Family.GRID:
        oracle = GridOracle(params['d'])
    elif fam == Family.TREE:
        oracle = TreeOracle(params['d'])
    elif fam == Family.LAMPLIGHTER:
        oracle = LamplighterOracle()
    elif fam == Family.BS:
        oracle = BaumslagSolitarOracle(params['m'])
    elif fam == Family.GRANDFATHER:
        oracle = GrandfatherOracle()
    elif fam == Family.POWER:
        base = make_oracle(spec.operands[0])
        if base.degree_bound is None:
            raise InvalidSpecError("power needs an operand with a degree bound")
        oracle = PowerOracle(base, params['r'])
    elif fam == Family.DISJOINT_UNION:
        oracle = DisjointUnionOracle([make_oracle(op) for op in spec.operands])
    elif fam == Family.BIREGULAR_SUBDIVISION:
        oracle = SubdivisionOracle(make_oracle(spec.operands[0]))
    else:
        oracle = ProductWithTreeOracle(make_oracle(spec.operands[0]), params['d'])

    oracle.spec = str(spec)
    logger.debug(f"Built oracle {oracle.spec} ({oracle.num_orbits} orbit(s), degree bound {oracle.degree_bound})")
    return oracle


@lru_cache(maxsize=64)
def oracle_for(spec_string) -> GraphOracle:
    """Shared oracle per canonical spec string"""
    return make_oracle(spec_string)


def power_graph(spec, r) -> GraphOracle:
    return make_oracle(make_spec('power', [parse_spec(spec)], r=r))


def disjoint_union(specs) -> GraphOracle:
    return make_oracle(make_spec('union', [parse_spec(s) for s in specs]))


def subdivision(spec) -> GraphOracle:
    return make_oracle(make_spec('subdiv', [parse_spec(spec)]))


def product_with_tree(spec, d) -> GraphOracle:
    return make_oracle(make_spec('product', [parse_spec(spec)], d=d))


DEFAULT_CATALOG = (
    'grid:d=1',
    'grid:d=2',
    'grid:d=3',
    'tree:d=2',
    'tree:d=3',
    'tree:d=4',
    'lamplighter',
    'bs:m=2',
    'grandfather',
    'subdiv(tree:d=3)',
    'power(tree:d=3,r=2)',
    'union(tree:d=3,grid:d=2)',
    'product(grid:d=1,d=3)',
)


def catalog():
    """Summary of the default catalog entries"""
    entries = []
    for text in DEFAULT_CATALOG:
        oracle = make_oracle(text)
        entries.append({
            'spec': oracle.spec,
            'orbits': oracle.num_orbits,
            'degree_bound': oracle.degree_bound,
            'cayley': isinstance(oracle, CayleyOracle),
            'oriented': bool(oracle.oriented),
            'representatives': list(oracle.orbit_representatives),
        })
    return entries
