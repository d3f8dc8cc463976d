"""
Verifier - deterministic property suites over every ladder algebra identity

Each suite plans a list of picklable tasks and checks them one at a time,
so work can be spread over processes without changing the report.
"""
import json
import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple

from classical_embed import (
    E, chevalley_e, chevalley_f, coroot, cartan_pairing, embed_injective, embed_phi,
    gl_bracket, sl_generators, is_sl
)
from errors import AlgebraError, ConsistencyError
from expr_parser import eval_text, format_element, round_trips
from heisenberg_virasoro import (
    CENTRAL, FockConfig, FockVector, Side, a_minus, a_minus_element, a_minus_inv, a_plus, a_plus_element,
    a_plus_inv, abelian_bracket, central, cocycle, cocycle_element, d_element, fock_apply, fock_basis, heis,
    heis_bracket, HeisLabel, residual_report, vacuum, virasoro_L
)
from hopf_ladder import (
    Character, D1, D2, D3, HopfElement, antipode, char_convolve, coproduct, coproduct_left, coproduct_right,
    counit, gamma, grading_Y, monomial, monomials, s_star_y, s_star_y_direct, unit, UNIT
)
from lambda_module import diagram_check, lambda_act, lambda_commute, lambda_product, phi_inv, phi_iso
from lie_core import (
    GenIndex, LieElement, Part, Z, bracket, bracket_basis, degree, elimination_commutator_residual,
    generators, involution_C, is_homogeneous, ladder_identity_residual, subalgebra_closed,
    zero_part_offenders
)
from modules_rep import act, generator_matrix_closed_form, highest_weight_violations, matrix, star, t
from scalars import Scalar, ONE, ZERO
from utils import Timer, derive_seed, env_int

logger = logging.getLogger(__name__)

Task = Any
Failure = Dict[str, Any]
CheckResult = Tuple[int, List[Failure]]

MATRIX_SIZE = 20
VIRASORO_POINTS = [
    (Fraction(0), Fraction(0)),
    (Fraction(1), Fraction(0)),
    (Fraction(0), Fraction(1)),
    (Fraction(1, 2), Fraction(1, 3)),
    (Fraction(2), Fraction(3, 2)),
]

ROUND_TRIP_CORPUS = [
    "Z[1,0]",
    "Z[0,0]",
    "[Z[1,0],Z[0,1]]",
    "2*Z[1,1] - 1/3*Z[0,2]",
    "h[0]",
    "[e[0],f[0]] - h[0]",
    "e[3]",
    "f[2]",
    "[h[1],e[2]]",
    "[e[1],e[2]]",
    "[Z[2,1],Z[1,2]]",
    "[Z[3,0],Z[0,3]] + Z[0,0]",
    "[Z[1,0],Z[0,4]] + Z[0,3]",
    "-Z[5,2]",
    "i*Z[1,1]",
    "1/2i*Z[0,1] + 3*Z[1,0]",
    "3/4*(Z[1,0] - Z[0,1])",
    "[[Z[1,0],Z[0,1]],Z[2,0]]",
    "E[0,1]",
    "[E[0,1],E[1,0]]",
    "E[2,2] - E[3,3]",
    "phi(E[0,1])",
    "phi([E[0,1],E[1,2]])",
    "[phi(E[0,1]),phi(E[1,2])]",
    "phi(E[1,1] - E[2,2]) - h[1]",
    "0",
    "Z[1,2] - Z[1,2]",
    "0 + Z[4,4]",
    "[Z[2,2],Z[3,1]]",
    "5*[Z[1,3],Z[2,0]]",
    "-2/7*Z[6,6] + 2/7*Z[6,6]",
    "[Z[0,2],[Z[1,0],Z[3,3]]]",
    "Z[10,12] + 7*Z[12,10]",
    "2i*h[2]",
    "[f[1],f[0]]",
    "[e[0],[e[0],f[1]]]",
    "E[0,0] + E[1,1] + E[2,2]",
    "[E[1,2],E[2,1]] - E[1,1] + E[2,2]",
    "phi(E[3,0])",
    "1/3*(Z[1,0] + Z[0,1]) - 1/3*Z[1,0]",
    "[Z[1,0],Z[0,1]] + [Z[0,1],Z[1,0]]",
    "[Z[4,0],Z[0,2]]",
    "[Z[0,3],Z[2,0]]",
    "+Z[2,3]",
    "12*Z[0,0] - 1/2i*Z[3,3]",
    "[h[0],h[1]]",
    "[Z[2,0],Z[3,0]]",
    "[Z[0,2],Z[0,5]]",
    "(Z[1,1])",
    "[2*Z[2,1] + Z[0,0], -Z[1,2] + 3/2*Z[5,5]]",
]


@dataclass(frozen=True)
class SuiteContext:
    """Parameters shared by every task of one suite run"""
    suite: str
    seed: int
    trials: int
    max_index: int
    max_degree: Optional[int] = None


@dataclass
class SuiteReport:
    suite: str
    seed: int
    trials: int
    max_index: Optional[int]
    max_degree: Optional[int]
    checks: int
    failures: List[Failure] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        return {
            'suite': self.suite,
            'seed': self.seed,
            'trials': self.trials,
            'max_index': self.max_index,
            'max_degree': self.max_degree,
            'checks': self.checks,
            'pass': self.passed,
            'failures': self.failures,
            'elapsed_ms': self.elapsed_ms,
        }

    def summary(self) -> str:
        status = 'PASS' if self.passed else 'FAIL'
        return (f"{self.suite:<16} {status}  checks={self.checks}  failures={len(self.failures)}  "
                f"elapsed={self.elapsed_ms}ms")


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    plan: Callable[[SuiteContext], List[Task]]
    check: Callable[[SuiteContext, Task], CheckResult]
    default_max_index: Optional[int]
    default_max_degree: Optional[int] = None


def _failure(identity: str, inputs: Dict[str, Any], left, right) -> Failure:
    """Counterexample record with both sides of the violated identity"""
    return {'identity': identity, 'inputs': inputs, 'left': str(left), 'right': str(right)}


def _gen(g: GenIndex) -> LieElement:
    return LieElement({g: ONE})


# -- lie_core suites ---------------------------------------------------------------

def _plan_identity(ctx: SuiteContext) -> List[Task]:
    return [('ladder', k) for k in range(1, ctx.max_index + 1)] + \
           [('elimination', n) for n in range(ctx.max_index + 1)]


def _check_identity(ctx: SuiteContext, task: Task) -> CheckResult:
    kind, k = task
    if kind == 'ladder':
        residual = ladder_identity_residual(k)
        name = '[Z(k,0),Z(0,k)] + Z(0,0) = Z(k,k)'
    else:
        residual = elimination_commutator_residual(k)
        name = '[Z(1,0),Z(0,n+1)] + Z(0,n) = Z(1,n+1)'
    if residual:
        return 1, [_failure(name, {'k': k}, residual, '0')]
    return 1, []


def _plan_generators(ctx: SuiteContext) -> List[Task]:
    return [(g.n, g.m) for g in generators(ctx.max_index)]


def _check_antisymmetry(ctx: SuiteContext, task: Task) -> CheckResult:
    a = GenIndex(*task)
    failures = []
    checks = 0
    for b in generators(ctx.max_index):
        left = bracket_basis(a, b)
        right = -bracket_basis(b, a)
        checks += 1
        if left != right:
            failures.append(_failure('[a,b] = -[b,a]', {'a': str(a), 'b': str(b)}, left, right))
    return checks, failures


def _random_element(rng: random.Random, bound: int) -> LieElement:
    terms = {}
    for _ in range(rng.randint(1, 3)):
        coeff = rng.choice([-3, -2, -1, 1, 2, 3])
        terms[GenIndex(rng.randint(0, bound), rng.randint(0, bound))] = Scalar(coeff)
    return LieElement(terms)


def _plan_trials(ctx: SuiteContext) -> List[Task]:
    return list(range(ctx.trials))


def _check_jacobi(ctx: SuiteContext, trial: Task) -> CheckResult:
    rng = random.Random(derive_seed(ctx.seed, ctx.suite, trial))
    x, y, z = (_random_element(rng, ctx.max_index) for _ in range(3))
    total = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
    if total:
        return 1, [_failure('[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0',
                            {'trial': trial, 'x': str(x), 'y': str(y), 'z': str(z)}, total, '0')]
    return 1, []


def _plan_grading(ctx: SuiteContext) -> List[Task]:
    return _plan_generators(ctx) + [('closed', part.value) for part in Part] + [('zero-part',)]


def _check_grading(ctx: SuiteContext, task: Task) -> CheckResult:
    if task == ('zero-part',):
        failures = [_failure('[L0,L0] = 0 and [L+-,L0] in L+-', {'a': str(a), 'h': str(h)},
                             bracket_basis(a, h), 'same part as a') for a, h in zero_part_offenders(ctx.max_index)]
        return 1, failures
    if task[0] == 'closed':
        offenders = subalgebra_closed(Part(task[1]), ctx.max_index)
        failures = [_failure(f'{task[1]} part closed under the bracket', {'a': str(a), 'b': str(b)},
                             bracket_basis(a, b), 'same part') for a, b in offenders]
        return 1, failures
    a = GenIndex(*task)
    failures = []
    checks = 0
    for b in generators(ctx.max_index):
        result = bracket_basis(a, b)
        checks += 1
        if result and (not is_homogeneous(result) or degree(result) != a.degree + b.degree):
            failures.append(_failure('deg [a,b] = deg a + deg b', {'a': str(a), 'b': str(b)},
                                     result, f'degree {a.degree + b.degree}'))
    return checks, failures


# -- modules_rep suites --------------------------------------------------------------

def _plan_module(ctx: SuiteContext) -> List[Task]:
    return _plan_generators(ctx) + [('highest-weight',)]


def _check_module(ctx: SuiteContext, task: Task) -> CheckResult:
    if task == ('highest-weight',):
        bound = 2 * ctx.max_index
        problems = highest_weight_violations(bound)
        return 1, [_failure('t[0] is the only singular vector', {'bound': bound}, p, 'none') for p in problems]
    a = GenIndex(*task)
    x = _gen(a)
    failures = []
    checks = 0
    images = {k: act(x, t(k)) for k in range(2 * ctx.max_index + 1)}
    for b in generators(ctx.max_index):
        y = _gen(b)
        xy = bracket_basis(a, b)
        for k in range(2 * ctx.max_index + 1):
            vk = t(k)
            left = act(xy, vk)
            right = act(x, act(y, vk)) - act(y, images[k])
            checks += 1
            if left != right:
                failures.append(_failure('[x,y] t = x(y t) - y(x t)',
                                         {'x': str(a), 'y': str(b), 'k': k}, left, right))
    return checks, failures


def _check_matrix(ctx: SuiteContext, task: Task) -> CheckResult:
    a = GenIndex(*task)
    failures = []
    checks = 1
    mat = matrix(_gen(a), MATRIX_SIZE)
    expected = sorted(generator_matrix_closed_form(a, MATRIX_SIZE))
    if mat.nonzero_positions() != expected or any(mat.entry(r, c) != ONE for r, c in expected):
        failures.append(_failure('matrix entries follow the closed form', {'g': str(a)},
                                 mat.nonzero_positions(), expected))
    interior = MATRIX_SIZE + 1 - ctx.max_index
    for b in generators(ctx.max_index):
        checks += 1
        left = mat.commutator(matrix(_gen(b), MATRIX_SIZE)).block(interior)
        right = matrix(bracket_basis(a, b), MATRIX_SIZE).block(interior)
        if left != right:
            failures.append(_failure('truncated commutator = matrix of bracket',
                                     {'a': str(a), 'b': str(b), 'block': interior},
                                     left.to_json(), right.to_json()))
    return checks, failures


# -- classical_embed suites --------------------------------------------------------

def _plan_units(ctx: SuiteContext) -> List[Task]:
    bound = ctx.max_index
    return [(i, j) for i in range(bound + 1) for j in range(bound + 1)] + [('injective',), ('sl',)]


def _check_embedding(ctx: SuiteContext, task: Task) -> CheckResult:
    small = min(ctx.max_index, 4)
    if task == ('injective',):
        if embed_injective(small):
            return 1, []
        return 1, [_failure('phi injective on bounded units', {'bound': small}, 'dependent', 'independent')]
    if task == ('sl',):
        failures = []
        family = sl_generators(small)
        for x in family:
            image = embed_phi(x)
            if not is_sl(x) or not is_homogeneous(image):
                failures.append(_failure('sl generator maps to a homogeneous element', {'x': str(x)},
                                         image, 'homogeneous'))
        return len(family), failures
    x = E(*task)
    image_x = embed_phi(x)
    failures = []
    checks = 0
    for i in range(ctx.max_index + 1):
        for j in range(ctx.max_index + 1):
            y = E(i, j)
            left = embed_phi(gl_bracket(x, y))
            right = bracket(image_x, embed_phi(y))
            checks += 1
            if left != right:
                failures.append(_failure('phi([x,y]) = [phi(x),phi(y)]', {'x': str(x), 'y': str(y)}, left, right))
    return checks, failures


def cartan_entry(i: int, j: int) -> int:
    """A_infinity Cartan matrix"""
    if i == j:
        return 2
    return -1 if abs(i - j) == 1 else 0


def _plan_nodes(ctx: SuiteContext) -> List[Task]:
    return list(range(ctx.max_index + 1))


def _check_chevalley(ctx: SuiteContext, i: Task) -> CheckResult:
    failures = []
    checks = 0
    for j in range(ctx.max_index + 1):
        a = cartan_entry(i, j)
        inputs = {'i': i, 'j': j}
        left = bracket(chevalley_e(i), chevalley_f(j))
        right = coroot(i) if i == j else LieElement()
        checks += 1
        if left != right:
            failures.append(_failure('[e_i,f_j] = delta_ij h_i', inputs, left, right))
        checks += 1
        try:
            pairing = cartan_pairing(i, j)
        except ConsistencyError as e:
            failures.append(_failure('[h_i,e_j] = A_ij e_j', inputs, e.left, e.right))
        else:
            if pairing != a:
                failures.append(_failure('[h_i,e_j] = A_ij e_j', inputs, pairing, a))
        left = bracket(coroot(i), chevalley_f(j))
        right = chevalley_f(j).scale(-a)
        checks += 1
        if left != right:
            failures.append(_failure('[h_i,f_j] = -A_ij f_j', inputs, left, right))
    return checks, failures


def _plan_involution(ctx: SuiteContext) -> List[Task]:
    return _plan_generators(ctx) + [('node', i) for i in range(ctx.max_index + 1)]


def _check_involution(ctx: SuiteContext, task: Task) -> CheckResult:
    if task[0] == 'node':
        i = task[1]
        pairs = [
            ('C(f_i) = -e_i', involution_C(chevalley_f(i)), -chevalley_e(i)),
            ('C(e_i) = -f_i', involution_C(chevalley_e(i)), -chevalley_f(i)),
            ('C(h_i) = -h_i', involution_C(coroot(i)), -coroot(i)),
        ]
        return len(pairs), [_failure(name, {'i': i}, left, right) for name, left, right in pairs if left != right]
    a = GenIndex(*task)
    x = _gen(a)
    cx = involution_C(x)
    failures = []
    checks = 2
    if involution_C(cx) != x:
        failures.append(_failure('C(C(x)) = x', {'x': str(a)}, involution_C(cx), x))
    if degree(cx) != -a.degree:
        failures.append(_failure('C reverses the grading', {'x': str(a)}, degree(cx), -a.degree))
    for b in generators(ctx.max_index):
        y = _gen(b)
        left = involution_C(bracket_basis(a, b))
        right = bracket(cx, involution_C(y))
        checks += 1
        if left != right:
            failures.append(_failure('C([x,y]) = [C(x),C(y)]', {'x': str(a), 'y': str(b)}, left, right))
    return checks, failures


# -- heisenberg_virasoro suites --------------------------------------------------------

def _plan_heisenberg(ctx: SuiteContext) -> List[Task]:
    bound = ctx.max_index
    return [('cocycle',), ('cocycle-identity',), ('relabel',)] + [('fock', n) for n in range(-bound, bound + 1)]


def _check_heisenberg(ctx: SuiteContext, task: Task) -> CheckResult:
    bound = ctx.max_index
    failures = []
    checks = 0
    if task == ('cocycle',):
        for side in Side:
            for n in range(-bound, bound + 1):
                for m in range(-bound, bound + 1):
                    a, b = HeisLabel(side, n), HeisLabel(side, m)
                    inputs = {'side': side.value, 'n': n, 'm': m}
                    checks += 2
                    if cocycle(a, b) != -cocycle(b, a):
                        failures.append(_failure('c(a,b) = -c(b,a)', inputs, cocycle(a, b), -cocycle(b, a)))
                    left = heis_bracket(heis(side, n), heis(side, m))
                    right = central(n) if n == -m else central(0)
                    if left != right:
                        failures.append(_failure('[Z_n,Z_m] = n delta(n,-m) c', inputs, left, right))
        return checks, failures
    if task == ('relabel',):
        for k in range(2 * bound + 1):
            checks += 3
            plus, minus = a_plus(GenIndex(k, 0)), a_minus(GenIndex(0, k))
            if a_plus_inv(plus) != GenIndex(k, 0):
                failures.append(_failure('a+ inverse', {'k': k}, a_plus_inv(plus), GenIndex(k, 0)))
            if a_minus_inv(minus) != GenIndex(0, k):
                failures.append(_failure('a- inverse', {'k': k}, a_minus_inv(minus), GenIndex(0, k)))
            x = Z(k, 0)
            left = d_element(a_plus_element(x))
            right = -a_minus_element(involution_C(x))
            if left != right:
                failures.append(_failure('d(a+(x)) = -a-(C(x))', {'k': k}, left, right))
            for j in range(2 * bound + 1):
                for relabel, y, w in ((a_plus_element, x, Z(j, 0)), (a_minus_element, Z(0, k), Z(0, j))):
                    checks += 1
                    source = bracket(y, w)
                    image = abelian_bracket(relabel(y), relabel(w))
                    if source or image or relabel(y + w) != relabel(y) + relabel(w):
                        failures.append(_failure('a+- are isomorphisms of abelian algebras',
                                                 {'x': str(y), 'y': str(w)}, source, image))
        return checks, failures
    if task == ('cocycle-identity',):
        for side in Side:
            elements = [heis(side, n) for n in range(-bound, bound + 1)]
            for x in elements:
                for y in elements:
                    for z in elements:
                        checks += 1
                        cyclic = ((x, y, z), (y, z, x), (z, x, y))
                        total = sum((cocycle_element(abelian_bracket(p, q), r) for p, q, r in cyclic), ZERO)
                        if total:
                            failures.append(_failure('c([x,y],z) + cyclic = 0',
                                                     {'x': str(x), 'y': str(y), 'z': str(z)}, total, '0'))
        return checks, failures
    n = task[1]
    cfg = FockConfig(Fraction(1, 2), Fraction(0))
    for deg in range(ctx.max_degree + 1):
        for mono in fock_basis(deg):
            v = FockVector({mono: ONE})
            for m in range(-bound, bound + 1):
                zn, zm = HeisLabel(Side.PLUS, n), HeisLabel(Side.PLUS, m)
                left = fock_apply(cfg, zn, fock_apply(cfg, zm, v)) - fock_apply(cfg, zm, fock_apply(cfg, zn, v))
                right = fock_apply(cfg, CENTRAL, v).scale(n if n == -m else 0)
                checks += 1
                if left != right:
                    failures.append(_failure('[Z_n,Z_m] v = n delta(n,-m) v',
                                             {'n': n, 'm': m, 'monomial': list(mono)}, left, right))
    return checks, failures


def _plan_virasoro(ctx: SuiteContext) -> List[Task]:
    return list(range(len(VIRASORO_POINTS)))


def _check_virasoro(ctx: SuiteContext, point: Task) -> CheckResult:
    mu, lam = VIRASORO_POINTS[point]
    cfg = FockConfig(mu, lam)
    memo: Dict = {}
    bound = ctx.max_index
    failures = []
    checks = 0
    for n in range(-bound, bound + 1):
        for m in range(-bound, bound + 1):
            for record in residual_report(cfg, n, m, ctx.max_degree, memo):
                checks += 1
                if not record['pass']:
                    failures.append(_failure('[L_n,L_m] = (n-m)L_{n+m} + anomaly',
                                             {k: record[k] for k in ('n', 'm', 'mu', 'lambda', 'degree')},
                                             json.dumps(record['residual'], sort_keys=True), '0'))
        for deg in range(ctx.max_degree + 1):
            for mono in fock_basis(deg):
                image = virasoro_L(cfg, n, FockVector({mono: ONE}), memo=memo)
                checks += 1
                if image and (not image.is_homogeneous() or image.max_degree() != deg - n):
                    failures.append(_failure('L_n shifts degree by -n', {'n': n, 'monomial': list(mono),
                                                                          'mu': str(cfg.mu), 'lambda': str(cfg.lam)},
                                             image, f'degree {deg - n}'))
    if bound >= 2:
        checks += 1
        left = virasoro_L(cfg, 2, virasoro_L(cfg, -2, vacuum(), memo=memo), memo=memo) \
            - virasoro_L(cfg, -2, virasoro_L(cfg, 2, vacuum(), memo=memo), memo=memo)
        right = vacuum().scale(cfg.mu * cfg.mu * 2 + cfg.lam * cfg.lam * 8 + Fraction(1, 2))
        if left != right:
            failures.append(_failure('[L_2,L_-2] 1 = (2mu^2 + 8lambda^2 + 1/2) 1',
                                     {'mu': str(cfg.mu), 'lambda': str(cfg.lam)}, left, right))
    logger.debug(f"Virasoro point ({cfg.mu}, {cfg.lam}): {len(memo)} cached monomial images")
    return checks, failures


# -- hopf_ladder suites -------------------------------------------------------------

def _plan_hopf(ctx: SuiteContext) -> List[Task]:
    return [('degree', d) for d in range(ctx.max_index + 1)] + \
           [('generator', m) for m in range(1, ctx.max_index + 1)] + [('unit',)]


def _counit_left(delta) -> HopfElement:
    return delta.filter(lambda k: k[0] == UNIT).map_terms(lambda k: monomial(k[1]), target=HopfElement)


def _counit_right(delta) -> HopfElement:
    return delta.filter(lambda k: k[1] == UNIT).map_terms(lambda k: monomial(k[0]), target=HopfElement)


def _check_hopf(ctx: SuiteContext, task: Task) -> CheckResult:
    failures = []
    checks = 0
    memo: Dict = {}
    if task == ('unit',):
        if D1(0) != unit() or D3(0):
            return 2, [_failure('D1(1) = 1 and D3(1) = 0', {}, f'{D1(0)}, {D3(0)}', '1, 0')]
        return 2, []
    if task[0] == 'generator':
        m = task[1]
        checks += 2
        s = antipode(gamma(m), memo)
        if D3(m) != s:
            failures.append(_failure('D3(G_m) = S(G_m)', {'m': m}, D3(m), s))
        if D2(m) != grading_Y(gamma(m)):
            failures.append(_failure('D2(G_m) = m G_m', {'m': m}, D2(m), grading_Y(gamma(m))))
        checks += 1
        multiplied = coproduct(gamma(m)).multiply()
        if D1(m) != multiplied:
            failures.append(_failure('D1(G_m) = m Delta(G_m)', {'m': m}, D1(m), multiplied))
        known = {
            1: -gamma(1),
            2: -gamma(2) + gamma(1) * gamma(1),
            3: -gamma(3) + (gamma(1) * gamma(2)).scale(2) - gamma(1) * gamma(1) * gamma(1),
        }
        if m in known:
            checks += 1
            if s != known[m]:
                failures.append(_failure('antipode closed form', {'m': m}, s, known[m]))
        return checks, failures
    for mono in monomials(task[1]):
        x = monomial(mono)
        inputs = {'monomial': list(mono)}
        delta = coproduct(x)
        identity = lambda y: y
        scalar_unit = unit().scale(counit(x))
        pairs = [
            ('coassociativity', coproduct_left(delta), coproduct_right(delta)),
            ('cocommutativity', delta.swap(), delta),
            ('(e (x) id) Delta = id', _counit_left(delta), x),
            ('(id (x) e) Delta = id', _counit_right(delta), x),
            ('m (S (x) id) Delta = e', delta.apply(lambda y: antipode(y, memo), identity).multiply(), scalar_unit),
            ('m (id (x) S) Delta = e', delta.apply(identity, lambda y: antipode(y, memo)).multiply(), scalar_unit),
        ]
        for name, left, right in pairs:
            checks += 1
            if left != right:
                failures.append(_failure(name, inputs, left, right))
    return checks, failures


def _check_sy(ctx: SuiteContext, m: Task) -> CheckResult:
    failures = []
    checks = 1
    via_generators = s_star_y(m)
    direct = s_star_y_direct(gamma(m))
    if via_generators != direct:
        failures.append(_failure('S*Y elimination formula = m (S (x) Y) Delta', {'m': m}, via_generators, direct))
    known = {1: gamma(1), 2: gamma(2).scale(2) - gamma(1) * gamma(1)}
    if m in known:
        checks += 1
        if direct != known[m]:
            failures.append(_failure('S*Y closed form', {'m': m}, direct, known[m]))
    rng = random.Random(derive_seed(ctx.seed, ctx.suite, m))
    f = Character({k: Scalar(Fraction(rng.randint(-5, 5), rng.randint(1, 4))) for k in range(1, m + 1)})
    g = Character({k: Scalar(Fraction(rng.randint(-5, 5), rng.randint(1, 4))) for k in range(1, m + 1)})
    checks += 1
    try:
        char_convolve(f, g, gamma(m) * gamma(1))
    except ConsistencyError as e:
        failures.append(_failure('character convolution paths agree', {'m': m}, e.left, e.right))
    return checks, failures


def _plan_sy(ctx: SuiteContext) -> List[Task]:
    return list(range(1, ctx.max_index + 1))


# -- lambda_module suites -------------------------------------------------------------

def _plan_lambda(ctx: SuiteContext) -> List[Task]:
    bound = ctx.max_index
    return [('diagram', side.value, label) for side in Side for label in range(-bound, bound + 1)] + \
           [('commute', n) for n in range(bound + 1)] + \
           [('iso', a) for a in range(2 * bound + 1)]


def _check_lambda(ctx: SuiteContext, task: Task) -> CheckResult:
    failures = []
    checks = 0
    bound = ctx.max_index
    if task[0] == 'diagram':
        label = HeisLabel(Side(task[1]), task[2])
        g = a_plus_inv(label) if label.side is Side.PLUS else a_minus_inv(label)
        for k in range(bound + 1):
            checks += 1
            if not diagram_check(g, k):
                failures.append(_failure('phi(g t_k) = a(g) phi(t_k)', {'g': str(g), 'k': k},
                                         phi_iso(act(_gen(g), t(k))), 'translated action'))
        return checks, failures
    kind, n = task
    if kind == 'commute':
        if n == 0:
            for k in range(bound + 1):
                w = phi_iso(t(k))
                checks += 1
                if lambda_act(Side.MINUS, 0, w) != w:
                    failures.append(_failure('Z_0^- acts as identity', {'k': k}, lambda_act(Side.MINUS, 0, w), w))
        for side in Side:
            for other in range(-bound, bound + 1):
                checks += 1
                w = phi_iso(t(n))
                if not lambda_commute(side, n, other, w) or not lambda_commute(side, -n, other, w):
                    failures.append(_failure('Lambda operators commute', {'side': side.value, 'n': n, 'm': other},
                                             'non-commuting', 'commuting'))
        return checks, failures
    a = n
    for b in range(2 * bound + 1):
        checks += 1
        left = phi_iso(star(t(a), t(b)))
        right = lambda_product(phi_iso(t(a)), phi_iso(t(b)))
        if left != right:
            failures.append(_failure('phi(t_a * t_b) = phi(t_a) . phi(t_b)', {'a': a, 'b': b}, left, right))
    checks += 1
    if phi_inv(phi_iso(t(a))) != t(a):
        failures.append(_failure('phi_inv(phi(t_a)) = t_a', {'a': a}, phi_inv(phi_iso(t(a))), t(a)))
    return checks, failures


# -- cli suite ------------------------------------------------------------------------

def _plan_corpus(ctx: SuiteContext) -> List[Task]:
    return list(range(len(ROUND_TRIP_CORPUS)))


def _check_corpus(ctx: SuiteContext, index: Task) -> CheckResult:
    text = ROUND_TRIP_CORPUS[index]
    try:
        ok = round_trips(text)
    except ValueError as e:
        return 1, [_failure('corpus expression evaluates', {'expr': text}, str(e), 'element')]
    if not ok:
        value = eval_text(text)
        return 1, [_failure('parse(format(eval(parse(s)))) = eval(parse(s))', {'expr': text},
                            eval_text(format_element(value)), value)]
    return 1, []


SUITES: Dict[str, Suite] = {s.name: s for s in [
    Suite('identity', 'Z(k,k) = [Z(k,0),Z(0,k)] + Z(0,0) and the elimination commutator',
          _plan_identity, _check_identity, 20),
    Suite('jacobi', 'Jacobi identity on seeded random triples', _plan_trials, _check_jacobi, 10),
    Suite('antisymmetry', 'Antisymmetry on all generator pairs', _plan_generators, _check_antisymmetry, 12),
    Suite('grading', 'Bracket respects the Z-grading; L+, L0, L- are subalgebras', _plan_grading, _check_grading, 8),
    Suite('module', 'Representation property on the standard module', _plan_module, _check_module, 8),
    Suite('matrix', 'Truncated matrices: closed form and commutators', _plan_generators, _check_matrix, 6),
    Suite('embedding', 'phi is an injective bracket homomorphism', _plan_units, _check_embedding, 8),
    Suite('chevalley', 'Chevalley relations with the A_infinity Cartan matrix', _plan_nodes, _check_chevalley, 10),
    Suite('involution', 'Chevalley involution C', _plan_involution, _check_involution, 10),
    Suite('heisenberg', 'Cocycle, relabellings and Fock commutators', _plan_heisenberg, _check_heisenberg, 6, 8),
    Suite('virasoro', 'Virasoro relations on the Fock module', _plan_virasoro, _check_virasoro, 4, 6),
    Suite('hopf-axioms', 'Hopf algebra axioms and antipode recursions', _plan_hopf, _check_hopf, 12),
    Suite('sy-equivalence', 'S*Y via elimination equals the direct convolution', _plan_sy, _check_sy, 12),
    Suite('lambda-diagrams', 'Lambda module diagrams and algebra isomorphism', _plan_lambda, _check_lambda, 10),
    Suite('cli', 'Parse/format round trip on the expression corpus', _plan_corpus, _check_corpus, None),
]}

SUITE_NAMES = list(SUITES) + ['all']


def _run_task(args: Tuple[str, SuiteContext, Task]) -> CheckResult:
    name, ctx, task = args
    return SUITES[name].check(ctx, task)


class Verifier:
    """Runs suites with settings from the environment unless overridden per call"""

    def __init__(self):
        self.seed = env_int('LADDER_SEED', 20030404)
        self.trials = env_int('LADDER_TRIALS', 1000)
        self.max_index = env_int('LADDER_MAX_INDEX')
        self.workers = max(1, env_int('LADDER_WORKERS', 1))

    def run_suite(self, name: str, trials: Optional[int] = None, seed: Optional[int] = None,
                  max_index: Optional[int] = None, max_degree: Optional[int] = None) -> SuiteReport:
        """
        Run one suite

        Args:
            name: Registered suite name (not 'all')
            trials: Randomized trial count
            seed: Master seed
            max_index: Index bound; suite default when None
            max_degree: Degree bound for Fock suites; suite default when None

        Returns:
            SuiteReport with failures sorted by their serialized form
        """
        if name not in SUITES:
            logger.warning(f"Unknown suite requested: {name}")
            raise KeyError(f"Unknown suite '{name}'; choose from {', '.join(SUITE_NAMES)}")
        suite = SUITES[name]
        bound = max_index if max_index is not None else self.max_index
        if bound is None or suite.default_max_index is None:
            bound = suite.default_max_index
        if bound is not None and bound < 1:
            raise AlgebraError(f"max_index must be at least 1, got {bound}")
        ctx = SuiteContext(
            suite=name,
            seed=self.seed if seed is None else seed,
            trials=self.trials if trials is None else trials,
            max_index=bound,
            max_degree=suite.default_max_degree if max_degree is None else max_degree,
        )
        with Timer(f"Suite {name}") as timer:
            tasks = suite.plan(ctx)
            jobs = [(name, ctx, task) for task in tasks]
            if self.workers > 1 and len(jobs) > 1:
                with ProcessPoolExecutor(max_workers=self.workers) as pool:
                    results = list(pool.map(_run_task, jobs, chunksize=max(1, len(jobs) // (4 * self.workers))))
            else:
                results = [_run_task(job) for job in jobs]
        checks = sum(count for count, _ in results)
        failures = [f for _, found in results for f in found]
        failures.sort(key=lambda f: json.dumps(f, sort_keys=True))
        report = SuiteReport(name, ctx.seed, ctx.trials, ctx.max_index, ctx.max_degree, checks,
                             failures, timer.elapsed_ms)
        logger.info(f"Suite {name}: {checks} checks, {len(failures)} failures")
        return report

    def run(self, name: str, **kwargs) -> List[SuiteReport]:
        """Run one suite, or every suite in registry order for 'all'"""
        names = list(SUITES) if name == 'all' else [name]
        return [self.run_suite(n, **kwargs) for n in names]


def run_suite(name: str, trials: Optional[int] = None, seed: Optional[int] = None,
              max_index: Optional[int] = None, max_degree: Optional[int] = None) -> SuiteReport:
    return Verifier().run_suite(name, trials=trials, seed=seed, max_index=max_index, max_degree=max_degree)


def report_line(report: SuiteReport) -> str:
    """Compact JSON line for report files and --format json output"""
    return json.dumps(report.to_dict(), sort_keys=True, separators=(',', ':'))


def deterministic_view(report: SuiteReport) -> Dict[str, Any]:
    """Report content that must be identical across runs with the same parameters"""
    data = report.to_dict()
    data.pop('elapsed_ms')
    return data
