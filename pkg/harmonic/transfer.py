# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
"""
Transfer operators.

On the group:   (Phi_mu f)(g) = sum_s mu(s) f(g s)
On an action:   (P_mu f)(x)  = sum_g mu(g) f(g x)

A function is harmonic when it is fixed by the operator. The checks below
compare both sides of the operator identities exactly in exact mode.
"""
from exact.weights import as_weight, weight_tolerance
from measures.convolution import convolve, pushforward_inverse, translate
from .functions import PointFunction


def transfer_on_group(mu, f, g, group):
    return sum((w * f(group.mul(g, s)) for s, w in mu.items()), as_weight(0))


def transfer_on_action(mu, f, x, space):
    return sum((w * f(space.act(g, x)) for g, w in mu.items()), as_weight(0))


def transfer_function(mu, f, group):
    """Phi_mu f as a function on the group."""
    return PointFunction('Phi[{}]'.format(getattr(f, 'name', 'f')), lambda g: transfer_on_group(mu, f, g, group),
                         bound=getattr(f, 'bound', 1))


def action_transfer_function(mu, f, space):
    return PointFunction('P[{}]'.format(getattr(f, 'name', 'f')), lambda x: transfer_on_action(mu, f, x, space),
                         bound=getattr(f, 'bound', 1))


def restrict_to_orbit(f, x, space):
    """f|x : g -> f(g^-1 x)."""
    group = space.group
    return PointFunction('{}|{}'.format(getattr(f, 'name', 'f'), space.format_point(x)),
                         lambda g: f(space.act(group.inv(g), x)), bound=getattr(f, 'bound', 1))


def harmonic_residual_action(f, mu, sample, space):
    """max over the sample of |f(x) - P_mu f(x)|."""
    return max((abs(f(x) - transfer_on_action(mu, f, x, space)) for x in sample), default=as_weight(0))


def harmonic_residual_group(f, mu, sample, group):
    return max((abs(f(g) - transfer_on_group(mu, f, g, group)) for g in sample), default=as_weight(0))


def harmonic_transfer_check(f, mu, x, gsample, space):
    """|f|x(h) - Phi_{mu*}(f|x)(h)| against |f(h^-1 x) - P_mu f(h^-1 x)| for each h."""
    group = space.group
    restricted = restrict_to_orbit(f, x, space)
    mu_star = pushforward_inverse(mu, group)
    rows = []
    for h in gsample:
        lhs = abs(restricted(h) - transfer_on_group(mu_star, restricted, h, group))
        y = space.act(group.inv(h), x)
        rhs = abs(f(y) - transfer_on_action(mu, f, y, space))
        rows.append({'h': h, 'group_residual': lhs, 'action_residual': rhs,
                     'equal': abs(lhs - rhs) <= weight_tolerance()})
    return {'rows': rows, 'ok': all(r['equal'] for r in rows)}


def transfer_identities_check(mu, nu, f, g, h, group):
    """Phi_{mu nu} = Phi_mu Phi_nu, Phi_mu(f o lambda_g) = (Phi_mu f) o lambda_g and
    Phi_{g mu} f = (Phi_mu f) o rho_g, each evaluated at h."""
    tol = weight_tolerance()
    phi_nu_f = transfer_function(nu, f, group)
    semigroup = (transfer_on_group(convolve(mu, nu, group), f, h, group),
                 transfer_on_group(mu, phi_nu_f, h, group))
    f_left = PointFunction('f.lambda_g', lambda y: f(group.mul(g, y)))
    left = (transfer_on_group(mu, f_left, h, group), transfer_on_group(mu, f, group.mul(g, h), group))
    right = (transfer_on_group(translate(g, mu, group), f, h, group),
             transfer_on_group(mu, f, group.mul(h, g), group))
    report = {}
    for name, (a, b) in (('semigroup', semigroup), ('left_translation', left), ('right_translation', right)):
        report[name] = {'lhs': a, 'rhs': b, 'holds': abs(a - b) <= tol}
    report['ok'] = all(report[k]['holds'] for k in ('semigroup', 'left_translation', 'right_translation'))
    return report


def restriction_law_check(f, x, g, h, space):
    """f|x o rho_g = (f o tau_g)|x at h, with tau_g(y) = g^-1 y."""
    group = space.group
    lhs = restrict_to_orbit(f, x, space)(group.mul(h, g))
    f_tau = PointFunction('f.tau_g', lambda y: f(space.act(group.inv(g), y)))
    rhs = restrict_to_orbit(f_tau, x, space)(h)
    return {'lhs': lhs, 'rhs': rhs, 'holds': abs(lhs - rhs) <= weight_tolerance()}
