#!/usr/bin/env python

from fractions import Fraction

import numpy as np

from spectral_sumrules.exactnum import as_rational, rational_str
from spectral_sumrules.errors import EmptyEigenspace, InsufficientCutoff, InsufficientLevels, ZeroVector
from spectral_sumrules.torus import torus_spectrum, torus_spectrum_covering, eigenspace_vectors, norm_sq, inner
from spectral_sumrules.sumrule import QuadPoly, CheckReport, q_poly
from spectral_sumrules.sumrule.shifted import gap_samples

import logging
logger = logging.getLogger(__name__)

class FrameReport:
    r'''
    The frame operator $S = \sum_i p_i p_i^\top$ of one eigenspace, in units of $4\pi^2$ and with the off-diagonal entry multiplied by $b$ so that it stays rational.

    Attributes
    ----------
        tight: bool
            $S_{xy} = 0$ and $S_{xx} = S_{yy}$.
        S_xx, S_yy, S_xy_scaled: Fraction
        frame_constant_unnormalized: Fraction or None
            When tight, $c$ with $\sum_i\langle V, \nabla\bar f_i\rangle\nabla f_i = 4\pi^2 c\, V$ for $f_i = e^{2\pi i\langle p_i, x\rangle}$.
        predicted_constant: Fraction
            $M\nu/d$, what the constant must be for a tight frame.
            For $L^2$-normalized eigenfunctions both constants are divided by $|M| = b$.
    '''

    def __init__(self, mod, nu, multiplicity, S_xx, S_yy, S_xy_scaled, d=2):
        self.mod = mod
        self.nu = nu
        self.multiplicity = multiplicity
        self.S_xx = S_xx
        self.S_yy = S_yy
        self.S_xy_scaled = S_xy_scaled
        self.tight = (S_xy_scaled == 0 and S_xx == S_yy)
        self.frame_constant_unnormalized = S_xx if self.tight else None
        self.predicted_constant = Fraction(multiplicity) * nu / d

    def __str__(self):
        verdict = f'tight with constant {rational_str(self.S_xx)}·4pi^2' if self.tight else 'not tight'
        return f'FrameReport({self.mod}, nu={rational_str(self.nu)}: {verdict})'

    def __repr__(self):
        return str(self)

    def to_json(self):
        constant = self.frame_constant_unnormalized
        return {
            'kind': 'frame',
            'a': rational_str(self.mod.a),
            'b_sq': rational_str(self.mod.b_sq),
            'nu': rational_str(self.nu),
            'multiplicity': self.multiplicity,
            'tight': self.tight,
            'S_xx': rational_str(self.S_xx),
            'S_yy': rational_str(self.S_yy),
            'S_xy_scaled': rational_str(self.S_xy_scaled),
            'frame_constant_unnormalized': rational_str(constant) if constant is not None else None,
            'predicted_constant': rational_str(self.predicted_constant),
            'unit': '4pi^2',
            'normalization': f'divide by |M| = sqrt({rational_str(self.mod.b_sq)}) for L2-normalized eigenfunctions',
        }

def _shell(mod, nu):
    vectors = eigenspace_vectors(mod, nu)
    if not vectors:
        raise EmptyEigenspace(f'{mod} has no eigenvalue 4pi^2·{nu}.')
    return vectors

def _components(mod, vectors):
    r'''Rows $(n, m - na)$, the Cartesian components with the second scaled by $b$.'''
    return np.array([[Fraction(v.n), v.m - v.n * mod.a] for v in vectors], dtype=object)

def frame_check(mod, nu):
    r'''
    Whether the wave vectors at level ``nu`` form a tight frame of $\mathbb{R}^2$.

    Raises
    ------
        EmptyEigenspace
    '''
    nu = as_rational(nu)
    vectors = _shell(mod, nu)
    P = _components(mod, vectors)
    S = P.T @ P
    report = FrameReport(mod, nu, len(vectors), S[0, 0], S[1, 1] / mod.b_sq, S[0, 1])
    logger.debug(str(report))
    return report

def addition_formula_check(mod, nu):
    r'''
    Check the two addition formulas for the normalized exponentials $Y^k = e^{2\pi i\langle p_k, x\rangle}/\sqrt{|M|}$ at level ``nu``,

    .. math::
        \sum_k |Y^k|^2 = \frac{M}{|M|}
        \qquad
        \sum_k |\nabla Y^k|^2 = \frac{M \Lambda}{|M|}.

    Both sides carry the same factor $1/|M|$, which is dropped.
    Every $|e^{2\pi i\langle p, x\rangle}|^2$ is exactly 1, so the first becomes a count: the eigenspace must hold as many vectors as :func:`~.torus_spectrum` reports for ``nu``, closed under $p\to-p$.
    The second becomes $\operatorname{tr} S = M\nu$.
    Both are decided in exact arithmetic.
    '''
    nu = as_rational(nu)
    vectors = _shell(mod, nu)
    spectrum, _ = torus_spectrum(mod, nu)
    multiplicity = dict(spectrum.levels).get(nu, 0)
    symmetric = set(vectors) == {-v for v in vectors}
    density = symmetric and len(vectors) == multiplicity

    P = _components(mod, vectors)
    trace = sum(P[:, 0] ** 2) + sum(P[:, 1] ** 2) / mod.b_sq
    return density and trace == len(vectors) * nu

def first_shell(mod):
    r'''The wave vectors of the first nonzero level.'''
    _, shells = torus_spectrum_covering(mod, 1)
    return shells[1]

def _automatic_spectrum(mod, q, L):
    nu_q = norm_sq(mod, q)
    nu_max = Fraction(1)
    while True:
        spectrum, shells = torus_spectrum(mod, nu_max)
        if len(spectrum) > L and nu_max >= 2 * (spectrum.values[L - 1] + nu_q):
            return spectrum, shells
        nu_max *= 2

def _sides(mod, q, L, nu_max):
    r'''
    Both sides of the symmetrized sum rule for $H=-\Delta$ and $G = e^{2\pi i\langle q, x\rangle}$, summed over the first ``L`` levels,
    as polynomials in $\zeta = z/4\pi^2$ with the overall $(4\pi^2)^3$ removed.
    '''
    if L < 1:
        raise ValueError(f'L must be positive, got {L}.')
    if nu_max is None:
        spectrum, shells = _automatic_spectrum(mod, q, L)
    else:
        spectrum, shells = torus_spectrum(mod, nu_max)
    if len(spectrum) < L:
        raise InsufficientLevels(f'{spectrum} has fewer than {L} levels.')

    top = spectrum.values[L - 1]
    nu_q = norm_sq(mod, q)

    left, right = QuadPoly(), QuadPoly()
    for shell in shells[:L]:
        for p in shell:
            nu_j = norm_sq(mod, p)
            # ⟨[G*,[H,G]]⟩ = 2ν_q and ‖[H,G^±]φ_j‖² = (ν_q ± 2⟨p,q⟩)²
            left += QuadPoly.product(nu_j, nu_j, leading=2 * nu_q)
            left -= QuadPoly(0, 1, -nu_j) * (2 * nu_q**2 + 8 * inner(mod, p, q)**2)

            for shifted in (p + q, p - q):
                nu_k = norm_sq(mod, shifted)
                if nu_k > spectrum.cutoff:
                    raise InsufficientCutoff(f'{shifted} has nu={nu_k} beyond the cutoff {spectrum.cutoff}.')
                if nu_k > top:
                    right += QuadPoly.product(nu_j, nu_k, leading=nu_k - nu_j)

    return left, right, spectrum

def verify_sum_rule_identity(mod, q, L, nu_max=None):
    r'''
    Evaluate both sides of the sum rule

    .. math::
        \sum_{j\in J}\left[(z-\lambda_j)^2\langle[G^*,[H,G]]\phi_j,\phi_j\rangle - (z-\lambda_j)\frac{\|[H,G]\phi_j\|^2 + \|[H,G^*]\phi_j\|^2}{2}\right]
        = \sum_{j\in J}\sum_{k\notin J}(z-\lambda_j)(z-\lambda_k)(\lambda_k-\lambda_j)\left(|\langle G\phi_j,\phi_k\rangle|^2 + |\langle G^*\phi_j,\phi_k\rangle|^2\right)

    on the whole torus, where every matrix element is a Kronecker delta $[p_k = p_j \pm q]$ and $J$ is the first ``L`` levels.

    Parameters
    ----------
        mod: TorusModuli
        q: DualVector
        L: int
        nu_max: rational-like or None
            Enumeration cutoff; by default one large enough for every $p_j\pm q$.

    Raises
    ------
        InsufficientCutoff
            when some $p_j \pm q$ lies beyond ``nu_max``.
    '''
    if q.is_zero():
        return CheckReport('sumrule-exact', True, QuadPoly(), [], f'{mod}, q=(0,0): G is constant and both sides vanish')

    left, right, spectrum = _sides(mod, q, L, nu_max)
    residual = left - right
    witnesses = [(z, residual(z)) for z in spectrum.values[:L + 1]]
    notes = f'{mod}, q={q}, L={L}: left = {left}, right = {right}'
    report = CheckReport('sumrule-exact', residual.is_zero(), residual, witnesses, notes)
    if not report.holds:
        logger.error(f'The exact sum rule fails for {mod}, q={q}, L={L}: {residual}.')
    return report

def sign_bound_check(mod, q, L, z_samples=None, nu_max=None):
    r'''
    Check that the left side of :func:`verify_sum_rule_identity` is at most

    .. math::
        (z-\lambda_{N})(z-\lambda_{N+1})\sum_{j\in J}\langle[G^*,[H,G]]\phi_j,\phi_j\rangle = 2\nu_q N (z-\lambda_{N})(z-\lambda_{N+1})

    for $z$ between the top level of $J$ and the next one, where $N$ counts the eigenfunctions in $J$.

    Raises
    ------
        ZeroVector
        SampleOutOfRange
    '''
    if q.is_zero():
        raise ZeroVector('The sign bound needs a nonconstant G.')
    if nu_max is None:
        spectrum, _ = _automatic_spectrum(mod, q, L)
        nu_max = spectrum.cutoff

    left, _, spectrum = _sides(mod, q, L, nu_max)
    if len(spectrum) <= L:
        raise InsufficientLevels(f'The sign bound needs level {L}, past the top of {spectrum}.')

    N = spectrum.counts[L - 1]
    lower, upper = spectrum.values[L - 1], spectrum.values[L]
    bound = q_poly(lower, upper, N) * (2 * norm_sq(mod, q))

    residual = left - bound
    witnesses = [(z, residual(z)) for z in gap_samples(lower, upper, z_samples)]
    return CheckReport('sign-bound', all(value <= 0 for _, value in witnesses), residual, witnesses, f'{mod}, q={q}, L={L}', N=N)

def averaged_sum_rule_check(mod, L, nu_max=None):
    r'''
    The sum rule averaged over every $q$ in the first shell.
    Holds when the averaged sides agree coefficientwise.
    '''
    shell = first_shell(mod)
    left, right = QuadPoly(), QuadPoly()
    for q in shell:
        l, r, _ = _sides(mod, q, L, nu_max)
        left += l
        right += r
    left, right = left / len(shell), right / len(shell)
    residual = left - right
    return CheckReport('averaged-sum-rule', residual.is_zero(), residual, [],
                       f'{mod}, L={L}, averaged over {len(shell)} q: left = {left}, right = {right}')
