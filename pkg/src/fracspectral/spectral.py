"""Fractional derivative and momentum operators as Fourier multipliers.

The transform pair uses the symmetric 1/sqrt(2*pi) normalization.  The
fractional power of (ip) takes the principal branch of the purely imaginary
base:

    (ip)^a = |p|^a * exp(i*sign(p)*a*pi/2)

which for p > 0 equals i^a p^a with i^a = cos(a*pi/2) + i*sin(a*pi/2).  The
momentum symbol divides that phase out:

    p^a = (ip)^a / i^a = |p|^a for p > 0,  |p|^a e^{-i*a*pi} for p < 0.

Both are 0 at the p = 0 bin for a > 0 (the limit of |p|^a), 1 for a = 0.
Accuracy statements for non-integer a hold on the central half of the grid
only; see the module docstrings on boundary decay.
"""
import enum
from dataclasses import dataclass

import numpy as np

from .grid import GridMismatch, SampledSignal, Spectrum, central_window

SQRT_2PI = float(np.sqrt(2.0 * np.pi))

#: Signals whose boundary_decay exceeds this get a wrap-around warning
#: attached when differentiated to non-integer order.
DEFAULT_DECAY_THRESHOLD = 1e-10

# product_rule is a literal O(n^2) double sum; refuse grids where that cost
# stops being a few tens of milliseconds.
_PRODUCT_RULE_MAX_N = 512


class NegativeAlpha(ValueError):
    pass


class GridTooLarge(ValueError):
    pass


class PowerKind(enum.Enum):
    IP_POWER = "ip_power"
    P_POWER = "p_power"


class Pairing(enum.Enum):
    SESQUILINEAR = "sesquilinear"
    BILINEAR = "bilinear"


class MinusOneBranch(enum.Enum):
    """Which continuation of (-1)^a a duality check uses: e^{+i*a*pi} or e^{-i*a*pi}."""
    E_PLUS_I_PI = "e_plus_i_pi"
    E_MINUS_I_PI = "e_minus_i_pi"


def ip_power(alpha, p):
    """Multiplier (ip)^a on an array of frequencies, branch as above."""
    if alpha < 0:
        raise NegativeAlpha(f"alpha must be >= 0, got {alpha}")
    p = np.asarray(p, dtype=float)
    if alpha == 0:
        return np.ones_like(p, dtype=complex)
    return np.abs(p) ** alpha * np.exp(1j * np.sign(p) * (alpha * np.pi / 2))


def p_power(alpha, p):
    """Momentum symbol p^a = (ip)^a / i^a; real on p > 0, e^{-i*a*pi} phase on p < 0."""
    if alpha < 0:
        raise NegativeAlpha(f"alpha must be >= 0, got {alpha}")
    p = np.asarray(p, dtype=float)
    if alpha == 0:
        return np.ones_like(p, dtype=complex)
    phase = np.where(p < 0, np.exp(-1j * np.pi * alpha), 1.0 + 0.0j)
    return np.abs(p) ** alpha * phase


@dataclass(frozen=True)
class AlphaPower:
    """A branch-resolved fractional power of the frequency variable.

    kind selects between the derivative symbol (ip)^a and the momentum
    symbol p^a.  Instances are callables over frequency arrays and satisfy
    (ip)^a * (ip)^b = (ip)^(a+b) pointwise (same sign factor).
    """
    alpha: float
    kind: PowerKind

    def __post_init__(self):
        if self.alpha < 0:
            raise NegativeAlpha(f"alpha must be >= 0, got {self.alpha}")

    def __call__(self, p):
        if self.kind is PowerKind.IP_POWER:
            return ip_power(self.alpha, p)
        return p_power(self.alpha, p)


def forward(signal):
    """Transform samples to frequency coefficients.

    coeffs[k] = (dx/sqrt(2*pi)) * sum_j e^{-i p_k x_j} values[j], done with
    an FFT plus the e^{-i p_k x_min} phase for the grid offset.
    """
    g = signal.grid
    coeffs = (g.dx / SQRT_2PI) * np.exp(-1j * g.p * g.x_min) * np.fft.fft(signal.values)
    return Spectrum(g, coeffs)


def inverse(spectrum):
    """Inverse transform; inverse(forward(s)) == s to machine precision."""
    g = spectrum.grid
    values = (SQRT_2PI / g.dx) * np.fft.ifft(spectrum.coeffs * np.exp(1j * g.p * g.x_min))
    return SampledSignal(g, values)


def _apply_multiplier(signal, mult, warning=None):
    g = signal.grid
    coeffs = forward(signal).coeffs * mult
    values = (SQRT_2PI / g.dx) * np.fft.ifft(coeffs * np.exp(1j * g.p * g.x_min))
    return SampledSignal(g, values, warning=warning)


def _decay_warning(signal, alpha, threshold):
    if alpha == int(alpha):
        return None
    if signal.boundary_decay < threshold:
        return None
    return (f"boundary decay {signal.boundary_decay:.3e} above threshold "
            f"{threshold:.1e}; wrap-around may contaminate a non-integer order")


def fractional_derivative(signal, alpha, decay_threshold=DEFAULT_DECAY_THRESHOLD):
    """Derivative of real order alpha >= 0 via the (ip)^a multiplier.

    alpha = 0 returns the signal unchanged; integer alpha reproduces
    ordinary derivatives.  For non-integer alpha on a signal whose
    boundary_decay exceeds decay_threshold the result carries a warning
    string (periodization error is then not controlled).
    """
    if alpha < 0:
        raise NegativeAlpha(f"alpha must be >= 0, got {alpha}")
    if alpha == 0:
        return signal
    warning = _decay_warning(signal, alpha, decay_threshold)
    return _apply_multiplier(signal, ip_power(alpha, signal.grid.p), warning)


def fractional_momentum(signal, alpha, decay_threshold=DEFAULT_DECAY_THRESHOLD):
    """Fractional momentum operator: the p^a multiplier; order 1 is -i d/dx."""
    if alpha < 0:
        raise NegativeAlpha(f"alpha must be >= 0, got {alpha}")
    if alpha == 0:
        return signal
    warning = _decay_warning(signal, alpha, decay_threshold)
    return _apply_multiplier(signal, p_power(alpha, signal.grid.p), warning)


def order_continuity_gap(signal, n, k):
    """Sup distance, central half, between orders n + 1/k and n.

    As k grows this measures the continuity of the order parameter at the
    integer n; for rapidly decaying signals it must shrink (down to the
    discretization floor of the p = 0 bin).
    """
    if n < 0 or k < 1:
        raise ValueError(f"need n >= 0 and k >= 1, got n={n}, k={k}")
    d_frac = fractional_derivative(signal, n + 1.0 / k)
    d_int = fractional_derivative(signal, float(n))
    w = central_window(signal.grid.n)
    return float(np.max(np.abs(d_frac.values[w] - d_int.values[w])))


def _inner(u, v, dx, pairing):
    if pairing is Pairing.SESQUILINEAR:
        return complex(np.sum(np.conj(u) * v) * dx)
    return complex(np.sum(u * v) * dx)


def duality_residual(f, g, alpha, pairing, minus_one_branch):
    """Residual of moving a fractional derivative across a pairing.

    Returns <D^a f, g> - (-1)^a <f, D^a g> with the selected pairing
    (sesquilinear conjugates the first slot) and the selected continuation
    of (-1)^a.  Exact (to rounding) for integer alpha; for fractional alpha
    no branch/pairing combination vanishes -- callers treat the four
    combinations as a diagnostic table.
    """
    if f.grid != g.grid:
        raise GridMismatch(f"{f.grid} vs {g.grid}")
    df = fractional_derivative(f, alpha)
    dg = fractional_derivative(g, alpha)
    if minus_one_branch is MinusOneBranch.E_PLUS_I_PI:
        phase = np.exp(1j * np.pi * alpha)
    else:
        phase = np.exp(-1j * np.pi * alpha)
    dx = f.grid.dx
    return _inner(df.values, g.values, dx, pairing) - phase * _inner(f.values, dg.values, dx, pairing)


def pairing_continuity_gap(psi, f, h, alpha, n):
    """|<psi, D^a (f + h/n)> - <psi, D^a f>| under the sesquilinear pairing.

    Linearity makes this exactly |<psi, D^a h>| / n, so it must scale as
    1/n -- the discrete face of sequential continuity of the dual pairing.
    """
    if psi.grid != f.grid or f.grid != h.grid:
        raise GridMismatch("psi, f, h must share a grid")
    f_n = SampledSignal(f.grid, f.values + h.values / n)
    a = _inner(psi.values, fractional_derivative(f_n, alpha).values, f.grid.dx, Pairing.SESQUILINEAR)
    b = _inner(psi.values, fractional_derivative(f, alpha).values, f.grid.dx, Pairing.SESQUILINEAR)
    return abs(a - b)


def product_rule(f, g, alpha):
    """Fractional derivative of a pointwise product via the double frequency sum.

    Evaluates the literal double Riemann sum over both frequency grids,

        D^a(fg)(x) = (i^a / 2pi) sum_s sum_q e^{i(s+q)x} ghat(s) fhat(q) (s+q)^a dq ds,

    with (s+q)^a on the momentum branch so that i^a (s+q)^a recombines to
    the derivative symbol at argument s+q.  The inner regrouping by u = s+q
    is an exact rearrangement (a discrete convolution), not an
    approximation; cost is still O(n^2), hence the n <= 512 limit.
    """
    if f.grid != g.grid:
        raise GridMismatch(f"{f.grid} vs {g.grid}")
    if alpha < 0:
        raise NegativeAlpha(f"alpha must be >= 0, got {alpha}")
    grid = f.grid
    n = grid.n
    if n > _PRODUCT_RULE_MAX_N:
        raise GridTooLarge(f"product_rule is O(n^2); n={n} exceeds {_PRODUCT_RULE_MAX_N}")

    fs = np.fft.fftshift(forward(f).coeffs)
    gs = np.fft.fftshift(forward(g).coeffs)
    # signed bin indices after the shift run k_min .. k_min + n - 1
    k_min = -(n // 2)
    conv = np.convolve(gs, fs)  # index m holds sum over s+q = (2*k_min + m)*dp
    u = (2 * k_min + np.arange(conv.size)) * grid.dp
    weighted = p_power(alpha, u) * conv
    phases = np.exp(1j * np.outer(grid.x, u))
    i_alpha = np.exp(1j * np.pi * alpha / 2)
    values = (i_alpha / (2 * np.pi)) * (phases @ weighted) * grid.dp * grid.dp
    return SampledSignal(grid, values)
