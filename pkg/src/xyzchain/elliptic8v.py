"""Jacobi elliptic/theta functions, eight-vertex Boltzmann weights, and the
numeric transfer-matrix checks that tie them to the spin chain.

Everything here is double precision; the exact-arithmetic side of the
package never depends on this module.  Theta conventions:
H(v)  = 2 sum_{n>=0} (-1)^n q^{(n+1/2)^2} sin((2n+1) pi v / 2K),
Theta(v) = 1 + 2 sum_{n>=1} (-1)^n q^{n^2} cos(n pi v / K), q = exp(-pi K'/K),
cross-checked elsewhere against sn = H / (sqrt(k) Theta).
"""

import math
from dataclasses import dataclass

import numpy as np

from .basis import shift_bits, shift_matrix, up_count
from .polyvec import CheckReport

ETA_CHOICES = {"2K/3": 2 / 3, "-2K/3": -2 / 3, "4K/3": 4 / 3, "-4K/3": -4 / 3}


def complete_elliptic_k(k):
    """Complete elliptic integral of the first kind via the AGM."""
    if not 0 <= k < 1:
        raise ValueError(f"modulus must satisfy 0 <= k < 1, got {k}")
    a, b = 1.0, math.sqrt(1.0 - k * k)
    for _ in range(60):
        if abs(a - b) <= 2e-16 * a:
            break
        a, b = (a + b) / 2, math.sqrt(a * b)
    return math.pi / (2 * a)


def jacobi_functions(v, k):
    """(sn, cn, dn) at real argument v, by the descending AGM recurrence."""
    if not 0 <= k < 1:
        raise ValueError(f"modulus must satisfy 0 <= k < 1, got {k}")
    if k < 1e-14:
        return math.sin(v), math.cos(v), 1.0
    a = [1.0]
    b = [math.sqrt(1.0 - k * k)]
    c = [k]
    while abs(c[-1]) > 1e-16 and len(a) < 60:
        an, bn = a[-1], b[-1]
        a.append((an + bn) / 2)
        b.append(math.sqrt(an * bn))
        c.append((an - bn) / 2)
    m = len(a) - 1
    phi = (2.0 ** m) * a[m] * v
    phis = [phi]
    for i in range(m, 0, -1):
        phi = (phi + math.asin(max(-1.0, min(1.0, c[i] / a[i] * math.sin(phi))))) / 2
        phis.append(phi)
    phi0 = phis[-1]
    phi1 = phis[-2] if len(phis) > 1 else phi0
    sn = math.sin(phi0)
    cn = math.cos(phi0)
    dn = cn / math.cos(phi1 - phi0)
    return sn, cn, dn


@dataclass
class EllipticParams:
    """Modulus, quarter periods, nome, crossing parameter and normalization."""
    k: float
    kprime: float
    bigk: float
    bigkprime: float
    nome_q: float
    eta: float
    rho: float = 1.0
    eta_choice: str = "2K/3"


def make_params(k, eta_choice="2K/3", rho=1.0):
    if eta_choice not in ETA_CHOICES:
        raise ValueError(f"eta must be one of {sorted(ETA_CHOICES)}")
    if not 0 <= k < 1:
        raise ValueError(f"modulus must satisfy 0 <= k < 1, got {k}")
    kprime = math.sqrt(1.0 - k * k)
    bigk = complete_elliptic_k(k)
    if k == 0:
        # trigonometric limit: infinite second period, vanishing nome
        bigkprime, q = math.inf, 0.0
    else:
        bigkprime = complete_elliptic_k(kprime)
        q = math.exp(-math.pi * bigkprime / bigk)
    return EllipticParams(k=k, kprime=kprime, bigk=bigk, bigkprime=bigkprime,
                          nome_q=q, eta=ETA_CHOICES[eta_choice] * bigk, rho=rho,
                          eta_choice=eta_choice)


def theta_functions(v, params):
    """(H(v), Theta(v)) by q-series, truncated when terms drop below 1e-17."""
    q = params.nome_q
    x = math.pi * v / (2 * params.bigk)
    if q == 0.0:
        # trigonometric limit with the overall 2 q^(1/4) factor removed;
        # `weights` compensates by dropping the subleading d weight
        return math.sin(x), 1.0
    h = 0.0
    n = 0
    while True:
        term = q ** ((n + 0.5) ** 2)
        if term < 1e-17:
            break
        h += (-1) ** n * term * math.sin((2 * n + 1) * x)
        n += 1
    h *= 2.0
    theta = 1.0
    n = 1
    while True:
        term = q ** (n * n)
        if term < 1e-17:
            break
        theta += 2.0 * (-1) ** n * term * math.cos(2 * n * x)
        n += 1
    return h, theta


def phi_function(v, params):
    """rho * Theta(0) * H(v) * Theta(v), the building block of the simple
    transfer-matrix eigenvalue."""
    h, theta = theta_functions(v, params)
    _, theta0 = theta_functions(0.0, params)
    return params.rho * theta0 * h * theta


@dataclass
class BoltzmannWeights:
    a: float
    b: float
    c: float
    d: float


def weights(v, params):
    eta, rho = params.eta, params.rho
    h2, t2 = theta_functions(2 * eta, params)
    hm, tm = theta_functions(v - eta, params)
    hp, tp = theta_functions(v + eta, params)
    return BoltzmannWeights(
        a=rho * t2 * tm * hp,
        b=rho * t2 * hm * tp,
        c=rho * h2 * tm * tp,
        d=rho * h2 * hm * hp if params.nome_q > 0.0 else 0.0,
    )


def alpha_of_k(k, eta_choice="2K/3"):
    """Anisotropy k * sn^2(2 eta) at the crossing point."""
    if k == 0:
        return 0.0
    params = make_params(k, eta_choice)
    sn, _, _ = jacobi_functions(2 * params.eta, k)
    return k * sn * sn


def condition_residual(params):
    """Residual of 1 - k^2 sn^4(2 eta) + 2 cn(2 eta) dn(2 eta)."""
    sn, cn, dn = jacobi_functions(2 * params.eta, params.k)
    return 1.0 - params.k ** 2 * sn ** 4 + 2.0 * cn * dn


@dataclass
class TransferMatrix:
    n: int
    entries: np.ndarray
    spectral_v: float
    inhomogeneities: tuple = ()


def _vertex_tensor(v, params):
    w = weights(v, params)
    m = np.array([[w.a, 0, 0, w.d],
                  [0, w.b, w.c, 0],
                  [0, w.c, w.b, 0],
                  [w.d, 0, 0, w.a]])
    return m.reshape(2, 2, 2, 2)  # [a_out, s_out, a_in, s_in]


def transfer_matrix(v, params, n, inhomogeneities=()):
    """Row-to-row transfer matrix as a dense 2^n x 2^n array.

    Built as the auxiliary-space trace of the ordered product of vertex
    tensors; vertex j carries spectral argument v - v_j in the inhomogeneous
    case.  Site j occupies bit j-1 of the state index.
    """
    if n % 2 == 0 or n > 9:
        raise ValueError("transfer matrices are built for odd n <= 9 only")
    if inhomogeneities and len(inhomogeneities) != n:
        raise ValueError("need one inhomogeneity per site")
    g = np.zeros((2, 2, 1, 1))
    g[0, 0, 0, 0] = g[1, 1, 0, 0] = 1.0
    for j in range(n):
        vj = v - (inhomogeneities[j] if inhomogeneities else 0.0)
        w = _vertex_tensor(vj, params)
        dim = g.shape[2]
        g = np.einsum("xmuv,msbt->xbsutv", g, w).reshape(2, 2, 2 * dim, 2 * dim)
    t = g[0, 0] + g[1, 1]
    return TransferMatrix(n=n, entries=t, spectral_v=v,
                          inhomogeneities=tuple(inhomogeneities))


def defect_shift(v, params, n):
    """U(v): the one-defect shift operator; at v = eta it reduces to
    a(eta) times the plain left-shift."""
    eta = params.eta
    w_eta = weights(eta, params)
    inho = (0.0,) + (v - eta,) * (n - 1)
    t = transfer_matrix(v, params, n, inhomogeneities=inho)
    return t.entries / w_eta.a ** (n - 1)


# -- identity suites --------------------------------------------------------

def check_weight_invariants(params, n_points=10, tol=1e-10, seed=7):
    """Spectral-parameter independence of the two weight combinations, the
    equal-weight point v = eta, and the elegant quartic condition."""
    rng = np.random.default_rng(seed)
    k, eta = params.k, params.eta
    sn, cn, dn = jacobi_functions(2 * eta, k)
    inv1_target = 2 * cn * dn
    inv2_target = k * sn * sn
    worst = 0.0
    for v in rng.uniform(0.05, 1.9 * params.bigk, n_points):
        w = weights(float(v), params)
        inv1 = (w.a ** 2 + w.b ** 2 - w.c ** 2 - w.d ** 2) / (w.a * w.b)
        inv2 = w.c * w.d / (w.a * w.b)
        ab = w.a * w.b
        elegant = abs((w.a ** 2 + ab) * (w.b ** 2 + ab)
                      - (w.c ** 2 + ab) * (w.d ** 2 + ab))
        elegant /= max(1.0, abs((w.a ** 2 + ab) * (w.b ** 2 + ab)))
        worst = max(worst, abs(inv1 - inv1_target), abs(inv2 - inv2_target),
                    elegant)
    w = weights(eta, params)
    point = max(abs(w.b), abs(w.d), abs(w.a - w.c))
    worst = max(worst, point)
    return CheckReport("weight_invariants", worst < tol,
                       {"max_residual": worst, "tolerance": tol})


def check_inversion(params, n, n_points=10, tol=1e-10, seed=11):
    """T = phi^n solves the inversion relation with vanishing P, and the
    constant (a+b)/phi carries the sign fixed by the eta branch."""
    rng = np.random.default_rng(seed)
    eta = params.eta
    worst = 0.0
    for v in rng.uniform(0.1, 1.5 * params.bigk, n_points):
        v = float(v)
        lhs = phi_function(v - eta, params) ** n * phi_function(v + eta, params) ** n
        rhs = phi_function(v - 2 * eta, params) ** n * phi_function(v + 2 * eta, params) ** n
        worst = max(worst, abs(lhs - rhs) / max(1.0, abs(rhs)))
        quarter = abs(phi_function(v + 2 * params.bigk, params) + phi_function(v, params))
        worst = max(worst, quarter / max(1.0, abs(phi_function(v, params))))
    v0 = 0.31 * params.bigk
    w = weights(v0, params)
    ratio = (w.a + w.b) / phi_function(v0, params)
    # the constant (a+b)/phi depends only on |eta|: +1 at 2K/3, -1 at 4K/3
    expected = 1.0 if params.eta_choice in ("2K/3", "-2K/3") else -1.0
    sign_err = abs(ratio - expected)
    ok = worst < tol and sign_err < tol
    return CheckReport("inversion_relation", ok,
                       {"max_residual": worst, "sign": ratio,
                        "expected_sign": expected, "tolerance": tol})


def check_commutation(params, n=3, tol=1e-10, seed=13):
    rng = np.random.default_rng(seed)
    v1, v2 = rng.uniform(0.1, 1.3 * params.bigk, 2)
    t1 = transfer_matrix(float(v1), params, n).entries
    t2 = transfer_matrix(float(v2), params, n).entries
    comm = np.linalg.norm(t1 @ t2 - t2 @ t1)
    rel = comm / (np.linalg.norm(t1) * np.linalg.norm(t2))
    return CheckReport("transfer_commutation", rel < tol,
                       {"relative_commutator": rel, "tolerance": tol})


def _dense_h(jx, jy, jz, n):
    dim = 1 << n
    h = np.zeros((dim, dim))
    if n == 1:
        return -0.5 * (jx + jy + jz) * np.eye(2)
    for s in range(dim):
        corr = n - 2 * up_count(s ^ shift_bits(s, n))
        h[s, s] += -0.5 * jz * corr
        for j in range(n):
            kk = (j + 1) % n
            mask = (1 << j) | (1 << kk)
            parallel = (s >> j & 1) == (s >> kk & 1)
            amp = -0.5 * (jx - jy) if parallel else -0.5 * (jx + jy)
            h[s ^ mask, s] += amp
    return h


def weight_derivatives(params, h=1e-5):
    """Central-difference derivatives of the four weights at v = eta."""
    wp = weights(params.eta + h, params)
    wm = weights(params.eta - h, params)
    return tuple((x - y) / (2 * h) for x, y in
                 [(wp.a, wm.a), (wp.b, wm.b), (wp.c, wm.c), (wp.d, wm.d)])


def check_hamiltonian_link(params, n, tol=1e-5):
    """Logarithmic derivative of the transfer matrix at v = eta against the
    chain Hamiltonian with the weight-derivative couplings."""
    if n > 7:
        raise ValueError("hamiltonian link check limited to n <= 7")
    h = 1e-5
    eta = params.eta
    t0 = transfer_matrix(eta, params, n).entries
    tp = transfer_matrix(eta + h, params, n).entries
    tm = transfer_matrix(eta - h, params, n).entries
    tprime = (tp - tm) / (2 * h)
    lhs = np.linalg.solve(t0, tprime)
    ap, bp, cp, dp = weight_derivatives(params, h=h)
    a_eta = weights(eta, params).a
    jx, jy, jz = bp + dp, bp - dp, ap - cp
    rhs = (n / (2 * a_eta)) * (ap + cp) * np.eye(1 << n) \
        - _dense_h(jx, jy, jz, n) / a_eta
    rel = np.linalg.norm(lhs - rhs) / np.linalg.norm(rhs)
    return CheckReport("hamiltonian_link", rel < tol,
                       {"relative_error": rel, "tolerance": tol})


def check_eigenvalue(params, n, vec_values, n_points=5, tol=1e-8, seed=17):
    """T(v) Psi = (a+b)^n Psi for the polynomial vector evaluated at
    alpha(k); vec_values is the full 2^n component vector."""
    rng = np.random.default_rng(seed)
    psi = np.asarray(vec_values, dtype=float)
    norm = np.linalg.norm(psi)
    worst = 0.0
    for v in rng.uniform(0.1, 1.4 * params.bigk, n_points):
        v = float(v)
        t = transfer_matrix(v, params, n).entries
        w = weights(v, params)
        resid = np.linalg.norm(t @ psi - (w.a + w.b) ** n * psi)
        worst = max(worst, resid / (abs(w.a + w.b) ** n * norm))
    return CheckReport("transfer_eigenvalue", worst < tol,
                       {"max_relative_residual": worst, "tolerance": tol})


def check_inhomogeneous_eigenvalue(params, n, n_points=3, tol=1e-8, seed=19):
    """The product eigenvalue of the inhomogeneous family appears in the
    spectrum of the inhomogeneous transfer matrix."""
    rng = np.random.default_rng(seed)
    inho = tuple(rng.uniform(-0.2, 0.2, n))
    worst = 0.0
    for v in rng.uniform(0.3, 1.2 * params.bigk, n_points):
        v = float(v)
        t = transfer_matrix(v, params, n, inhomogeneities=inho).entries
        target = 1.0
        for vj in inho:
            w = weights(v - vj, params)
            target *= w.a + w.b
        eigs = np.linalg.eigvals(t)
        worst = max(worst, float(np.min(np.abs(eigs - target))) / abs(target))
    return CheckReport("inhomogeneous_eigenvalue", worst < tol,
                       {"max_relative_gap": worst, "tolerance": tol})


def _even_sector_states(n):
    return [s for s in range(1 << n) if up_count(s) % 2 == 0]


def _defect_ratio(v, params, n, tol_eig=1e-8):
    """Eigenvector of U(v) in the even sector and its pair-orientation ratio."""
    u = defect_shift(v, params, n)
    states = _even_sector_states(n)
    ub = u[np.ix_(states, states)]
    w = weights(v, params)
    target = w.a + w.b
    vals, vecs = np.linalg.eig(ub)
    idx = int(np.argmin(np.abs(vals - target)))
    if abs(vals[idx] - target) / abs(target) > tol_eig:
        raise ArithmeticError("expected eigenvalue missing from the defect "
                              "shift operator")
    phi = np.zeros(1 << n, dtype=complex)
    for s, x in zip(states, vecs[:, idx]):
        phi[s] = x
    anti = sum(phi[s] for s in states if n > 1 and (s & 1) != (s >> 1 & 1))
    para = sum(phi[s] for s in states if n == 1 or (s & 1) == (s >> 1 & 1))
    return phi, complex(anti / para)


def numeric_ground_vector(vec, alpha):
    """Full-basis float expansion of an integer polynomial vector."""
    from fractions import Fraction

    from .polyvec import evaluate

    return np.array([float(x)
                     for x in evaluate(vec, Fraction(alpha), "even")])


def run_elliptic_suite(k, n_values=(3, 5, 7), ground_vectors=None,
                       inhomogeneous_n=(3, 5)):
    """All numeric checks for one elliptic modulus; returns CheckReports.

    ground_vectors maps n to the full-basis numeric eigenvector at
    alpha(k); missing entries are computed from scratch.
    """
    from .polyvec import compute_ground_state

    params = make_params(k)
    alpha = alpha_of_k(k)
    if ground_vectors is None:
        ground_vectors = {}
    reports = [check_weight_invariants(params)]
    for n in n_values:
        r = check_inversion(params, n)
        r.details["n"] = n
        reports.append(r)
    reports.append(check_commutation(params, n=min(n_values)))
    for n in n_values:
        r = check_hamiltonian_link(params, n)
        r.details["n"] = n
        reports.append(r)
    for n in n_values:
        psi = ground_vectors.get(n)
        if psi is None:
            vec, _ = compute_ground_state(n)
            psi = numeric_ground_vector(vec, alpha)
        r = check_eigenvalue(params, n, psi)
        r.details["n"] = n
        reports.append(r)
    for n in inhomogeneous_n:
        r = check_inhomogeneous_eigenvalue(params, n)
        r.details["n"] = n
        reports.append(r)
    for n in n_values:
        r = check_defect_equations(params, n)
        r.details["n"] = n
        reports.append(r)
    return reports


def check_defect_equations(params, n, tol=1e-8, shift_tol=1e-10,
                           extrap_tol=1e-6):
    """The defect shift at v = eta is the plain shift; off eta its eigenvector
    satisfies the two-term recursions and the pair-orientation ratio, whose
    v -> eta limit reproduces the exact antiferromagneticity ratio."""
    eta = params.eta
    a_eta = weights(eta, params).a
    u_eta = defect_shift(eta, params, n) / a_eta
    shift_dev = float(np.max(np.abs(u_eta - shift_matrix(n))))
    v = eta + 0.1
    w = weights(v, params)
    phi, ratio = _defect_ratio(v, params, n)
    lam = w.a + w.b
    worst_rec = 0.0
    scale = float(np.max(np.abs(phi))) * abs(lam)
    for s in range(1 << n):
        # in this site-ordering convention the defect recursion closes onto
        # the plainly shifted configuration
        t = shift_bits(s, n)
        if (s & 1) == (s >> 1 & 1):
            lhs = w.a * phi[s] + w.d * phi[s ^ 3]
        else:
            lhs = w.c * phi[s] + w.b * phi[s ^ 3]
        worst_rec = max(worst_rec, abs(lhs - lam * phi[t]) / scale)
    ratio_dev = abs(ratio - (w.d - w.b) / (w.a - w.c))
    # Richardson extrapolation of the ratio to v = eta
    hs = [0.05, 0.04, 0.03, 0.02, 0.01]
    rs = [(_defect_ratio(eta + h, params, n)[1]).real for h in hs]
    extrap = float(np.polyval(np.polyfit(hs, rs, len(hs) - 1), 0.0))
    sn, _, _ = jacobi_functions(2 * params.eta, params.k)
    alpha = params.k * sn * sn
    limit_err = abs(extrap - 2.0 / (alpha + 1.0))
    ok = (shift_dev < shift_tol and worst_rec < tol and ratio_dev < tol
          and limit_err < extrap_tol)
    return CheckReport("defect_shift", ok,
                       {"shift_deviation": shift_dev,
                        "recursion_residual": worst_rec,
                        "ratio_deviation": ratio_dev,
                        "extrapolated_limit": extrap,
                        "exact_limit": 2.0 / (alpha + 1.0),
                        "limit_error": limit_err,
                        "tolerances": {"shift": shift_tol, "recursion": tol,
                                       "extrapolation": extrap_tol}})
